from quiverdt.executor import ThreadedExecutor
from quiverdt.quiver import Quiver
from quiverdt.selftest import (
    QUIVER_SUITE,
    THREE_VERTEX_SPOT_CHECKS,
    check_classification,
    check_known_dt_values,
    check_leading_closed_form,
    plethystic_suite,
    run_selftest,
    symmetric_quivers,
)
from tests.conftest import global_data


def test_symmetric_quivers():
    quivers = list(symmetric_quivers(2, 1))
    assert len(quivers) == 8
    assert Quiver([[0, 1], [1, 0]]) in quivers
    assert len(set(symmetric_quivers(1, 3))) == 4


def test_plethystic_suite_is_deterministic():
    first = plethystic_suite(5, 4)
    assert first == plethystic_suite(5, 4)
    assert all(f.in_maximal_ideal() and f.nvars == 2 for f in first)
    assert plethystic_suite(5, 4, seed=1) != first


def test_known_dt_values():
    assert check_known_dt_values(3)


def test_leading_closed_form():
    assert check_leading_closed_form(QUIVER_SUITE, global_data.k_max)


def test_leading_closed_form_names_mirrored_quivers(pair, two_loops):
    verdict = check_leading_closed_form([two_loops, pair], 3)
    assert verdict
    assert verdict.detail == (
        "levels <= 3; mirrored mixed-vertex sets: Quiver([[0, 1], [1, 0]])"
    )
    assert check_leading_closed_form([two_loops], 3).detail == "levels <= 3"


def test_classification_reports_misclassification():
    wrong = [(Quiver([[0, 1], [1, 0]]), True)]
    verdict = check_classification([], wrong)
    assert not verdict
    assert verdict.witness == "Quiver([[0, 1], [1, 0]])"


def test_three_vertex_spot_checks():
    if not global_data.complete:
        return
    assert check_classification([], THREE_VERTEX_SPOT_CHECKS, ThreadedExecutor(4))


def test_run_selftest():
    verdicts = run_selftest(full=global_data.complete)
    assert len(verdicts) == 16
    assert [v.name for v in verdicts if not v] == []
    assert verdicts[0].name == "plethystics"
    assert verdicts[-1].name == "classification"
