"""Acceptance report: every identity of the package checked on a fixed suite.

``run_selftest(full=False)`` runs reduced grids that finish in seconds;
``full=True`` runs the desk-scale grids (order-8 plethystics, exhaustive
two-vertex classification with entries up to 3).
"""
import logging
import random
from itertools import product
from typing import Callable, Iterator, List, Optional, Sequence

from quiverdt.executor import Executor, SerialExecutor
from quiverdt.grobner import (
    check_oracle_consistency,
    check_quadratic_gb,
    check_relation_families,
    check_relation_ranks,
    check_stated_leading_terms,
    expected_leading_terms,
    leading_terms,
)
from quiverdt.lieword import check_basis_character, check_pair_basis_character
from quiverdt.motivic import (
    check_change_of_variables,
    check_dt_integrity,
    check_numerical_koszulness,
    check_polynomiality,
    check_refinement,
    check_weyl_freeness,
    dt_cross_check,
    dt_invariants,
)
from quiverdt.partitions import check_partition_bijection
from quiverdt.qseries import ONE, MSeries, QRat, pleth_exp, pleth_log
from quiverdt.quiver import Quiver, almost_n_regular
from quiverdt.result import Verdict
from quiverdt.utils import dim_vectors, suppress_logging

logger = logging.getLogger(__name__)

QUIVER_SUITE = (
    Quiver([[0]]),
    Quiver([[1]]),
    Quiver([[2]]),
    Quiver([[3]]),
    Quiver([[0, 1], [1, 0]]),
    Quiver([[1, 1], [1, 1]]),
    Quiver([[2, 1], [1, 1]]),
    Quiver([[2, 2], [2, 2]]),
)

# (quiver, expected verdict of the weight-three Gröbner check)
THREE_VERTEX_SPOT_CHECKS = (
    (Quiver([[1, 1, 1], [1, 1, 1], [1, 1, 1]]), True),
    (Quiver([[2, 2, 2], [2, 2, 2], [2, 2, 2]]), True),
    (Quiver([[0, 1, 1], [1, 0, 2], [1, 2, 0]]), False),
)


def symmetric_quivers(n: int, max_entry: int) -> Iterator[Quiver]:
    """Yield every symmetric quiver on n vertices with entries <= max_entry."""
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    for values in product(range(max_entry + 1), repeat=len(cells)):
        arrows = [[0] * n for _ in range(n)]
        for (i, j), value in zip(cells, values):
            arrows[i][j] = arrows[j][i] = value
        yield Quiver(arrows)


def random_series(
    rng: random.Random, nvars: int, order: int, terms: int = 3
) -> MSeries:
    """Return a series in the maximal ideal with at most ``terms`` monomials.

    Coefficients are c * u^e with 0 < |c| <= 2 and |e| <= 2.
    """
    keys = dim_vectors(nvars, order, min_total=1)
    coeffs = {}
    for _ in range(rng.randint(1, terms)):
        d = rng.choice(keys)
        c = rng.choice([-2, -1, 1, 2])
        coeffs[d] = QRat.u(rng.randint(-2, 2), c)
    return MSeries(nvars, order, coeffs)


def plethystic_suite(
    count: int, order: int, nvars: int = 2, seed: int = 0
) -> List[MSeries]:
    rng = random.Random(seed)
    return [random_series(rng, nvars, order) for _ in range(count)]


def check_plethystics(count: int = 20, order: int = 8) -> Verdict:
    """Check Exp/Log round trips, the group law and the monomial rule.

    :param count: Size of the random suite.
    :type count: int
    :param order: Truncation order.
    :type order: int
    :return: Verdict; the witness is the suite index or the monomial.
    :rtype: quiverdt.result.Verdict
    """
    name = "plethystics"
    suite = plethystic_suite(count, order)
    exps = [pleth_exp(f) for f in suite]
    for index, (f, g) in enumerate(zip(suite, exps)):
        if pleth_log(g) != f:
            return Verdict.failure(name, index, "Log(Exp f) != f")
        other = index + 1 if index + 1 < count else 0
        if pleth_exp(f + suite[other]) != g * exps[other]:
            return Verdict.failure(name, index, "Exp(f + g) != Exp f * Exp g")
    for e in range(-2, 3):
        for d in product(range(3), repeat=2):
            if not any(d):
                continue
            f = MSeries.monomial(d, QRat.u(e), order)
            wanted = MSeries(
                2,
                order,
                {tuple(n * x for x in d): QRat.u(n * e) for n in range(order + 1)},
            )
            if pleth_exp(f) != wanted:
                return Verdict.failure(name, (e, d), "monomial rule")
    if pleth_exp(MSeries.monomial((1,), QRat.u(1, -1), order)) != MSeries(
        1, order, {(0,): ONE, (1,): QRat.u(1, -1)}
    ):
        return Verdict.failure(name, "-u x", "Exp(-u x) != 1 - u x")
    return Verdict.success(name, f"{count} series at order {order}")


def check_known_dt_values(order: int = 4) -> Verdict:
    """Check DT_(1) = u^(m-1) for m loops and the two-vertex table.

    For two vertices joined by one arrow each way, DT_(1,0) = DT_(0,1) = u^-1,
    DT_(1,1) = 1 and every other invariant vanishes.
    """
    name = "known_dt_values"
    for m in range(4):
        dt = dt_invariants(Quiver([[m]]), 1)[(1,)].dt
        if dt != QRat.u(m - 1):
            return Verdict.failure(name, (m,), f"DT_(1) = {dt!r}")
    expected = {(1, 0): QRat.u(-1), (0, 1): QRat.u(-1), (1, 1): ONE}
    for d, result in dt_invariants(Quiver([[0, 1], [1, 0]]), order).items():
        if result.dt != expected.get(d, QRat(0)):
            return Verdict.failure(name, d, f"DT = {result.dt!r}")
    return Verdict.success(name, f"order {order}")


def check_leading_closed_form(quivers: Sequence[Quiver], k_max: int) -> Verdict:
    """Check computed leading terms and ranks, flagging published-set deviations.

    Quivers whose mixed-vertex leading sets mirror the published ones still
    pass; they are named in the detail.
    """
    name = "leading_closed_form"
    mirrored: List[str] = []
    for q in quivers:
        if leading_terms(q, k_max) != expected_leading_terms(q, k_max):
            return Verdict.failure(name, repr(q), "leading set differs")
        ranks = check_relation_ranks(q, k_max)
        if not ranks:
            return Verdict.failure(name, (repr(q), ranks.witness), ranks.detail or "")
        stated = check_stated_leading_terms(q, k_max)
        if not stated:
            logger.warning(
                "%r differs from the published leading set at %s: %s",
                q,
                stated.witness,
                stated.detail,
            )
            mirrored.append(repr(q))
    detail = f"levels <= {k_max}"
    if mirrored:
        detail += f"; mirrored mixed-vertex sets: {', '.join(mirrored)}"
    return Verdict.success(name, detail)


def check_classification(
    quivers: Sequence[Quiver],
    spot_checks: Sequence = (),
    executor: Optional[Executor] = None,
) -> Verdict:
    """Compare the Gröbner check with the almost N-regular predicate.

    :param quivers: Quivers to classify.
    :type quivers: [quiverdt.quiver.Quiver]
    :param spot_checks: Extra (quiver, expected verdict) pairs.
    :type spot_checks: [(quiverdt.quiver.Quiver, bool)]
    :param executor: Passed to :func:`quiverdt.grobner.check_quadratic_gb`.
    :type executor: quiverdt.executor.SerialExecutor |
        quiverdt.executor.ThreadedExecutor | None
    :return: Verdict; the witness is the misclassified quiver.
    :rtype: quiverdt.result.Verdict
    """
    name = "classification"
    cases = [(q, almost_n_regular(q, allow_zero=True) is not None) for q in quivers]
    cases.extend(spot_checks)
    for q, expected in cases:
        verdict = check_quadratic_gb(q, executor=executor)
        if bool(verdict) != expected:
            return Verdict.failure(
                name, repr(q), f"Gröbner check {bool(verdict)}, expected {expected}"
            )
    return Verdict.success(name, f"{len(cases)} quivers")


def _over_suite(
    name: str, check: Callable[[Quiver], Verdict], quivers: Sequence[Quiver]
) -> Verdict:
    for q in quivers:
        verdict = check(q)
        if not verdict:
            return Verdict.failure(
                name, (repr(q), verdict.witness), verdict.detail or verdict.name
            )
    return Verdict.success(name, f"{len(quivers)} quivers")


def run_selftest(
    full: bool = False, executor: Optional[Executor] = None
) -> List[Verdict]:
    """Run the acceptance checks and return their verdicts in order.

    :param full: Run the desk-scale grids instead of the reduced ones.
    :type full: bool
    :param executor: Used by the Gröbner classification.
    :type executor: quiverdt.executor.SerialExecutor |
        quiverdt.executor.ThreadedExecutor | None
    :return: Verdicts.
    :rtype: [quiverdt.result.Verdict]
    """
    executor = executor or SerialExecutor()
    suite = list(QUIVER_SUITE)
    if full:
        classified = [q for n in (1, 2) for q in symmetric_quivers(n, 3)]
        spots = list(THREE_VERTEX_SPOT_CHECKS)
    else:
        classified = list(symmetric_quivers(1, 3)) + list(symmetric_quivers(2, 1))
        spots = []

    def weyl(q: Quiver) -> Verdict:
        return check_weyl_freeness(q, 4 if full else 3)

    steps: List[Callable[[], Verdict]] = [
        lambda: check_plethystics(20, 8) if full else check_plethystics(5, 4),
        lambda: _over_suite(
            "change_of_variables",
            lambda q: check_change_of_variables(q, 6 if full else 3),
            suite,
        ),
        lambda: _over_suite(
            "numerical_koszulness",
            lambda q: check_numerical_koszulness(q, 5 if full else 3),
            suite,
        ),
        lambda: _over_suite(
            "dt_integrity", lambda q: check_dt_integrity(q, 5 if full else 3), suite
        ),
        lambda: check_known_dt_values(4 if full else 3),
        lambda: _over_suite(
            "dt_cross_check", lambda q: dt_cross_check(q, 4 if full else 3), suite
        ),
        lambda: _over_suite(
            "polynomiality", lambda q: check_polynomiality(q, 4 if full else 3), suite
        ),
        lambda: _over_suite(
            "refinement", lambda q: check_refinement(q, 4 if full else 3), suite
        ),
        lambda: _over_suite("weyl_freeness", weyl, suite),
        lambda: _first_failure(
            "basis_character",
            [
                check_basis_character(m, 4 if full else 3, 24 if full else 12)
                for m in (1, 2, 3)
            ],
        ),
        lambda: check_pair_basis_character(4 if full else 3, 12),
        lambda: _first_failure(
            "partition_bijection",
            [
                check_partition_bijection(m, 4, 6)
                if full
                else check_partition_bijection(m, 3, 4)
                for m in ((1, 2, 3, 4) if full else (1, 2, 3))
            ],
        ),
        lambda: _first_failure(
            "relation_families",
            [
                check_relation_families(m, 12 if full else 6)
                for m in ((1, 2, 3, 4) if full else (1, 2))
            ],
        ),
        lambda: check_leading_closed_form(suite, 12 if full else 4),
        lambda: _over_suite(
            "oracle_consistency",
            lambda q: check_oracle_consistency(q, 3 if full else 2, 6),
            suite,
        ),
        lambda: check_classification(classified, spots, executor),
    ]
    verdicts: List[Verdict] = []
    for step in steps:
        with suppress_logging("quiverdt"):
            verdict = step()
        logger.info("%r", verdict)
        verdicts.append(verdict)
    return verdicts


def _first_failure(name: str, verdicts: Sequence[Verdict]) -> Verdict:
    for verdict in verdicts:
        if not verdict:
            return Verdict.failure(name, verdict.witness, verdict.detail or "")
    return Verdict.success(name, f"{len(verdicts)} cases")
