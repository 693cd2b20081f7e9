from quiverdt.result import Verdict


def test_success():
    verdict = Verdict.success("plethystics", "20 series at order 8")
    assert verdict
    assert verdict.passed is True
    assert verdict.witness is None
    assert repr(verdict) == "<Verdict plethystics: pass>"
    assert verdict.to_json() == {
        "name": "plethystics",
        "passed": True,
        "witness": None,
        "detail": "20 series at order 8",
    }


def test_failure():
    verdict = Verdict.failure("quadratic_gb", ((2, 1), -6), "dimension 3")
    assert not verdict
    assert verdict.witness == ((2, 1), -6)
    assert repr(verdict) == "<Verdict quadratic_gb: fail at ((2, 1), -6)>"
    assert verdict.to_json()["witness"] == [[2, 1], -6]

    verdict = Verdict.failure("classification", "Quiver([[2]])", "mismatch")
    assert verdict.to_json()["witness"] == "Quiver([[2]])"
