from fractions import Fraction

import pytest

from quiverdt.exceptions import QuiverParseError
from quiverdt.formatter import (
    format_dim_vector,
    format_dt_table,
    format_dt_text,
    format_laurent_text,
    format_qrat,
    format_series,
    format_series_text,
    format_verdict,
    format_verdict_text,
    format_words,
    parse_qrat,
)
from quiverdt.lieword import one_vertex_basis
from quiverdt.motivic import dt_invariants
from quiverdt.qseries import ONE, ZERO, MSeries
from quiverdt.result import Verdict
from tests.helpers import geometric, laurent, u


def test_format_laurent_text():
    assert format_laurent_text(laurent((-1, 1), (0, 2), (1, 1))) == (
        "q^-1/2 + 2 + q^1/2"
    )
    assert format_laurent_text(u(2)) == "q"
    assert format_laurent_text(u(4)) == "q^2"
    assert format_laurent_text(u(-2)) == "q^-1"
    assert format_laurent_text(u(3, -3)) == "-3*q^3/2"
    assert format_laurent_text(ONE - u(2)) == "1 - q"
    assert format_laurent_text(laurent((0, Fraction(1, 2)))) == "1/2"
    assert format_laurent_text(ZERO) == "0"
    assert format_laurent_text(geometric(1)) == "(-q^1/2) / (-1 + q)"


def test_format_qrat():
    assert format_qrat(u(-1)) == {"num": [[1], 0], "den": [[1], 1]}
    assert format_qrat(u(2, 3)) == {"num": [[3], 2], "den": [[1], 0]}
    for value in (u(-1), geometric(1), ONE - u(4), ZERO):
        assert parse_qrat(format_qrat(value)) == value


def test_parse_qrat_malformed():
    for body in ({}, {"num": [[1], 0]}, {"num": 3, "den": [[1], 0]}, None):
        with pytest.raises(QuiverParseError):
            parse_qrat(body)
    with pytest.raises(QuiverParseError):
        parse_qrat({"num": [[1], 0], "den": [[0], 0]})


def test_format_dim_vector():
    assert format_dim_vector((1, 0)) == "(1,0)"
    assert format_dim_vector((3,)) == "(3)"


def test_format_dt_table(pair):
    table = dt_invariants(pair, 1)
    body = format_dt_table(table)
    assert body["invariants"][0] == {
        "d": [0, 1],
        "ker_dims": {"1": 1},
        "parity_class": 1,
        "dt": {"num": [[1], 0], "den": [[1], 1]},
        "dt_text": "q^-1/2",
        "numerical": 1,
    }
    assert [entry["d"] for entry in body["invariants"]] == [[0, 1], [1, 0]]
    assert format_dt_text(table) == ["DT(0,1) = q^-1/2", "DT(1,0) = q^-1/2"]


def test_format_dt_text_two_loops(two_loops):
    table = dt_invariants(two_loops, 2)
    assert format_dt_text(table) == ["DT(1) = q^1/2", "DT(2) = q^2"]


def test_format_series():
    series = MSeries(1, 2, {(0,): 1, (1,): u(2)})
    assert format_series(series) == {
        "nvars": 1,
        "order": 2,
        "coefficients": [
            {"d": [0], "value": {"num": [[1], 0], "den": [[1], 0]}},
            {"d": [1], "value": {"num": [[1], 2], "den": [[1], 0]}},
        ],
    }
    assert format_series_text(series) == ["(0): 1", "(1): q"]


def test_format_verdict():
    passed = Verdict.success("plethystics", "order 3")
    failed = Verdict.failure("dt_integrity", (1, 0), "negative coefficient")
    assert format_verdict_text(passed) == "plethystics: pass (order 3)"
    assert format_verdict_text(Verdict.success("x")) == "x: pass"
    assert format_verdict_text(failed) == (
        "dt_integrity: FAIL at (1, 0) (negative coefficient)"
    )
    assert format_verdict(failed)["witness"] == [1, 0]


def test_format_words():
    listing = format_words(one_vertex_basis(1, 1, 1))
    assert listing == [
        {"word": "b1", "multidegree": [1], "degree": 4},
        {"word": "b0", "multidegree": [1], "degree": 2},
    ]
