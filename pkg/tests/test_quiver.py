import json

import pytest

from quiverdt.exceptions import (
    DimensionMismatchError,
    QuiverInputError,
    QuiverParseError,
    QuiverValidationError,
)
from quiverdt.quiver import (
    Quiver,
    almost_n_regular,
    euler_form,
    parity_class,
    parse_quiver,
    square_norm,
)


def test_quiver_attributes(pair):
    assert pair.n == 2
    assert pair.arrows == ((0, 1), (1, 0))
    assert pair.m(0, 1) == 1
    assert pair.loops(1) == 0
    assert pair.max_arrows == 1
    assert pair.dim_vector([2, 3]) == (2, 3)
    assert pair == Quiver([[0, 1], [1, 0]])
    assert hash(pair) == hash(Quiver([[0, 1], [1, 0]]))
    assert repr(pair) == "Quiver([[0, 1], [1, 0]])"
    assert pair.to_json() == {"arrows": [[0, 1], [1, 0]]}


def test_quiver_validation():
    for bad in ([], [[0, 1]], [[0, 1], [2, 0]], [[-1]], [[1.5]], [[True]]):
        with pytest.raises(QuiverValidationError) as err:
            Quiver(bad)
        assert err.value.source == "input"
        assert isinstance(err.value, QuiverInputError)

    with pytest.raises(QuiverValidationError) as err:
        Quiver([[0, 1], [2, 0]])
    assert "not symmetric" in err.value.message


def test_dim_vector_validation(pair):
    with pytest.raises(DimensionMismatchError):
        pair.dim_vector((1, 2, 3))
    with pytest.raises(DimensionMismatchError):
        pair.dim_vector((1, -1))
    with pytest.raises(DimensionMismatchError):
        euler_form(pair, (1,), (1, 0))


def test_parse_quiver_inline():
    assert parse_quiver("[[2]]") == Quiver([[2]])
    assert parse_quiver('{"arrows": [[0, 1], [1, 0]]}') == Quiver([[0, 1], [1, 0]])
    assert parse_quiver("  [[1, 2], [2, 1]]\n") == Quiver([[1, 2], [2, 1]])


def test_parse_quiver_file(tmp_path):
    path = tmp_path / "quiver.json"
    path.write_text(json.dumps({"arrows": [[1, 1], [1, 2]]}))
    assert parse_quiver(str(path)) == Quiver([[1, 1], [1, 2]])


def test_parse_quiver_malformed(tmp_path):
    for bad in ("", "[[0, 1]", "{}", '{"rows": [[1]]}', "3", "[1, 2]", "no-file"):
        with pytest.raises(QuiverParseError):
            parse_quiver(bad)

    with pytest.raises(QuiverValidationError):
        parse_quiver("[[0, 1], [0, 0]]")

    path = tmp_path / "broken.json"
    path.write_text("[[1,")
    with pytest.raises(QuiverParseError):
        parse_quiver(str(path))


def test_euler_form(pair, two_loops):
    assert euler_form(two_loops, (1,), (1,)) == -1
    assert euler_form(two_loops, (2,), (3,)) == -6
    assert euler_form(pair, (1, 0), (0, 1)) == -1
    assert euler_form(pair, (1, 1), (1, 1)) == 0
    assert euler_form(Quiver([[0]]), (3,), (2,)) == 6

    q = Quiver([[2, 1], [1, 3]])
    d, e = (1, 2), (2, 1)
    assert euler_form(q, d, e) == euler_form(q, e, d)


def test_square_norm_and_parity(pair, two_loops):
    assert square_norm((1, 2, 3)) == 14
    assert parity_class(two_loops, (1,)) == 1
    assert parity_class(two_loops, (2,)) == 0
    assert parity_class(Quiver([[1]]), (3,)) == 0
    assert parity_class(pair, (1, 0)) == 1
    assert parity_class(pair, (1, 1)) == 0


def test_almost_n_regular():
    assert almost_n_regular(Quiver([[3]])) == 3
    assert almost_n_regular(Quiver([[0]])) is None
    assert almost_n_regular(Quiver([[0]]), allow_zero=True) == 0
    assert almost_n_regular(Quiver([[1, 1], [1, 1]])) == 1
    assert almost_n_regular(Quiver([[2, 1], [1, 1]])) == 1
    assert almost_n_regular(Quiver([[2, 2], [2, 3]])) == 2
    assert almost_n_regular(Quiver([[3, 1], [1, 1]])) is None
    assert almost_n_regular(Quiver([[0, 1], [1, 0]])) is None
    assert almost_n_regular(Quiver([[1, 0], [0, 0]])) is None
    assert almost_n_regular(Quiver([[1, 0], [0, 0]]), allow_zero=True) == 0
    assert almost_n_regular(Quiver([[2, 0], [0, 2]]), allow_zero=True) is None
    assert almost_n_regular(Quiver([[1, 1, 2], [1, 1, 1], [2, 1, 1]])) is None
