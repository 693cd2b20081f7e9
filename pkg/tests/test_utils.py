import logging

import pytest

from quiverdt.exceptions import DimensionMismatchError
from quiverdt.utils import (
    check_dim_vector,
    dim_vectors,
    is_none_or_int,
    subtract,
    suppress_logging,
    total,
)


def test_suppress_logging():
    logger = logging.getLogger("quiverdt.test")
    logger.setLevel(logging.DEBUG)
    with suppress_logging("quiverdt.test"):
        assert logger.getEffectiveLevel() == logging.CRITICAL
    assert logger.getEffectiveLevel() == logging.DEBUG


def test_dim_vectors():
    assert dim_vectors(2, 2) == [
        (0, 0),
        (0, 1),
        (1, 0),
        (0, 2),
        (1, 1),
        (2, 0),
    ]
    assert dim_vectors(1, 3, min_total=2) == [(2,), (3,)]
    assert len(dim_vectors(3, 3, min_total=3)) == 10


def test_total_and_subtract():
    assert total((1, 2, 3)) == 6
    assert subtract((2, 1), (1, 1)) == (1, 0)
    assert subtract((2, 1), (0, 2)) is None


def test_check_dim_vector():
    assert check_dim_vector([1, 0], 2) == (1, 0)
    with pytest.raises(DimensionMismatchError):
        check_dim_vector([1], 2)
    with pytest.raises(DimensionMismatchError):
        check_dim_vector([1, -1], 2)


def test_is_none_or_int():
    assert is_none_or_int(None)
    assert is_none_or_int(0)
    assert not is_none_or_int(-1)
    assert not is_none_or_int(True)
    assert not is_none_or_int("1")
