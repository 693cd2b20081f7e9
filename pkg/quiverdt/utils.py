import logging
from contextlib import contextmanager
from itertools import product
from typing import Any, Iterator, List, Optional, Sequence

from quiverdt.exceptions import DimensionMismatchError
from quiverdt.typings import DimVec


@contextmanager
def suppress_logging(logger_name: str) -> Iterator[None]:
    """Suppress logger messages.

    :param logger_name: Full name of the logger.
    :type logger_name: str
    """
    logger = logging.getLogger(logger_name)
    original_log_level = logger.getEffectiveLevel()
    logger.setLevel(logging.CRITICAL)
    try:
        yield
    finally:
        logger.setLevel(original_log_level)


def total(d: Sequence[int]) -> int:
    """Return the total degree |d| of a dimension vector.

    :param d: Dimension vector.
    :type d: tuple
    :return: Sum of the entries.
    :rtype: int
    """
    return sum(d)


def dim_vectors(nvars: int, order: int, min_total: int = 0) -> List[DimVec]:
    """Return all dimension vectors with min_total <= |d| <= order.

    Vectors are grouped by total degree, lexicographic inside each group, so
    every vector comes after all of its proper sub-vectors.

    :param nvars: Number of entries.
    :type nvars: int
    :param order: Largest total degree.
    :type order: int
    :param min_total: Smallest total degree.
    :type min_total: int
    :return: Dimension vectors.
    :rtype: [tuple]
    """
    found = [
        d
        for d in product(range(order + 1), repeat=nvars)
        if min_total <= total(d) <= order
    ]
    return sorted(found, key=lambda d: (total(d), d))


def subtract(d: DimVec, e: DimVec) -> Optional[DimVec]:
    """Return d - e when e <= d entrywise, None otherwise.

    :param d: Dimension vector.
    :type d: tuple
    :param e: Dimension vector.
    :type e: tuple
    :return: Difference or None.
    :rtype: tuple | None
    """
    diff = tuple(a - b for a, b in zip(d, e))
    if any(x < 0 for x in diff):
        return None
    return diff


def check_dim_vector(d: Sequence[int], nvars: int) -> DimVec:
    """Validate a dimension vector and return it as a tuple.

    :param d: Candidate dimension vector.
    :type d: Sequence[int]
    :param nvars: Expected length.
    :type nvars: int
    :return: Dimension vector.
    :rtype: tuple
    :raise quiverdt.exceptions.DimensionMismatchError: If the length is wrong
        or an entry is negative.
    """
    vec = tuple(int(x) for x in d)
    if len(vec) != nvars:
        raise DimensionMismatchError(
            f"dimension vector {vec} has length {len(vec)}, expected {nvars}"
        )
    if any(x < 0 for x in vec):
        raise DimensionMismatchError(f"dimension vector {vec} has negative entries")
    return vec


def is_none_or_int(obj: Any) -> bool:
    """Check if obj is None or a non-negative integer.

    :param obj: Object to check.
    :type obj: object
    :return: True if object is None or a non-negative integer.
    :rtype: bool
    """
    return obj is None or (
        isinstance(obj, int) and not isinstance(obj, bool) and obj >= 0
    )
