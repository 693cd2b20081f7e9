import json
import os
from typing import Any, List, Optional, Sequence, Tuple

from quiverdt.exceptions import QuiverParseError, QuiverValidationError
from quiverdt.typings import DimVec, Json, Matrix
from quiverdt.utils import check_dim_vector


class Quiver:
    """Finite symmetric quiver given by its arrow-count matrix.

    Vertices are 0..n-1; m[i][j] is the number of arrows i -> j and
    m[i][i] the number of loops at i.

    :param arrows: Square, symmetric matrix of non-negative integers.
    :type arrows: [[int]]
    :raise quiverdt.exceptions.QuiverValidationError: If the matrix is empty,
        not square, not symmetric, or has negative or non-integer entries.
    """

    __slots__ = ("_arrows",)

    def __init__(self, arrows: Matrix) -> None:
        rows = [list(row) for row in arrows]
        n = len(rows)
        if n == 0:
            raise QuiverValidationError("quiver needs at least one vertex")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise QuiverValidationError(
                    f"row {i} has {len(row)} entries, expected {n}"
                )
            for j, entry in enumerate(row):
                if isinstance(entry, bool) or not isinstance(entry, int):
                    raise QuiverValidationError(
                        f"entry ({i}, {j}) is not an integer: {entry!r}"
                    )
                if entry < 0:
                    raise QuiverValidationError(f"entry ({i}, {j}) is negative")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise QuiverValidationError(
                        f"matrix is not symmetric: m[{i}][{j}] = {rows[i][j]} "
                        f"but m[{j}][{i}] = {rows[j][i]}"
                    )
        self._arrows: Tuple[Tuple[int, ...], ...] = tuple(tuple(r) for r in rows)

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self._arrows)

    @property
    def arrows(self) -> Tuple[Tuple[int, ...], ...]:
        return self._arrows

    def m(self, i: int, j: int) -> int:
        """Number of arrows from vertex i to vertex j."""
        return self._arrows[i][j]

    def loops(self, i: int) -> int:
        """Number of loops at vertex i."""
        return self._arrows[i][i]

    @property
    def max_arrows(self) -> int:
        return max(max(row) for row in self._arrows)

    def dim_vector(self, entries: Sequence[int]) -> DimVec:
        """Validate entries as a dimension vector of this quiver."""
        return check_dim_vector(entries, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self._arrows == other._arrows

    def __hash__(self) -> int:
        return hash(self._arrows)

    def __repr__(self) -> str:
        return f"Quiver({[list(r) for r in self._arrows]})"

    def to_json(self) -> Json:
        return {"arrows": [list(r) for r in self._arrows]}


def _matrix_from_json(payload: Any) -> List[List[int]]:
    if isinstance(payload, dict):
        if "arrows" not in payload:
            raise QuiverParseError('quiver object needs an "arrows" field')
        payload = payload["arrows"]
    if not isinstance(payload, list) or not all(isinstance(r, list) for r in payload):
        raise QuiverParseError("quiver must be a list of rows")
    return payload


def parse_quiver(text: str) -> Quiver:
    """Parse a quiver description.

    Accepted forms are a JSON object ``{"arrows": [[...], ...]}``, a bare JSON
    matrix ``[[...], ...]``, or a path to a file holding either.

    :param text: Quiver description or path.
    :type text: str
    :return: Validated quiver.
    :rtype: quiverdt.quiver.Quiver
    :raise quiverdt.exceptions.QuiverParseError: If the description is
        malformed.
    :raise quiverdt.exceptions.QuiverValidationError: If the matrix is not a
        valid symmetric quiver.
    """
    source = text.strip()
    if source and source[0] not in "[{" and os.path.isfile(source):
        try:
            with open(source, encoding="utf-8") as handle:
                source = handle.read()
        except OSError as err:
            raise QuiverParseError(f"cannot read quiver file {text}: {err}")
    try:
        payload = json.loads(source)
    except json.JSONDecodeError as err:
        raise QuiverParseError(f"malformed quiver JSON: {err.msg}")
    return Quiver(_matrix_from_json(payload))


def euler_form(q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """Return chi(d, e) = sum_i d_i e_i - sum_{i,j} m_ij d_i e_j.

    :param q: Quiver.
    :type q: quiverdt.quiver.Quiver
    :param d: Dimension vector.
    :type d: tuple
    :param e: Dimension vector.
    :type e: tuple
    :return: Euler form.
    :rtype: int
    :raise quiverdt.exceptions.DimensionMismatchError: If a vector has the
        wrong length.
    """
    d, e = q.dim_vector(d), q.dim_vector(e)
    value = sum(x * y for x, y in zip(d, e))
    for i in range(q.n):
        for j in range(q.n):
            value -= q.m(i, j) * d[i] * e[j]
    return value


def square_norm(d: Sequence[int]) -> int:
    """Return d.d = sum_i d_i^2."""
    return sum(x * x for x in d)


def parity_class(q: Quiver, d: Sequence[int]) -> int:
    """Return sum_i (m_ii + 1) d_i mod 2."""
    return sum((q.loops(i) + 1) * x for i, x in enumerate(d)) % 2


def almost_n_regular(q: Quiver, allow_zero: bool = False) -> Optional[int]:
    """Return N if the quiver is almost N-regular, None otherwise.

    Almost N-regular means every off-diagonal entry equals N and every
    diagonal entry is N or N + 1. For one vertex the off-diagonal condition is
    vacuous and the largest certificate, the loop count, is returned.

    :param q: Quiver.
    :type q: quiverdt.quiver.Quiver
    :param allow_zero: Accept N = 0 (no arrows between distinct vertices,
        at most one loop per vertex).
    :type allow_zero: bool
    :return: N or None.
    :rtype: int | None
    """
    smallest = 0 if allow_zero else 1
    if q.n == 1:
        loops = q.loops(0)
        return loops if loops >= smallest else None
    off_diagonal = {q.m(i, j) for i in range(q.n) for j in range(q.n) if i != j}
    if len(off_diagonal) != 1:
        return None
    (n,) = off_diagonal
    if n < smallest:
        return None
    if all(q.loops(i) in (n, n + 1) for i in range(q.n)):
        return n
    return None
