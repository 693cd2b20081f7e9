"""Partition model of the one-vertex basis.

A partition here is a nondecreasing sequence of non-negative parts. For a loop
count m the product ``lam * mu`` appends the parts of mu raised by
(m - 1) * len(lam). The set T holds the partitions with
``lam_i <= (m - 1)(i - 1)``; T0 additionally requires strict inequality for
i >= 2. Super-Lyndon words in the alphabet T0 together with a shift p >= 0
are in bijection with the one-vertex basis words via
``level_i = p + (m - 1)(i - 1) - lam_i``.
"""
import logging
from functools import cmp_to_key, reduce
from typing import Any, Callable, List, Sequence, Set, Tuple

from quiverdt.exceptions import SeriesPreconditionError
from quiverdt.lieword import LSWord, is_super_lyndon_sequence, one_vertex_basis
from quiverdt.result import Verdict

logger = logging.getLogger(__name__)

PREFIX_RULES = ("larger", "smaller")

PartitionWord = Tuple["Partition", ...]


class Partition(tuple):  # type: ignore[type-arg]
    """Nondecreasing tuple of non-negative integers.

    :raise quiverdt.exceptions.SeriesPreconditionError: If parts are negative
        or decreasing.
    """

    def __new__(cls, parts: Sequence[int] = ()) -> "Partition":
        values = tuple(int(x) for x in parts)
        if any(x < 0 for x in values):
            raise SeriesPreconditionError(f"negative part in {values}")
        if any(a > b for a, b in zip(values, values[1:])):
            raise SeriesPreconditionError(f"parts of {values} are not nondecreasing")
        return super().__new__(cls, values)

    @property
    def length(self) -> int:
        return len(self)

    def shift(self, p: int) -> "Partition":
        """Raise every part by p."""
        return Partition(x + p for x in self)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)}"


def _check_loops(m: int) -> None:
    if m < 1:
        raise SeriesPreconditionError(f"loop count must be >= 1, got {m}")


def star_product(lam: Partition, mu: Partition, m: int) -> Partition:
    """Return lam * mu = lam united with mu shifted by (m - 1) * len(lam).

    :param lam: Left factor.
    :type lam: quiverdt.partitions.Partition
    :param mu: Right factor.
    :type mu: quiverdt.partitions.Partition
    :param m: Loop count >= 1.
    :type m: int
    :return: Product, sorted nondecreasing.
    :rtype: quiverdt.partitions.Partition
    """
    _check_loops(m)
    shifted = [x + (m - 1) * len(lam) for x in mu]
    return Partition(sorted(tuple(lam) + tuple(shifted)))


def in_T(lam: Partition, m: int) -> bool:
    """Return True if lam_i <= (m - 1)(i - 1) for every i (1-based)."""
    _check_loops(m)
    return all(x <= (m - 1) * i for i, x in enumerate(lam))


def in_T0(lam: Partition, m: int) -> bool:
    """Return True if lam is in T0.

    That is lam_1 = 0 and lam_i < (m - 1)(i - 1) for i >= 2.

    :param lam: Nonempty partition.
    :type lam: quiverdt.partitions.Partition
    :param m: Loop count >= 1.
    :type m: int
    :rtype: bool
    """
    _check_loops(m)
    if not lam or lam[0] != 0:
        return False
    return all(x < (m - 1) * i for i, x in enumerate(lam) if i >= 1)


def compare_partitions(a: Sequence[int], b: Sequence[int], prefix_rule: str) -> int:
    """Lexicographic comparison of part sequences.

    Entries are compared left to right. When one sequence is a proper prefix of
    the other, ``prefix_rule`` decides whether the shorter one is the larger or
    the smaller.

    :return: Negative, zero or positive as a < b, a == b, a > b.
    :rtype: int
    """
    if prefix_rule not in PREFIX_RULES:
        raise SeriesPreconditionError(f"unknown prefix rule {prefix_rule!r}")
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    if len(a) == len(b):
        return 0
    shorter_sign = 1 if prefix_rule == "larger" else -1
    return shorter_sign if len(a) < len(b) else -shorter_sign


def partition_key(prefix_rule: str = "larger") -> Callable[[Sequence[int]], Any]:
    """Return a sort key realising :func:`compare_partitions`."""
    return cmp_to_key(lambda a, b: compare_partitions(a, b, prefix_rule))


def t0_letters(m: int, len_max: int, part_max: int) -> List[Partition]:
    """Return the partitions in T0 of length <= len_max and parts <= part_max."""
    _check_loops(m)
    letters: List[Partition] = []
    frontier: List[Tuple[int, ...]] = [(0,)]
    while frontier:
        parts = frontier.pop()
        letters.append(Partition(parts))
        if len(parts) >= len_max:
            continue
        i = len(parts)
        bound = min((m - 1) * i - 1, part_max)
        frontier.extend(parts + (x,) for x in range(parts[-1], bound + 1))
    return sorted(letters, key=partition_key())


def concatenate(word: Sequence[Partition], m: int) -> Partition:
    """Multiply the letters of a partition word with :func:`star_product`."""
    return reduce(lambda acc, lam: star_product(acc, lam, m), word, Partition())


def _word_parity(m: int) -> Callable[[Sequence[Partition]], int]:
    return lambda half: ((m - 1) * sum(len(lam) for lam in half)) % 2


def _levels(lam: Partition, m: int, p: int = 0) -> Tuple[int, ...]:
    return tuple(p + (m - 1) * i - x for i, x in enumerate(lam))


def enumerate_TLplus(
    m: int,
    len_max: int,
    part_max: int,
    level_max: int = -1,
    prefix_rule: str = "larger",
) -> Set[PartitionWord]:
    """Return the super-Lyndon words in the alphabet T0 within bounds.

    A word qualifies when its concatenated partition has length <= len_max and
    parts <= part_max, and, if level_max >= 0, the levels of the matching
    basis word stay within level_max.

    :param m: Loop count >= 1.
    :type m: int
    :param len_max: Bound on the total length of the concatenation.
    :type len_max: int
    :param part_max: Bound on every part of the concatenation.
    :type part_max: int
    :param level_max: Bound on the levels of the matching word; -1 for none.
    :type level_max: int
    :param prefix_rule: Order of a partition relative to its extensions.
    :type prefix_rule: str
    :return: Words, each a tuple of partitions.
    :rtype: {tuple}
    """
    _check_loops(m)
    letters = t0_letters(m, len_max, part_max)
    key = partition_key(prefix_rule)
    parity = _word_parity(m)
    found: Set[PartitionWord] = set()
    stack: List[Tuple[PartitionWord, int]] = [((), 0)]
    while stack:
        word, used = stack.pop()
        if word:
            lam = concatenate(word, m)
            if max(lam) > part_max:
                continue
            if level_max >= 0 and max(_levels(lam, m)) > level_max:
                continue
            if is_super_lyndon_sequence(word, parity, key):
                found.add(word)
        stack.extend(
            (word + (letter,), used + len(letter))
            for letter in letters
            if used + len(letter) <= len_max
        )
    logger.debug("enumerated %d words in T0 for m=%d", len(found), m)
    return found


def partition_to_word(p: int, word: Sequence[Partition], m: int) -> LSWord:
    """Return the basis word of levels p + (m - 1)(i - 1) - lam_i.

    :param p: Shift p >= 0.
    :type p: int
    :param word: Nonempty word in the alphabet T0.
    :type word: tuple
    :param m: Loop count >= 1.
    :type m: int
    :return: One-vertex word.
    :rtype: quiverdt.lieword.LSWord
    """
    lam = concatenate(word, m)
    return LSWord.one_vertex(_levels(lam, m, p), m)


def check_partition_bijection(
    m: int, len_max: int, level_max: int, prefix_rule: str = "larger"
) -> Verdict:
    """Check that (p, w) -> partition_to_word(p, w) is a bijection.

    The domain is p >= 0 with w in T^{L,+}, restricted to words of length at
    most len_max and levels at most level_max; the target is
    :func:`quiverdt.lieword.one_vertex_basis` with the same bounds.

    :param m: Loop count >= 1.
    :type m: int
    :param len_max: Largest word length.
    :type len_max: int
    :param level_max: Largest level.
    :type level_max: int
    :param prefix_rule: Order used on the alphabet T0.
    :type prefix_rule: str
    :return: Verdict; the witness is the offending word.
    :rtype: quiverdt.result.Verdict
    """
    name = "partition_bijection"
    # Parts of lam in T are at most (m - 1)(len - 1).
    part_max = (m - 1) * max(len_max - 1, 0)
    words = enumerate_TLplus(m, len_max, part_max, level_max, prefix_rule)
    image: Set[LSWord] = set()
    for word in sorted(words, key=lambda w: [len(w)] + [tuple(x) for x in w]):
        top = max(_levels(concatenate(word, m), m))
        for p in range(level_max - top + 1):
            w = partition_to_word(p, word, m)
            if w in image:
                return Verdict.failure(name, repr(w), "map is not injective")
            image.add(w)
    basis = one_vertex_basis(m, len_max, level_max)
    if image != basis:
        extra = sorted(image - basis)
        missing = sorted(basis - image)
        witness = extra[0] if extra else missing[0]
        reason = "outside the basis" if extra else "not reached"
        return Verdict.failure(name, repr(witness), reason)
    return Verdict.success(name, f"{len(basis)} words")
