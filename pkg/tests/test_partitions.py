import random
from itertools import product

import pytest

from quiverdt.exceptions import SeriesPreconditionError
from quiverdt.lieword import LSWord
from quiverdt.partitions import (
    PREFIX_RULES,
    Partition,
    check_partition_bijection,
    compare_partitions,
    concatenate,
    enumerate_TLplus,
    in_T,
    in_T0,
    partition_key,
    partition_to_word,
    star_product,
    t0_letters,
)
from tests.conftest import global_data


def test_partition_validation():
    lam = Partition([0, 1, 1])
    assert lam == (0, 1, 1)
    assert lam.length == 3
    assert lam.shift(2) == Partition([2, 3, 3])
    assert repr(lam) == "Partition(0, 1, 1)"
    with pytest.raises(SeriesPreconditionError):
        Partition([1, 0])
    with pytest.raises(SeriesPreconditionError):
        Partition([-1])


def test_star_product():
    assert star_product(Partition([0]), Partition([0]), 2) == Partition([0, 1])
    assert star_product(Partition([0, 1]), Partition([0]), 3) == Partition([0, 1, 4])
    assert star_product(Partition([0]), Partition([0]), 1) == Partition([0, 0])
    assert star_product(Partition(), Partition([0, 2]), 3) == Partition([0, 2])
    with pytest.raises(SeriesPreconditionError):
        star_product(Partition([0]), Partition([0]), 0)


def partitions_in_T(m, length_max):
    found = [Partition()]
    for length in range(1, length_max + 1):
        for parts in product(range((m - 1) * (length - 1) + 1), repeat=length):
            if list(parts) == sorted(parts) and in_T(Partition(parts), m):
                found.append(Partition(parts))
    return found


@pytest.mark.parametrize("m", [1, 2, 3])
def test_star_product_is_associative(m):
    rng = random.Random(m)

    def draw():
        return Partition(sorted(rng.randrange(6) for _ in range(rng.randrange(4))))

    for _ in range(50):
        lam, mu, nu = draw(), draw(), draw()
        left = star_product(star_product(lam, mu, m), nu, m)
        right = star_product(lam, star_product(mu, nu, m), m)
        assert left == right, (lam, mu, nu)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_star_product_concatenates_on_T(m):
    members = partitions_in_T(m, 3)
    for lam in members:
        for mu in members:
            joined = star_product(lam, mu, m)
            shifted = tuple(x + (m - 1) * len(lam) for x in mu)
            assert tuple(joined) == tuple(lam) + shifted, (lam, mu)
            assert in_T(joined, m), (lam, mu)


def test_concatenate():
    word = (Partition([0]), Partition([0]), Partition([0]))
    assert concatenate(word, 2) == Partition([0, 1, 2])
    assert concatenate((), 2) == Partition()


def test_membership():
    assert in_T(Partition([0, 1]), 2)
    assert not in_T(Partition([0, 2]), 2)
    assert in_T(Partition([0, 0, 0]), 1)
    assert not in_T(Partition([1]), 2)

    assert in_T0(Partition([0]), 2)
    assert in_T0(Partition([0, 0]), 2)
    assert not in_T0(Partition([0, 1]), 2)
    assert in_T0(Partition([0, 1]), 3)
    assert not in_T0(Partition([0, 0]), 1)
    assert not in_T0(Partition([1]), 2)
    assert not in_T0(Partition(), 2)


def test_compare_partitions():
    assert compare_partitions((0, 1), (0, 2), "larger") == -1
    assert compare_partitions((0, 1), (0, 1), "smaller") == 0
    assert compare_partitions((0,), (0, 1), "larger") == 1
    assert compare_partitions((0,), (0, 1), "smaller") == -1
    assert compare_partitions((0, 1), (0,), "larger") == -1
    assert set(PREFIX_RULES) == {"larger", "smaller"}
    with pytest.raises(SeriesPreconditionError):
        compare_partitions((0,), (0,), "longer")

    ordered = sorted([(0,), (0, 0), (0, 1)], key=partition_key())
    assert ordered == [(0, 0), (0, 1), (0,)]


def test_t0_letters():
    assert t0_letters(2, 2, 1) == [Partition([0, 0]), Partition([0])]
    assert t0_letters(1, 3, 0) == [Partition([0])]
    letters = t0_letters(3, 3, 4)
    assert all(in_T0(lam, 3) for lam in letters)
    assert Partition([0, 1, 3]) in letters
    assert Partition([0, 2]) not in letters


def test_enumerate_words():
    found = enumerate_TLplus(2, 2, 1)
    a, aa = Partition([0]), Partition([0, 0])
    assert found == {(a,), (aa,), (a, a)}

    limited = enumerate_TLplus(2, 2, 1, level_max=0)
    assert limited == {(a,), (a, a)}


def test_partition_to_word():
    a = Partition([0])
    assert partition_to_word(1, (a, a), 2) == LSWord.one_vertex([1, 1], 2)
    assert partition_to_word(0, (Partition([0, 0]),), 2) == LSWord.one_vertex(
        [0, 1], 2
    )


def test_partition_bijection():
    loops = (1, 2, 3, 4) if global_data.complete else (1, 2, 3)
    for m in loops:
        verdict = check_partition_bijection(m, 3, 4)
        assert verdict, m
        assert verdict.name == "partition_bijection"


def test_smaller_prefix_rule_breaks_bijection():
    verdict = check_partition_bijection(2, 3, 4, prefix_rule="smaller")
    assert not verdict
    assert verdict.witness is not None
