import pytest

from quiverdt.exceptions import DimensionMismatchError, SeriesPreconditionError
from quiverdt.executor import ThreadedExecutor
from quiverdt.grobner import (
    Generator,
    check_oracle_consistency,
    check_quadratic_gb,
    check_relation_families,
    check_relation_ranks,
    check_stated_leading_terms,
    default_degree_cap,
    dim_bruteforce,
    expected_leading_terms,
    leading_terms,
    normal_cubics,
    relation_rows,
    stated_leading_monomials,
    stated_leading_terms,
    supercommutative_form,
    weight_two_monomials,
)
from quiverdt.quiver import Quiver
from quiverdt.selftest import check_classification, symmetric_quivers
from tests.conftest import global_data


def gen(level, loops=0, vertex=0):
    return Generator(vertex, level, loops)


def test_generator_attributes(two_loops):
    x = Generator.of(two_loops, 0, 3)
    assert x.degree == -8
    assert x.parity == 0
    assert repr(x) == "a0,3"
    assert gen(1, 1).parity == 1
    assert gen(0, vertex=1) < gen(1)
    assert gen(0) < gen(0, vertex=1)


def test_supercommutative_form():
    assert supercommutative_form([gen(1), gen(0)]) == (1, (gen(0), gen(1)))
    assert supercommutative_form([gen(1, 1), gen(0, 1)]) == (-1, (gen(0, 1), gen(1, 1)))
    assert supercommutative_form([gen(0), gen(0)]) == (1, (gen(0), gen(0)))
    assert supercommutative_form([gen(2, 1), gen(0, 1), gen(2, 1)]) is None

    sign, mono = supercommutative_form([gen(2, 1), gen(1, 1), gen(0, 1)])
    assert sign == -1
    assert mono == (gen(0, 1), gen(1, 1), gen(2, 1))


def test_weight_two_monomials(two_loops):
    monomials = weight_two_monomials(two_loops, 0, 0, 2)
    assert monomials == [(gen(1, 2), gen(1, 2)), (gen(0, 2), gen(2, 2))]
    assert weight_two_monomials(Quiver([[1]]), 0, 0, 0) == []


def test_relation_rows_two_loops(two_loops):
    matrix = relation_rows(two_loops, 0, 0, 1)
    assert matrix.columns == [(gen(0, 2), gen(1, 2))]
    assert matrix.rows == [(2,), (1,)]
    assert matrix.rank() == 1
    assert matrix.leading_monomials() == [(gen(0, 2), gen(1, 2))]

    matrix = relation_rows(two_loops, 0, 0, 2)
    assert matrix.rows == [(1, 2), (1, 2)]
    assert matrix.leading_monomials() == [(gen(1, 2), gen(1, 2))]
    assert repr(matrix) == "<RelationMatrix (0, 0) level 2: 2x2>"

    with pytest.raises(SeriesPreconditionError):
        relation_rows(two_loops, 0, 0, -1)


def test_relation_rows_one_loop():
    q = Quiver([[1]])
    assert relation_rows(q, 0, 0, 0).rows == []
    # the only relation at level 1 is a0 a1 - a0 a1 = 0
    matrix = relation_rows(q, 0, 0, 1)
    assert matrix.columns == [(gen(0, 1), gen(1, 1))]
    assert matrix.rows == []
    assert matrix.rank() == 0


def test_leading_terms(two_loops):
    found = leading_terms(two_loops, 1)
    assert found == frozenset(
        {
            (gen(0, 2), gen(0, 2)),
            (gen(0, 2), gen(1, 2)),
            (gen(1, 2), gen(1, 2)),
        }
    )
    assert found == expected_leading_terms(two_loops, 1)
    assert leading_terms(Quiver([[0]]), 3) == frozenset()

    full = leading_terms(two_loops, 1, include_commutativity=True)
    assert (gen(1, 2), gen(0, 2)) in full
    assert found < full

    odd = leading_terms(Quiver([[1]]), 1, include_commutativity=True)
    assert (gen(0, 1), gen(0, 1)) in odd


def test_leading_terms_closed_form(suite):
    for q in suite:
        assert leading_terms(q, global_data.k_max) == expected_leading_terms(
            q, global_data.k_max
        ), repr(q)


def test_relation_ranks(suite):
    for q in suite:
        verdict = check_relation_ranks(q, global_data.k_max)
        assert verdict, repr(q)


def test_stated_leading_terms_one_vertex(two_loops):
    assert stated_leading_terms(two_loops, 4) == expected_leading_terms(two_loops, 4)
    verdict = check_stated_leading_terms(two_loops, 4)
    assert verdict
    assert verdict.name == "stated_leading_terms"


def test_stated_leading_terms_mixed_vertices(pair):
    found = leading_terms(pair, 3)
    stated = stated_leading_terms(pair, 3)
    assert found - stated == {(gen(k, vertex=1), gen(k + 1)) for k in range(3)}
    assert stated - found == {(gen(k), gen(k + 1, vertex=1)) for k in range(3)}

    verdict = check_stated_leading_terms(pair, 3)
    assert not verdict
    assert verdict.witness == ((0, 1), 1)
    assert verdict.detail == "extra [(a1,0, a0,1)], missing [(a0,0, a1,1)]"
    assert stated_leading_monomials(pair, 0, 1, 1) == {(gen(0), gen(1, vertex=1))}


def test_stated_leading_sets_have_computed_size(suite):
    for q in suite:
        for a in range(q.n):
            for b in range(a, q.n):
                for k in range(9):
                    assert len(stated_leading_monomials(q, a, b, k)) == len(
                        relation_rows(q, a, b, k).leading_monomials()
                    ), (repr(q), a, b, k)


def test_relation_families():
    family_range = (1, 2, 3, 4) if global_data.complete else (1, 2)
    for m in family_range:
        verdict = check_relation_families(m, global_data.k_max)
        assert verdict, m
        assert verdict.name == "relation_families"


def test_default_degree_cap():
    assert default_degree_cap(Quiver([[0]])) == 8
    assert default_degree_cap(Quiver([[1]])) == 10
    assert default_degree_cap(Quiver([[3, 1], [1, 0]])) == 14
    assert default_degree_cap(Quiver([[5]])) == 19


def test_dim_bruteforce_free():
    q = Quiver([[0]])
    assert dim_bruteforce(q, (1,), 3) == {0: 1, -2: 1, -4: 1, -6: 1}
    assert dim_bruteforce(q, (2,), 3) == {0: 1, -2: 1, -4: 2, -6: 2}
    assert dim_bruteforce(q, (3,), 2) == normal_cubics(q, (3,), 2)


def test_dim_bruteforce_one_loop():
    q = Quiver([[1]])
    expected = {-2: 0, -4: 1, -6: 1, -8: 2, -10: 2}
    assert dim_bruteforce(q, (2,), 4) == expected


def test_dim_bruteforce_preconditions(pair):
    with pytest.raises(SeriesPreconditionError):
        dim_bruteforce(Quiver([[1]]), (4,), 2)
    with pytest.raises(DimensionMismatchError):
        dim_bruteforce(pair, (1,), 2)
    with pytest.raises(SeriesPreconditionError):
        normal_cubics(pair, (1, 1), 2)


def test_oracle_consistency(suite):
    for q in suite:
        assert check_oracle_consistency(q, 2, 6), repr(q)


def test_quadratic_gb_pass(two_loops):
    verdict = check_quadratic_gb(two_loops)
    assert verdict
    assert verdict.detail == "cap 12"
    assert check_quadratic_gb(Quiver([[1, 1], [1, 1]]), degree_cap=6)


def test_quadratic_gb_fail(pair):
    verdict = check_quadratic_gb(pair)
    assert not verdict
    assert verdict.witness[0] == (2, 1)
    assert verdict.detail.startswith("dimension")

    threaded = check_quadratic_gb(pair, executor=ThreadedExecutor(2))
    assert threaded.witness == verdict.witness


def test_classification():
    quivers = list(symmetric_quivers(1, 3)) + list(
        symmetric_quivers(2, global_data.max_entry)
    )
    assert check_classification(quivers)
