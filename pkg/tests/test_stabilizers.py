from fractions import Fraction as F

import pytest

from corpus import CYCLIC6, FOUR_LINES, SMOOTH_TP2, WEIGHTED_P2, corpus, m_n
from hypertoric.exactlin import determinant, matvec
from hypertoric.stabilizers import (
    GroupTooLargeError,
    TorusElement,
    abc_sets,
    enumerate_bases,
    full_group,
    gamma_S,
    group_order,
)

HALF = F(1, 2)


def logweights(elements):
    return [t.logweights for t in elements]


def test_enumerate_bases_examples():
    assert enumerate_bases(WEIGHTED_P2.normals) == [(0, 1), (0, 2), (1, 2)]
    assert len(enumerate_bases(FOUR_LINES.normals)) == 6
    assert enumerate_bases([(2,), (-1,), (0,)]) == [(0,), (1,)]


def test_gamma_S_examples():
    assert logweights(gamma_S(WEIGHTED_P2, (1, 2))) == [(0, 0, 0), (0, HALF, HALF)]
    assert logweights(gamma_S(WEIGHTED_P2, (0, 1))) == [(0, 0, 0)]
    assert logweights(gamma_S(FOUR_LINES, (2, 3))) == [(0,) * 4, (0, 0, HALF, HALF)]


def test_gamma_S_rejects_non_basis():
    with pytest.raises(ValueError):
        gamma_S(FOUR_LINES, (0,))
    with pytest.raises(ValueError):
        gamma_S(WEIGHTED_P2, (0, 0))


def test_full_group_examples():
    g = full_group(WEIGHTED_P2)
    assert logweights(g) == [(0, 0, 0), (0, HALF, HALF)]
    (t,) = g.nontrivial
    assert t.fixed == {0} and t.age == 2 and t.degree == 4
    g = full_group(FOUR_LINES)
    assert logweights(g) == [(0,) * 4, (0, 0, HALF, HALF)]
    assert g.nontrivial[0].degree == 4
    assert len(full_group(SMOOTH_TP2)) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_m_n_group_is_cyclic_of_order_n(n):
    g = full_group(m_n(n))
    assert len(g) == n
    # cyclic: some element has order n
    orders = []
    for t in g:
        k, s = 1, t
        while not s.is_identity:
            s, k = s * t, k + 1
        orders.append(k)
    assert max(orders) == n


def test_cyclic6_logweights():
    g = full_group(CYCLIC6)
    assert logweights(g) == [
        (0, 0, 0, 0, 0),
        (F(1, 6), F(1, 3), HALF, 0, 0),
        (F(1, 3), F(2, 3), 0, 0, 0),
        (HALF, 0, HALF, 0, 0),
        (F(2, 3), F(1, 3), 0, 0, 0),
        (F(5, 6), F(2, 3), HALF, 0, 0),
    ]
    assert [t.degree for t in g] == [0, 6, 4, 4, 4, 6]


def test_budget_is_enforced():
    with pytest.raises(GroupTooLargeError):
        full_group(m_n(6), budget=5)


def test_abc_examples():
    (t,) = full_group(WEIGHTED_P2).nontrivial
    abc = abc_sets(t, t)
    assert (abc.A, abc.B, abc.C) == ({1, 2}, set(), set())
    (t,) = full_group(FOUR_LINES).nontrivial
    abc = abc_sets(t, t)
    assert (abc.A, abc.B, abc.C) == ({2, 3}, set(), set())
    ident = TorusElement.identity(4)
    abc = abc_sets(ident, t)
    assert not (abc.A or abc.B or abc.C)


def test_abc_b_and_c_in_cyclic6():
    g = full_group(CYCLIC6)
    t = g.elements[1]  # (1/6, 1/3, 1/2, 0, 0)
    abc = abc_sets(t, t)
    # squares to (1/3, 2/3, 0): coordinate 2 wraps to zero, 0 and 1 do not
    assert abc.A == {2} and abc.B == {0, 1} and abc.C == set()
    s = g.elements[5]  # (5/6, 2/3, 1/2, 0, 0)
    abc = abc_sets(s, s)
    assert abc.A == {2} and abc.B == set() and abc.C == {0, 1}


def test_torus_element_arithmetic():
    t = TorusElement.from_lift([F(3, 2), F(-1, 3)])
    assert t.logweights == (HALF, F(2, 3))
    assert (t * t.inverse()).is_identity
    assert t.moved == {0, 1} and t.fixed == frozenset()


def _corpus_groups():
    return [(spec, full_group(spec)) for spec in corpus()]


@pytest.fixture(scope="module")
def groups():
    return _corpus_groups()


def test_group_axioms_on_corpus(groups):
    for _, g in groups:
        elems = set(g)
        assert g.identity.is_identity
        for s in g:
            assert s.inverse() in elems
            for t in g:
                assert s * t in elems
                assert s * t == t * s


def test_lifts_are_integral_under_beta(groups):
    for spec, g in groups:
        for t in g:
            assert all(x.denominator == 1 for x in matvec(spec.beta, t.lift))
            assert all(0 <= a < 1 for a in t.logweights)


def test_inverse_symmetries(groups):
    for _, g in groups:
        for t in g:
            inv = t.inverse()
            assert inv.fixed == t.fixed
            assert t.age == len(t.moved) == inv.age
            for i in t.moved:
                assert t.logweights[i] + inv.logweights[i] == 1


def test_abc_is_symmetric_and_partitions(groups):
    for _, g in groups:
        for s in g:
            for t in g:
                one, two = abc_sets(s, t), abc_sets(t, s)
                assert one == two
                assert one.A | one.B | one.C == s.moved & t.moved
                assert not (one.A & one.B or one.A & one.C or one.B & one.C)


def test_gamma_S_order_is_determinant(groups):
    for spec, _ in groups:
        for basis in enumerate_bases(spec.normals):
            det = determinant([spec.normals[j] for j in basis])
            assert len(gamma_S(spec, basis)) == abs(det)


def test_group_order_matches_closure(groups):
    for spec, g in groups:
        assert group_order(spec) == len(g)
        for basis in enumerate_bases(spec.normals):
            assert set(gamma_S(spec, basis)) <= set(g)
