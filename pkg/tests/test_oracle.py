import random
import warnings

import pytest

from corpus import FIXTURES, FOUR_LINES, SMOOTH_TP2, WEIGHTED_P2, corpus
from hypertoric.oracle import (
    OracleBoundWarning,
    graded_dimension,
    monomials_of_degree,
    oracle_poincare,
    sparse_rank,
)
from hypertoric.presentation import RingPresentation, build_presentation


def test_monomials_of_degree():
    assert monomials_of_degree((2, 2), 4) == ((0, 2), (1, 1), (2, 0))
    assert monomials_of_degree((2, 4), 4) == ((0, 1), (2, 0))
    assert monomials_of_degree((2,), 3) == ()
    assert monomials_of_degree((), 0) == ((),)


def test_sparse_rank():
    assert sparse_rank([{0: 1, 1: 2}, {0: 2, 1: 4}]) == 1
    assert sparse_rank([{0: 2, 1: 3}, {0: 4, 1: 5}, {1: 7}]) == 2
    assert sparse_rank([{}, {3: 0}]) == 0


def test_examples():
    assert oracle_poincare(build_presentation(WEIGHTED_P2)).as_dict() == {0: 1, 2: 1, 4: 2}
    full = oracle_poincare(build_presentation(FOUR_LINES), 12, early_stop=False)
    assert full.as_dict() == {0: 1, 2: 2, 4: 4}
    assert oracle_poincare(build_presentation(SMOOTH_TP2)).as_dict() == {0: 1, 2: 1, 4: 1}


def test_early_stop_agrees_with_full_run():
    for spec in list(FIXTURES.values()) + list(corpus()[:10]):
        pres = build_presentation(spec)
        # the unpruned run is expensive at high degree, so cap it
        top = min(4 * spec.n, 10)
        assert oracle_poincare(pres, top) == oracle_poincare(pres, top, early_stop=False)


def test_rejects_odd_degree():
    pres = build_presentation(WEIGHTED_P2)
    with pytest.raises(ValueError):
        oracle_poincare(pres, 5)


def test_bound_warning():
    pres = build_presentation(FOUR_LINES)
    with pytest.warns(OracleBoundWarning):
        oracle_poincare(pres, 4)
    with warnings.catch_warnings():
        warnings.simplefilter("error", OracleBoundWarning)
        oracle_poincare(pres, 12)


def test_invariant_under_relation_order():
    rng = random.Random(11)
    for spec in list(FIXTURES.values()) + list(corpus()[:10]):
        pres = build_presentation(spec)
        rels = list(pres.relations)
        rng.shuffle(rels)
        shuffled = RingPresentation(pres.n_u, pres.gammas, rels)
        for deg in range(0, 10, 2):
            assert graded_dimension(pres, deg) == graded_dimension(shuffled, deg)
