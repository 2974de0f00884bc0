from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import WEIGHTED_P2, FOUR_LINES, corpus
from hypertoric.arrangement import (
    AffinizationError,
    ArrangementSpec,
    compute_weights,
    intersection_empty,
    is_simple,
    random_simple_affinization,
    validate,
)
from hypertoric.exactlin import integer_solve, rank, transpose


def test_validate_weighted_p2_passes():
    report = validate(WEIGHTED_P2)
    assert report.ok
    assert [c.name for c in report.checks] == [
        "shape",
        "offsets",
        "nonzero_normals",
        "torus_rank",
        "integer_span",
        "nonzero_weights",
    ]


def test_validate_rejects_zero_torus_rank():
    report = validate(ArrangementSpec(((2, 0), (0, 1))))
    assert not report["torus_rank"].passed


def test_validate_rejects_non_spanning():
    report = validate(ArrangementSpec(((2, 0), (0, 2), (-1, -1))))
    assert not report["integer_span"].passed
    assert "2" in report["integer_span"].detail


def test_validate_reports_zero_normal_index():
    report = validate(ArrangementSpec(((1, 0), (0, 0), (0, 1), (-1, -1))))
    assert report["nonzero_normals"].index == 1


def test_validate_reports_zero_weight():
    # a_3 is independent of the others, so its weight vanishes
    spec = ArrangementSpec(((1, 0), (-1, 0), (0, 1)))
    report = validate(spec)
    assert report["nonzero_weights"].index == 2


def test_weights_weighted_p2():
    assert compute_weights(WEIGHTED_P2) == [(2,), (1,), (1,)]


def test_weights_four_lines_up_to_basis_change():
    ours = compute_weights(FOUR_LINES)
    reference = [(1, 1), (1, -1), (1, 0), (0, 1)]
    # the two n x k matrices have the same column lattice
    for col in transpose(ours):
        assert integer_solve(reference, col) is not None
    for col in transpose(reference):
        assert integer_solve(ours, col) is not None


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_weights_of_simplex(d):
    normals = [tuple(int(i == j) for j in range(d)) for i in range(d)] + [(-1,) * d]
    assert compute_weights(ArrangementSpec(normals)) == [(1,)] * (d + 1)


def test_weights_lie_in_kernel():
    for spec in corpus():
        lams = compute_weights(spec)
        for j in range(spec.d):
            for c in range(spec.k):
                assert sum(a[j] * lam[c] for a, lam in zip(spec.normals, lams)) == 0


def test_intersection_empty_examples():
    assert intersection_empty(WEIGHTED_P2, {0, 1, 2})
    assert not intersection_empty(WEIGHTED_P2, {1, 2})
    assert not intersection_empty(WEIGHTED_P2, set())


def test_intersection_empty_is_monotone():
    for spec in corpus()[:20]:
        idx = range(spec.n)
        for size in range(1, spec.n + 1):
            for L in combinations(idx, size):
                if intersection_empty(spec, L):
                    for extra in idx:
                        assert intersection_empty(spec, set(L) | {extra})


def test_is_simple_examples():
    assert is_simple(WEIGHTED_P2)
    nonsimple = FOUR_LINES.with_offsets((0, 0, 1, 1))
    assert not is_simple(nonsimple)
    # the triple point
    assert not intersection_empty(nonsimple, {1, 2, 3})
    central = ArrangementSpec(FOUR_LINES.normals)
    assert not is_simple(central)


small_arrangements = st.integers(1, 3).flatmap(
    lambda d: st.tuples(
        st.lists(st.tuples(*[st.integers(-2, 2)] * d), min_size=d + 1, max_size=5),
        st.lists(st.integers(-2, 2), min_size=5, max_size=5),
    )
)


@settings(max_examples=120, deadline=None)
@given(small_arrangements, st.randoms(use_true_random=False))
def test_is_simple_symmetries(data, rnd):
    normals, offs = data
    spec = ArrangementSpec(tuple(normals), tuple(offs[: len(normals)]))
    base = is_simple(spec)
    perm = list(range(spec.n))
    rnd.shuffle(perm)
    permuted = ArrangementSpec(tuple(spec.normals[i] for i in perm), tuple(spec.offsets[i] for i in perm))
    assert is_simple(permuted) == base
    flip = rnd.randrange(spec.n)
    flipped = ArrangementSpec(
        tuple(tuple(-x for x in a) if i == flip else a for i, a in enumerate(spec.normals)),
        tuple(-r if i == flip else r for i, r in enumerate(spec.offsets)),
    )
    assert is_simple(flipped) == base


def test_is_simple_matches_definition_on_all_subsets():
    for spec in corpus()[:15]:
        full = all(
            intersection_empty(spec, L) or rank([spec.normals[i] for i in L]) == len(L)
            for size in range(1, spec.n + 1)
            for L in combinations(range(spec.n), size)
        )
        assert full == is_simple(spec)


def test_random_affinization_weighted_p2():
    offs = random_simple_affinization(WEIGHTED_P2.normals, seed=3)
    assert is_simple(WEIGHTED_P2.with_offsets(offs))
    assert offs == random_simple_affinization(WEIGHTED_P2.normals, seed=3)
    assert all(isinstance(r, Fraction) for r in offs)


def test_random_affinization_generic_simplex():
    normals = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -2, -3))
    for seed in range(20):
        assert is_simple(ArrangementSpec(normals, random_simple_affinization(normals, seed)))


def test_random_affinization_with_repeated_direction():
    normals = ((1, 0), (1, 0), (0, 1), (-1, -1))
    offs = random_simple_affinization(normals, seed=0)
    assert offs[0] != offs[1]
    assert is_simple(ArrangementSpec(normals, offs))


def test_random_affinization_gives_up():
    with pytest.raises(AffinizationError):
        random_simple_affinization(((1,), (1,)), seed=0, retries=0)
