"""Fixture arrangements and a seeded random corpus shared by the tests."""

import random
from functools import lru_cache

from hypertoric.arrangement import ArrangementSpec, random_simple_affinization, validate
from hypertoric.stabilizers import group_order

WEIGHTED_P2 = ArrangementSpec(((1, 0), (0, 1), (-2, -1)), (0, 0, 1))
FOUR_LINES = ArrangementSpec(((1, 0), (0, 1), (-1, -1), (-1, 1)), (0, 0, 1, 2))
SMOOTH_TP2 = ArrangementSpec(((1, 0), (0, 1), (-1, -1)), (0, 0, 1))
# cyclic group of order 6: beta has rows (-3,0,1,0,0), (-2,1,0,0,0), (0,0,0,1,-1)
CYCLIC6 = ArrangementSpec(((-3, -2, 0), (0, 1, 0), (1, 0, 0), (0, 0, 1), (0, 0, -1)), (1, 0, 0, 0, 1))


def m_n(n):
    return ArrangementSpec(((1, 0), (0, 1), (-n, -1)), (0, 0, 1))


FIXTURES = {
    "weighted_p2": WEIGHTED_P2,
    "four_lines": FOUR_LINES,
    "smooth_tp2": SMOOTH_TP2,
    "cyclic6": CYCLIC6,
    **{f"M_{n}": m_n(n) for n in range(3, 7)},
}

CORPUS_SIZE = 60
MAX_GROUP = 12


@lru_cache(maxsize=None)
def corpus(size=CORPUS_SIZE, seed=20261018):
    """Valid simple arrangements with n <= 6, d <= 3 and a modest stabilizer group."""
    rng = random.Random(seed)
    out = []
    while len(out) < size:
        d = rng.choice([1, 2, 2, 3, 3])
        n = rng.randint(d + 1, 6)
        normals = tuple(
            tuple(rng.choice([-2, -1, -1, 0, 0, 1, 1, 2]) for _ in range(d)) for _ in range(n)
        )
        spec = ArrangementSpec(normals)
        if not validate(spec).ok or group_order(spec) > MAX_GROUP:
            continue
        out.append(spec.with_offsets(random_simple_affinization(normals, seed=len(out))))
    return tuple(out)
