"""Rational cooriented weighted hyperplane arrangements.

Hyperplane ``i`` is ``{x : <x, a_i> = r_i}`` with integer normal ``a_i``
(not necessarily primitive) and rational offset ``r_i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import exactlin


class AffinizationError(RuntimeError):
    pass


def _as_fraction(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True)
class ArrangementSpec:
    normals: tuple[tuple[int, ...], ...]
    offsets: tuple[Fraction, ...] = ()

    def __post_init__(self):
        normals = tuple(tuple(int(x) for x in a) for a in self.normals)
        offsets = tuple(_as_fraction(x) for x in self.offsets)
        if not offsets:
            offsets = (Fraction(0),) * len(normals)
        object.__setattr__(self, "normals", normals)
        object.__setattr__(self, "offsets", offsets)

    @property
    def n(self) -> int:
        return len(self.normals)

    @property
    def d(self) -> int:
        return len(self.normals[0]) if self.normals else 0

    @property
    def k(self) -> int:
        return self.n - self.d

    @property
    def beta(self) -> list[list[int]]:
        """d x n matrix whose i-th column is a_i."""
        return exactlin.transpose(self.normals)

    def with_offsets(self, offsets: Sequence) -> "ArrangementSpec":
        return ArrangementSpec(self.normals, tuple(offsets))


@dataclass
class Check:
    name: str
    passed: bool
    index: Optional[int] = None
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def compute_weights(spec: ArrangementSpec) -> list[tuple[int, ...]]:
    """Torus weights lambda_i: the rows of the canonical kernel basis of beta."""
    kernel = exactlin.integer_kernel_basis(spec.beta)
    return [tuple(row) for row in kernel]


def validate(spec: ArrangementSpec) -> ValidationReport:
    report = ValidationReport()
    normals = spec.normals
    if not normals or any(len(a) != spec.d for a in normals) or spec.d == 0:
        report.checks.append(Check("shape", False, detail="normals must be a nonempty rectangular n x d array"))
        return report
    report.checks.append(Check("shape", True))

    if len(spec.offsets) != spec.n:
        report.checks.append(
            Check("offsets", False, detail=f"expected {spec.n} offsets, got {len(spec.offsets)}")
        )
    else:
        report.checks.append(Check("offsets", True))

    zero = next((i for i, a in enumerate(normals) if not any(a)), None)
    report.checks.append(Check("nonzero_normals", zero is None, zero, "a_i is the zero vector" if zero is not None else ""))

    report.checks.append(
        Check("torus_rank", spec.k >= 1, detail=f"k = n - d = {spec.k}" + (" < 1" if spec.k < 1 else ""))
    )

    s, _, _ = exactlin.smith_normal_form(spec.beta)
    diag = exactlin.diagonal(s)
    spans = len(diag) == spec.d and all(x == 1 for x in diag)
    report.checks.append(
        Check("integer_span", spans, detail="" if spans else f"Smith invariant factors {diag}")
    )

    if spans and spec.k >= 1:
        weights = compute_weights(spec)
        bad = next((i for i, lam in enumerate(weights) if not any(lam)), None)
        report.checks.append(
            Check("nonzero_weights", bad is None, bad, "lambda_i = 0" if bad is not None else "")
        )
    else:
        report.checks.append(Check("nonzero_weights", False, detail="weights undefined"))
    return report


def intersection_empty(spec: ArrangementSpec, subset: Iterable[int]) -> bool:
    """True iff the hyperplanes indexed by ``subset`` have no common point."""
    subset = sorted(set(subset))
    if not subset:
        return False
    a = [spec.normals[i] for i in subset]
    b = [spec.offsets[i] for i in subset]
    return exactlin.rational_feasible(a, b) is None


def is_simple(spec: ArrangementSpec) -> bool:
    # any violating set contains one of size <= rank + 1 <= d + 1
    for size in range(2, min(spec.n, spec.d + 1) + 1):
        for subset in combinations(range(spec.n), size):
            if exactlin.rank([spec.normals[i] for i in subset]) < size and not intersection_empty(spec, subset):
                return False
    return True


def random_simple_affinization(
    normals: Sequence[Sequence[int]], seed: int = 0, retries: int = 1000
) -> tuple[Fraction, ...]:
    """Integer offsets making the arrangement simple, reproducible from ``seed``."""
    rng = random.Random(seed)
    n = len(normals)
    for attempt in range(retries):
        # a wide range keeps different seeds from landing on the same offsets
        bound = 10 * n + attempt
        offsets = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))
        if is_simple(ArrangementSpec(tuple(map(tuple, normals)), offsets)):
            return offsets
    raise AffinizationError(f"no simple affinization found after {retries} draws (seed {seed})")
