"""The finite group generated by finite stabilizers and its per-element data.

A torus element is stored by its logweight tuple: the fractional parts
``(a_1(t), ..., a_n(t))`` of a lift ``X`` in ker(beta).  Since the torus
embeds in T^n, this tuple determines the element.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import floor, lcm
from typing import Sequence

from . import exactlin
from .arrangement import ArrangementSpec


class GroupTooLargeError(RuntimeError):
    pass


def _frac(x: Fraction) -> Fraction:
    return x - floor(x)


@dataclass(frozen=True, order=True)
class TorusElement:
    logweights: tuple[Fraction, ...]
    lift: tuple[Fraction, ...] = field(compare=False, repr=False, default=())

    @classmethod
    def from_lift(cls, lift: Sequence) -> "TorusElement":
        lift = tuple(Fraction(x) for x in lift)
        return cls(tuple(_frac(x) for x in lift), lift)

    @classmethod
    def identity(cls, n: int) -> "TorusElement":
        zero = (Fraction(0),) * n
        return cls(zero, zero)

    @property
    def is_identity(self) -> bool:
        return not any(self.logweights)

    @property
    def fixed(self) -> frozenset[int]:
        """S(t): coordinates on which t acts trivially."""
        return frozenset(i for i, a in enumerate(self.logweights) if a == 0)

    @property
    def moved(self) -> frozenset[int]:
        """Complement of S(t)."""
        return frozenset(i for i, a in enumerate(self.logweights) if a != 0)

    @property
    def age(self) -> int:
        # normal weights come in pairs +-lambda_i, each pair contributes 1
        return len(self.moved)

    @property
    def degree(self) -> int:
        return 2 * self.age

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        return TorusElement.from_lift(x + y for x, y in zip(self.lift, other.lift))

    def inverse(self) -> "TorusElement":
        return TorusElement.from_lift(-x for x in self.lift)


@dataclass(frozen=True)
class SectorPairData:
    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]


def enumerate_bases(normals: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All index sets (0-based) whose normals form a basis of Q^d."""
    n = len(normals)
    d = len(normals[0]) if n else 0
    return [
        sub
        for sub in combinations(range(n), d)
        if exactlin.determinant([normals[j] for j in sub]) != 0
    ]


def gamma_S(spec: ArrangementSpec, basis: Sequence[int]) -> list[TorusElement]:
    """Elements of the stabilizer group attached to a basis of normals.

    Each coset ``y`` of Z^d / span_Z{a_j : j in basis} gives a lift ``X`` with
    ``X_k = c_k`` off the basis and ``X_k = c_k - d_k`` on it, where
    ``y = sum_i c_i a_i`` over Z and ``y = sum_j d_j a_j`` over Q.
    """
    basis = tuple(basis)
    vecs = [spec.normals[j] for j in basis]
    if len(basis) != spec.d or exactlin.determinant(vecs) == 0:
        raise ValueError(f"normals {basis} do not form a basis")
    quotient = exactlin.lattice_quotient(vecs)
    beta = spec.beta
    basis_matrix = exactlin.transpose(vecs)
    out = set()
    for y in quotient.elements():
        c = exactlin.integer_solve(beta, y)
        if c is None:
            raise ValueError("normals do not span Z^d")
        coeffs = exactlin.rational_feasible(basis_matrix, y)
        lift = [Fraction(x) for x in c]
        for j, dj in zip(basis, coeffs):
            lift[j] -= dj
        out.add(TorusElement.from_lift(lift))
    return sorted(out)


class StabilizerGroup:
    """Finite abelian group of torus elements, sorted by logweight tuple."""

    def __init__(self, elements: Sequence[TorusElement]):
        self.elements: list[TorusElement] = sorted(elements)
        self.index: dict[TorusElement, int] = {t: i for i, t in enumerate(self.elements)}
        if not self.elements or not self.elements[0].is_identity:
            raise ValueError("group must contain the identity")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, t: TorusElement) -> bool:
        return t in self.index

    @property
    def identity(self) -> TorusElement:
        return self.elements[0]

    @property
    def nontrivial(self) -> list[TorusElement]:
        return self.elements[1:]

    def product(self, i: int, j: int) -> int:
        return self.index[self.elements[i] * self.elements[j]]

    def inverse(self, i: int) -> int:
        return self.index[self.elements[i].inverse()]

    def table(self) -> list[list[int]]:
        m = len(self)
        return [[self.product(i, j) for j in range(m)] for i in range(m)]


def _generators(spec: ArrangementSpec) -> list[TorusElement]:
    out = set()
    for basis in enumerate_bases(spec.normals):
        out.update(gamma_S(spec, basis))
    return sorted(out)


def group_order(spec: ArrangementSpec, generators: Sequence[TorusElement] = None) -> int:
    """Order of the group generated by all finite stabilizers, without closure.

    In coordinates of a kernel basis K the torus is R^k / Z^k, and the group
    is L / Z^k where L = Z^k + span_Z of the generators' coordinates.
    """
    if generators is None:
        generators = _generators(spec)
    kernel = exactlin.integer_kernel_basis(spec.beta)
    k = spec.k
    coords = []
    for g in generators:
        y = exactlin.rational_feasible(kernel, g.lift)
        if y is None:
            raise ValueError("lift is not in ker(beta)")
        coords.append(y)
    den = 1
    for y in coords:
        for x in y:
            den = lcm(den, x.denominator)
    rows = [[den * int(i == j) for j in range(k)] for i in range(k)]
    rows += [[int(x * den) for x in y] for y in coords]
    h, _ = exactlin.hermite_normal_form(rows)
    index = 1
    for i in range(k):
        index *= h[i][i]
    return den**k // index


def full_group(spec: ArrangementSpec, budget: int = 10**6) -> StabilizerGroup:
    generators = _generators(spec)
    order = group_order(spec, generators)
    if order > budget:
        raise GroupTooLargeError(f"group has {order} elements, over the budget of {budget}")
    ident = TorusElement.identity(spec.n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        t = queue.popleft()
        for g in generators:
            s = t * g
            if s not in seen:
                seen.add(s)
                if len(seen) > budget:
                    raise GroupTooLargeError(f"group closure exceeded {budget} elements")
                queue.append(s)
    return StabilizerGroup(seen)


def abc_sets(t1: TorusElement, t2: TorusElement) -> SectorPairData:
    t12 = t1 * t2
    A, B, C = set(), set(), set()
    for i in t1.moved & t2.moved:
        if t12.logweights[i] == 0:
            A.add(i)
        elif t1.logweights[i] + t2.logweights[i] - t12.logweights[i] == 0:
            B.add(i)
        else:
            C.add(i)
    return SectorPairData(frozenset(A), frozenset(B), frozenset(C))
