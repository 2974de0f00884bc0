"""Generators-and-relations presentation of the orbifold cohomology ring.

Variables are laid out as ``u_1..u_n`` followed by one ``g_j`` per
nontrivial group element, in increasing logweight order.  The identity
sector's generator is replaced by 1 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .arrangement import ArrangementSpec, intersection_empty, is_simple, validate
from .polynomial import Monomial, Polynomial, unit
from .stabilizers import StabilizerGroup, TorusElement, abc_sets, full_group


class ValidationError(ValueError):
    def __init__(self, report):
        self.report = report
        names = ", ".join(c.name for c in report.failures)
        super().__init__(f"arrangement failed validation: {names}")


class NotSimpleError(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    origin: str  # "I", "J" or "K"
    poly: Polynomial
    label: str = ""


@dataclass
class RingPresentation:
    n_u: int
    gammas: list[TorusElement]
    relations: list[Relation]

    @property
    def nvars(self) -> int:
        return self.n_u + len(self.gammas)

    @property
    def names(self) -> list[str]:
        return [f"u{i + 1}" for i in range(self.n_u)] + [f"g{j + 1}" for j in range(len(self.gammas))]

    @property
    def degrees(self) -> list[int]:
        return [2] * self.n_u + [t.degree for t in self.gammas]

    @property
    def gamma_vars(self) -> list[int]:
        return list(range(self.n_u, self.nvars))

    def by_origin(self, origin: str) -> list[Polynomial]:
        return [r.poly for r in self.relations if r.origin == origin]

    def polys(self) -> list[Polynomial]:
        return [r.poly for r in self.relations]


def _layout(n: int, group: StabilizerGroup) -> tuple[int, dict[TorusElement, Optional[int]]]:
    var = {group.identity: None}
    for j, t in enumerate(group.nontrivial):
        var[t] = n + j
    return n + len(group) - 1, var


def _gamma_mono(nvars: int, var: Optional[int]) -> Monomial:
    return (0,) * nvars if var is None else unit(nvars, var)


def _u_product(nvars: int, powers: dict[int, int]) -> Monomial:
    return tuple(powers.get(i, 0) for i in range(nvars))


def _sector_label(t: TorusElement) -> str:
    return "(" + ", ".join(str(a) for a in t.logweights) + ")"


def ideal_I(group: StabilizerGroup) -> list[Relation]:
    """One product relation per unordered pair of nontrivial elements."""
    n = len(group.identity.logweights)
    nvars, var = _layout(n, group)
    out = []
    for t1, t2 in combinations_with_self(group.nontrivial):
        abc = abc_sets(t1, t2)
        sign = -1 if (len(abc.A) + len(abc.B)) % 2 else 1
        powers = {i: 2 for i in abc.A}
        powers.update({j: 1 for j in abc.B | abc.C})
        left = _gamma_mono(nvars, var[t1])
        left = tuple(x + y for x, y in zip(left, _gamma_mono(nvars, var[t2])))
        right = tuple(
            x + y for x, y in zip(_u_product(nvars, powers), _gamma_mono(nvars, var[t1 * t2]))
        )
        poly = Polynomial(nvars, [(left, 1), (right, -sign)])
        out.append(Relation("I", poly, f"{_sector_label(t1)} * {_sector_label(t2)}"))
    return out


def combinations_with_self(items: Sequence):
    for i in range(len(items)):
        for j in range(i, len(items)):
            yield items[i], items[j]


def ideal_J(normals: Sequence[Sequence[int]], nvars: Optional[int] = None) -> list[Relation]:
    """The d linear forms sum_i (a_i)_j u_i."""
    n = len(normals)
    nvars = n if nvars is None else nvars
    d = len(normals[0])
    out = []
    for j in range(d):
        poly = Polynomial(nvars, [(unit(nvars, i), normals[i][j]) for i in range(n)])
        out.append(Relation("J", poly, f"coordinate {j + 1}"))
    return out


def minimal_empty_sets(spec: ArrangementSpec, candidates: Sequence[int], base: frozenset[int]) -> list[tuple[int, ...]]:
    """Inclusion-minimal L within ``candidates`` such that H_L meets H_base emptily.

    Minimal sets have at most d + 1 elements: a minimal infeasible subsystem
    has at most rank + 1 equations.
    """
    kept: list[tuple[int, ...]] = []
    cap = min(len(candidates), spec.d + 1)
    for size in range(cap + 1):
        for L in combinations(sorted(candidates), size):
            s = set(L)
            if any(s.issuperset(k) for k in kept):
                continue
            if intersection_empty(spec, s | base):
                kept.append(L)
    return kept


def ideal_K(spec: ArrangementSpec, group: StabilizerGroup) -> list[Relation]:
    nvars, var = _layout(spec.n, group)
    out = []
    for t in group:
        for L in minimal_empty_sets(spec, sorted(t.fixed), t.moved):
            mono = _u_product(nvars, {i: 1 for i in L})
            mono = tuple(x + y for x, y in zip(mono, _gamma_mono(nvars, var[t])))
            label = "identity" if t.is_identity else _sector_label(t)
            out.append(Relation("K", Polynomial.monomial(nvars, mono), label))
    return out


def check_buildable(spec: ArrangementSpec) -> None:
    report = validate(spec)
    if not report.ok:
        raise ValidationError(report)
    if not is_simple(spec):
        raise NotSimpleError("arrangement is not simple")


def build_presentation(spec: ArrangementSpec, group: Optional[StabilizerGroup] = None) -> RingPresentation:
    check_buildable(spec)
    if group is None:
        group = full_group(spec)
    nvars, _ = _layout(spec.n, group)
    relations = ideal_I(group) + ideal_J(spec.normals, nvars) + ideal_K(spec, group)
    return RingPresentation(spec.n, list(group.nontrivial), relations)


def ordinary_presentation(spec: ArrangementSpec) -> RingPresentation:
    """Ordinary cohomology: linear relations plus prod_{i in L} u_i for empty H_L."""
    check_buildable(spec)
    relations = ideal_J(spec.normals)
    for L in minimal_empty_sets(spec, range(spec.n), frozenset()):
        mono = _u_product(spec.n, {i: 1 for i in L})
        relations.append(Relation("K", Polynomial.monomial(spec.n, mono), "identity"))
    return RingPresentation(spec.n, [], relations)
