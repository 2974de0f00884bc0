"""Buchberger's algorithm for homogeneous ideals under a weighted order,
standard monomials and Hilbert (Poincare) series of the quotient.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .polynomial import (
    Monomial,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    unit,
    weighted_degree,
)


class NotFiniteError(ArithmeticError):
    """The quotient ring is not finite dimensional."""


class MonomialOrder:
    """Weighted degree, then number of gamma factors, then reverse lex.

    Variables listed in ``gamma_vars`` precede the others; the reverse-lex
    tie-break runs over ``gamma_vars + rest`` in that order.
    """

    def __init__(self, weights: Sequence[int], gamma_vars: Iterable[int] = ()):
        self.weights = tuple(weights)
        self.gamma_vars = tuple(gamma_vars)
        gset = set(self.gamma_vars)
        rest = [v for v in range(len(self.weights)) if v not in gset]
        self._rev = tuple(reversed(self.gamma_vars + tuple(rest)))
        self._cache: dict[Monomial, tuple] = {}

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def key(self, m: Monomial) -> tuple:
        k = self._cache.get(m)
        if k is None:
            k = (
                weighted_degree(m, self.weights),
                sum(m[v] for v in self.gamma_vars),
                tuple(-m[v] for v in self._rev),
            )
            self._cache[m] = k
        return k

    def degree(self, m: Monomial) -> int:
        return weighted_degree(m, self.weights)

    def leading(self, f: dict) -> Monomial:
        return max(f, key=self.key)


Poly = dict  # Monomial -> Fraction, no zero values


def _monic(f: Poly, order: MonomialOrder) -> Poly:
    c = f[order.leading(f)]
    if c == 1:
        return dict(f)
    return {m: v / c for m, v in f.items()}


def _sub_shifted(f: Poly, g: Poly, shift: Monomial, c: Fraction) -> None:
    # f -= c * x^shift * g, in place
    for m, v in g.items():
        mm = mono_mul(m, shift)
        nv = f.get(mm, 0) - c * v
        if nv:
            f[mm] = nv
        else:
            f.pop(mm, None)


def _reduce(f: Poly, basis: Sequence[Poly], leads: Sequence[Monomial], order: MonomialOrder) -> Poly:
    """Full reduction of ``f`` by monic ``basis``."""
    f = dict(f)
    out: Poly = {}
    while f:
        m = order.leading(f)
        c = f[m]
        for g, lm in zip(basis, leads):
            if mono_divides(lm, m):
                _sub_shifted(f, g, mono_div(m, lm), c)
                break
        else:
            out[m] = c
            del f[m]
    return out


def _spoly(f: Poly, g: Poly, lf: Monomial, lg: Monomial) -> Poly:
    lcm = mono_lcm(lf, lg)
    out = {}
    for m, v in f.items():
        out[mono_mul(m, mono_div(lcm, lf))] = v
    _sub_shifted(out, g, mono_div(lcm, lg), Fraction(1))
    return out


@dataclass
class GroebnerBasis:
    polys: list[Polynomial]
    order: MonomialOrder

    @property
    def nvars(self) -> int:
        return self.order.nvars

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [self.order.leading(p.terms) for p in self.polys]

    def normal_form(self, f: Polynomial) -> Polynomial:
        basis = [p.terms for p in self.polys]
        return Polynomial(self.nvars, _reduce(f.terms, basis, self.leading_monomials, self.order))

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)


def buchberger(relations: Iterable[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis; pairs are processed lowest lcm degree first."""
    nvars = order.nvars
    gens = [_monic(p.terms, order) for p in relations if p]
    basis: list[Poly] = []
    leads: list[Monomial] = []
    pairs: list = []
    pending: set[tuple[int, int]] = set()

    def add(f: Poly) -> None:
        f = _monic(f, order)
        lf = order.leading(f)
        j = len(basis)
        basis.append(f)
        leads.append(lf)
        for i in range(j):
            lcm = mono_lcm(leads[i], lf)
            heapq.heappush(pairs, (order.key(lcm), i, j))
            pending.add((i, j))

    # seed in increasing leading order, reducing each against the previous ones
    for g in sorted(gens, key=lambda p: order.key(order.leading(p))):
        r = _reduce(g, basis, leads, order)
        if r:
            add(r)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = mono_lcm(li, lj)
        if mono_mul(li, lj) == lcm:
            continue  # coprime leading monomials
        if any(
            k != i and k != j
            and mono_divides(leads[k], lcm)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis))
        ):
            continue
        r = _reduce(_spoly(basis[i], basis[j], li, lj), basis, leads, order)
        if r:
            add(r)

    return GroebnerBasis(_reduced(basis, leads, order, nvars), order)


def _reduced(basis: list[Poly], leads: list[Monomial], order: MonomialOrder, nvars: int) -> list[Polynomial]:
    keep = []
    for i, lm in enumerate(leads):
        dominated = any(
            j != i and mono_divides(leads[j], lm) and (leads[j] != lm or j < i)
            for j in range(len(leads))
        )
        if not dominated:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    mleads = [leads[i] for i in keep]
    out = []
    for idx, f in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        oleads = mleads[:idx] + mleads[idx + 1:]
        lm = mleads[idx]
        tail = {m: c for m, c in f.items() if m != lm}
        r = _reduce(tail, others, oleads, order)
        r[lm] = Fraction(1)
        out.append(Polynomial(nvars, r))
    out.sort(key=lambda p: order.key(order.leading(p.terms)))
    return out


def standard_monomials(gb: GroebnerBasis) -> list[Monomial]:
    """Monomials outside the leading-term ideal, in increasing order.

    Raises NotFiniteError unless every variable has a pure power among the
    leading monomials.
    """
    nvars = gb.nvars
    leads = gb.leading_monomials
    start = (0,) * nvars
    if start in leads:
        return []
    for v in range(nvars):
        if not any(lm[v] > 0 and sum(lm) == lm[v] for lm in leads):
            raise NotFiniteError(f"variable {v} has no pure power among leading monomials")
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for v in range(nvars):
                mm = mono_mul(m, unit(nvars, v))
                if mm in seen or any(mono_divides(lm, mm) for lm in leads):
                    continue
                seen.add(mm)
                nxt.append(mm)
        frontier = nxt
    return sorted(seen, key=gb.order.key)


@dataclass(frozen=True)
class PoincarePolynomial:
    coefficients: tuple[tuple[int, int], ...]  # (degree, dimension), degree ascending, nonzero only

    @classmethod
    def from_dict(cls, coeffs: dict[int, int]) -> "PoincarePolynomial":
        return cls(tuple(sorted((d, c) for d, c in coeffs.items() if c)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coefficients)

    def __getitem__(self, degree: int) -> int:
        return self.as_dict().get(degree, 0)

    @property
    def euler_characteristic(self) -> int:
        return sum(c for _, c in self.coefficients)

    @property
    def top_degree(self) -> int:
        return self.coefficients[-1][0] if self.coefficients else 0

    def __str__(self) -> str:
        parts = []
        for deg, c in self.coefficients:
            if deg == 0:
                parts.append(str(c))
            else:
                mono = "t" if deg == 1 else f"t^{deg}"
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts) if parts else "0"


def poincare(gb: GroebnerBasis) -> PoincarePolynomial:
    counts: dict[int, int] = {}
    for m in standard_monomials(gb):
        deg = gb.order.degree(m)
        counts[deg] = counts.get(deg, 0) + 1
    return PoincarePolynomial.from_dict(counts)


def presentation_order(pres) -> MonomialOrder:
    return MonomialOrder(pres.degrees, pres.gamma_vars)


def groebner_of(pres) -> GroebnerBasis:
    return buchberger(pres.polys(), presentation_order(pres))
