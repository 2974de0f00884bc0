"""Graded dimensions of a presented quotient ring by plain linear algebra.

No Groebner machinery: the degree-D piece of the ideal is spanned by all
products ``m * g`` with ``g`` a relation and ``m`` a monomial of
complementary degree, and its rank is found by fraction-free elimination.
"""

from __future__ import annotations

import warnings
from functools import lru_cache
from math import gcd, lcm
from typing import Optional, Sequence

from .groebner import PoincarePolynomial
from .polynomial import mono_mul, weighted_degree


class OracleBoundWarning(UserWarning):
    pass


@lru_cache(maxsize=None)
def monomials_of_degree(weights: tuple[int, ...], degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of the given weighted degree, lexicographically."""
    if degree < 0:
        return ()
    if not weights:
        return ((),) if degree == 0 else ()
    w, rest = weights[0], weights[1:]
    out = []
    for e in range(degree // w + 1):
        for tail in monomials_of_degree(rest, degree - e * w):
            out.append((e,) + tail)
    return tuple(out)


def _integer_row(coeffs: dict) -> dict[int, int]:
    den = 1
    for c in coeffs.values():
        den = lcm(den, c.denominator)
    return {k: int(c * den) for k, c in coeffs.items()}


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def sparse_rank(rows) -> int:
    """Rank over Q of integer rows given as {column: value} dicts."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {k: v for k, v in row.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = _primitive(r)
                break
            a, b = p[c], r[c]
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            r = _primitive(new)
    return len(pivots)


def graded_dimension(pres, degree: int) -> int:
    weights = tuple(pres.degrees)
    basis = monomials_of_degree(weights, degree)
    if not basis:
        return 0
    column = {m: i for i, m in enumerate(basis)}
    rows = []
    for poly in pres.polys():
        degs = poly.degrees(weights)
        if len(degs) != 1:
            raise ValueError("relation is not homogeneous")
        e = degs.pop()
        for m in monomials_of_degree(weights, degree - e):
            rows.append(_integer_row({column[mono_mul(k, m)]: c for k, c in poly.terms.items()}))
    return len(basis) - sparse_rank(rows)


def oracle_poincare(pres, max_degree: Optional[int] = None, early_stop: bool = True) -> PoincarePolynomial:
    """Graded dimensions for every even degree up to ``max_degree`` (default 4n).

    With ``early_stop``, computation halts once the quotient vanishes on a
    window of consecutive even degrees as wide as the heaviest generator:
    every monomial of higher degree then has a divisor inside the window, so
    all higher pieces vanish too.
    """
    if max_degree is None:
        max_degree = 4 * pres.n_u
    if max_degree < 0 or max_degree % 2:
        raise ValueError("max_degree must be a nonnegative even integer")
    weights = list(pres.degrees)
    window = max(weights) if weights else 2
    dims: dict[int, int] = {}
    zero_run = 0
    for deg in range(0, max_degree + 1, 2):
        dims[deg] = graded_dimension(pres, deg)
        zero_run = zero_run + 2 if dims[deg] == 0 else 0
        if early_stop and zero_run >= window and deg > 0:
            break
    else:
        top = [dims.get(max_degree, 0), dims.get(max_degree - 2, 0)]
        if max_degree >= 2 and all(top):
            warnings.warn(
                f"top two computed degrees are nonzero; max_degree={max_degree} may be too small",
                OracleBoundWarning,
                stacklevel=2,
            )
    return PoincarePolynomial.from_dict(dims)
