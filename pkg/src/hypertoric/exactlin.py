"""Exact integer and rational linear algebra.

Matrices are plain lists of rows of Python ints (or Fractions where noted).
Nothing in here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

IntMatrix = list[list[int]]
RatVector = list[Fraction]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> list[list]:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    if inner == 0:
        return [[0] * cols for _ in a]
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], x: Sequence) -> list:
    return [sum(r * v for r, v in zip(row, x)) for row in a]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _smallest_nonzero(values, indices):
    best = None
    for i in indices:
        v = values(i)
        if v != 0 and (best is None or abs(v) < abs(values(best))):
            best = i
    return best


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``u @ m == h``.  ``h`` is in
    row echelon form, every pivot is positive and the entries above a pivot
    lie in ``[0, pivot)``.  Pivots are chosen by smallest absolute value.
    """
    h = [list(map(int, row)) for row in m]
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u = identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            p = _smallest_nonzero(lambda i: h[i][c], range(r, rows))
            if p is None:
                break
            h[r], h[p] = h[p], h[r]
            u[r], u[p] = u[p], u[r]
            for i in range(r + 1, rows):
                q = h[i][c] // h[r][c]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            if not any(h[i][c] for i in range(r + 1, rows)):
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def smith_normal_form(
    m: Sequence[Sequence[int]],
) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(s, u, v)`` with ``u @ m @ v == s``.

    ``u`` and ``v`` are unimodular, ``s`` is diagonal with nonnegative entries
    and each diagonal entry divides the next.
    """
    s = [list(map(int, row)) for row in m]
    rows = len(s)
    cols = len(s[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] -= q * row[src]
        s[dst] = [x - q * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in s:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if s[i][j] and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return s, u, v
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            piv = s[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = s[i][t] // piv
                if q:
                    add_row(i, t, q)
                if s[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = s[t][j] // piv
                if q:
                    add_col(j, t, q)
                if s[t][j]:
                    clean = False
            if not clean:
                continue
            # pivot must divide the rest of the trailing block
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if s[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return s, u, v


def diagonal(s: Sequence[Sequence[int]]) -> list[int]:
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def rank(m: Sequence[Sequence]) -> int:
    return len(_row_echelon(m)[1])


def _row_echelon(m: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rational_feasible(a: Sequence[Sequence[int]], b: Sequence) -> Optional[RatVector]:
    """Solve ``a x = b`` exactly over Q.

    Returns one solution (free variables set to zero) or ``None`` when the
    system is inconsistent, i.e. ``rank(a) < rank(a | b)``.
    """
    if len(a) != len(b):
        raise ValueError("row count of a does not match length of b")
    cols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = _row_echelon(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return x


def integer_solve(a: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list[int]]:
    """An integer solution of ``a x = b`` or ``None`` if none exists."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    s, u, v = smith_normal_form(a)
    ub = matvec(u, b)
    z = [0] * cols
    for i in range(rows):
        d = s[i][i] if i < cols else 0
        if d == 0:
            if ub[i] != 0:
                return None
        elif ub[i] % d:
            return None
        else:
            z[i] = ub[i] // d
    return matvec(v, z)


def unimodular_inverse(u: Sequence[Sequence[int]]) -> IntMatrix:
    n = len(u)
    red, pivots = _row_echelon([list(row) + e for row, e in zip(u, identity(n))])
    if len(pivots) < n or pivots[-1] >= n:
        raise ValueError("matrix is singular")
    inv = [row[n:] for row in red]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def integer_kernel_basis(beta: Sequence[Sequence[int]]) -> IntMatrix:
    """n x k matrix whose columns are a Z-basis of ker(beta) in Z^n.

    The basis is canonical: its transpose is in Hermite normal form.
    """
    n = len(beta[0]) if beta else 0
    if n == 0:
        return []
    h, u = hermite_normal_form(transpose(beta))
    kernel_rows = [u[i] for i in range(n) if not any(h[i])]
    if not kernel_rows:
        return [[] for _ in range(n)]
    canon, _ = hermite_normal_form(kernel_rows)
    return transpose(canon)


@dataclass(frozen=True)
class LatticeQuotient:
    """(span_Q(V) cap Z^d) / span_Z(V) as a product of cyclic groups."""

    invariant_factors: tuple[int, ...]
    coset_reps: tuple[tuple[int, ...], ...]
    dim: int = 0

    @property
    def order(self) -> int:
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    def elements(self) -> list[tuple[int, ...]]:
        """One integer representative per element of the quotient."""
        out = []
        for ks in product(*(range(f) for f in self.invariant_factors)):
            out.append(
                tuple(sum(k * g[i] for k, g in zip(ks, self.coset_reps)) for i in range(self.dim))
            )
        return out


def lattice_quotient(vectors: Sequence[Sequence[int]]) -> LatticeQuotient:
    vectors = [list(map(int, v)) for v in vectors]
    if not vectors:
        return LatticeQuotient((), (), 0)
    m = transpose(vectors)  # d x r, columns are the vectors
    r = len(vectors)
    s, u, _ = smith_normal_form(m)
    diag = diagonal(s)
    if len(diag) < r or any(x == 0 for x in diag):
        raise ValueError("input vectors are linearly dependent over Q")
    # u^{-1} e_i for i < r generate the saturation; the i-th has order diag[i]
    u_inv = unimodular_inverse(u)
    factors, reps = [], []
    for i, f in enumerate(diag):
        if f > 1:
            factors.append(f)
            reps.append(tuple(row[i] for row in u_inv))
    return LatticeQuotient(tuple(factors), tuple(reps), len(m))
