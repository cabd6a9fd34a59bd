"""Integer lattices: Hermite normal form and saturation."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .coeff import PrimeField, prime_factors
from .linalg import nullspace


def hnf(rows, n: int) -> tuple:
    """Row Hermite normal form; zero rows are dropped."""
    mat = [list(r) for r in rows if any(r)]
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, len(mat)) if mat[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(mat[i][c]))
            mat[r], mat[piv] = mat[piv], mat[r]
            clean = True
            for i in range(r + 1, len(mat)):
                if mat[i][c]:
                    q = mat[i][c] // mat[r][c]
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
                    if mat[i][c]:
                        clean = False
            if clean:
                break
        if r < len(mat) and mat[r][c]:
            if mat[r][c] < 0:
                mat[r] = [-a for a in mat[r]]
            for i in range(r):
                q = mat[i][c] // mat[r][c]
                if q:
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
            r += 1
            mat = mat[:r] + [row for row in mat[r:] if any(row)]
    return tuple(tuple(row) for row in mat[:r])


def clear_denominators(v) -> tuple:
    """Primitive integer multiple of a rational vector."""
    den = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def p_saturate(rows, p: int) -> list[tuple]:
    """Enlarge the lattice spanned by ``rows`` until ``Z^n / L`` has no p-torsion."""
    rows = [list(r) for r in rows]
    F = PrimeField(p)
    while rows:
        n = len(rows[0])
        cols = [tuple(rows[i][k] % p for i in range(len(rows))) for k in range(n)]
        ker = nullspace(F, cols, len(rows))
        if not ker:
            break
        c = ker[0]
        j = next(i for i, x in enumerate(c) if x)
        inv = pow(c[j], -1, p)
        c = [x * inv % p for x in c]
        combo = [sum(c[i] * rows[i][k] for i in range(len(rows))) for k in range(n)]
        assert all(x % p == 0 for x in combo)
        rows[j] = [x // p for x in combo]
    return [tuple(r) for r in rows]


def saturate(rows, n: int) -> tuple:
    """HNF basis of ``span_Q(rows) cap Z^n``."""
    basis = hnf(rows, n)
    if not basis:
        return basis
    minor = 1
    for row in basis:
        minor *= next(x for x in row if x)
    current = [tuple(r) for r in basis]
    for p in prime_factors(minor):
        current = p_saturate(current, p)
    return hnf(current, n)


def lattice_contains(basis, v, n: int) -> bool:
    return hnf(list(basis) + [tuple(v)], n) == tuple(basis)
