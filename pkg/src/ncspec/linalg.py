"""Gaussian elimination over exact fields and canonical subspaces.

Every subspace is stored in reduced row-echelon form, so two subspaces are
equal exactly when their stored rows are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coeff import PrimeField


def _rref_mod_p(rows, n, p):
    mat = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        row = mat[r]
        inv = pow(row[c], -1, p)
        if inv != 1:
            row = [x * inv % p for x in row]
            mat[r] = row
        for i in range(len(mat)):
            if i != r:
                f = mat[i][c]
                if f:
                    other = mat[i]
                    mat[i] = [(x - f * y) % p for x, y in zip(other, row)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(x) for x in mat[:r]], pivots


def rref(F, rows: Iterable[Sequence], n: int):
    """Reduced row-echelon form; returns ``(rows, pivots)`` with zero rows dropped."""
    rows = [list(r) for r in rows]
    if isinstance(F, PrimeField):
        return _rref_mod_p(rows, n, F.p)
    zero = F.zero
    mat = rows
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c] != zero:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        row = mat[r]
        inv = F.inv(row[c])
        row = [F.mul(x, inv) if x != zero else zero for x in row]
        mat[r] = row
        for i in range(len(mat)):
            if i != r:
                f = mat[i][c]
                if f != zero:
                    other = mat[i]
                    mat[i] = [
                        F.sub(x, F.mul(f, y)) if y != zero else x for x, y in zip(other, row)
                    ]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(x) for x in mat[:r]], pivots


def nullspace(F, matrix: Sequence[Sequence], n: int) -> list[tuple]:
    """Basis of ``{x : M x = 0}`` for an ``m x n`` matrix given by rows."""
    rows, pivots = rref(F, matrix, n)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for fcol in free:
        v = [F.zero] * n
        v[fcol] = F.one
        for row, pc in zip(rows, pivots):
            if row[fcol] != F.zero:
                v[pc] = F.neg(row[fcol])
        basis.append(tuple(v))
    return basis


def rank(F, matrix, n: int) -> int:
    return len(rref(F, matrix, n)[0])


def mat_vec(F, matrix, v):
    """``M v`` with ``M`` given by rows."""
    zero = F.zero
    out = []
    for row in matrix:
        acc = zero
        for a, b in zip(row, v):
            if a != zero and b != zero:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return tuple(out)


def vec_comb(F, n, pairs):
    """``sum c_i v_i`` for ``pairs = [(c_i, v_i), ...]``."""
    zero = F.zero
    out = [zero] * n
    for c, v in pairs:
        if c == zero:
            continue
        for i, x in enumerate(v):
            if x != zero:
                out[i] = F.add(out[i], F.mul(c, x))
    return tuple(out)


def solve(F, matrix, rhs, n: int):
    """One solution ``x`` of ``M x = rhs`` or ``None`` if inconsistent."""
    aug = [tuple(row) + (b,) for row, b in zip(matrix, rhs)]
    rows, pivots = rref(F, aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [F.zero] * n
    for row, pc in zip(rows, pivots):
        x[pc] = row[n]
    return tuple(x)


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of ``F^n`` kept in reduced row-echelon form."""

    field: object
    n: int
    rows: tuple
    pivots: tuple

    @classmethod
    def span(cls, F, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows, pivots = rref(F, vectors, n)
        return cls(F, n, tuple(rows), tuple(pivots))

    @classmethod
    def zero(cls, F, n: int) -> "Subspace":
        return cls(F, n, (), ())

    @classmethod
    def full(cls, F, n: int) -> "Subspace":
        rows = tuple(
            tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)
        )
        return cls(F, n, rows, tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> tuple:
        return self.rows

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.rows))

    def __len__(self):
        return self.dim

    def reduce(self, v: Sequence) -> tuple:
        """Normal form of ``v`` modulo this subspace (zero at every pivot)."""
        F = self.field
        zero = F.zero
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c != zero:
                for i, x in enumerate(row):
                    if x != zero:
                        v[i] = F.sub(v[i], F.mul(c, x))
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        zero = self.field.zero
        return all(x == zero for x in self.reduce(v))

    __contains__ = contains

    def coords(self, v: Sequence) -> tuple:
        """Coordinates of a member ``v`` with respect to :attr:`basis`."""
        return tuple(v[pc] for pc in self.pivots)

    def combine(self, coeffs: Sequence) -> tuple:
        return vec_comb(self.field, self.n, zip(coeffs, self.rows))

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __le__(self, other):
        return self.issubset(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.n, self.rows + other.rows)

    def intersection(self, other: "Subspace") -> "Subspace":
        F = self.field
        a, b = self.rows, other.rows
        if not a or not b:
            return Subspace.zero(F, self.n)
        # sum x_i a_i = sum y_j b_j  <=>  [A^T | -B^T] (x, y) = 0
        cols = list(a) + [tuple(F.neg(x) for x in r) for r in b]
        m = len(cols)
        matrix = [tuple(cols[j][i] for j in range(m)) for i in range(self.n)]
        ker = nullspace(F, matrix, m)
        vecs = [vec_comb(F, self.n, zip(k[: len(a)], a)) for k in ker]
        return Subspace.span(F, self.n, vecs)

    def complement_indices(self) -> list[int]:
        piv = set(self.pivots)
        return [i for i in range(self.n) if i not in piv]

    def key(self):
        F = self.field
        return tuple(tuple(F.key(x) for x in r) for r in self.rows)
