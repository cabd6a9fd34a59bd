"""Structure of finite-dimensional algebras over finite fields.

Radical, Wedderburn blocks, maximal two-sided ideals with their residue
data, primitive idempotents of commutative semisimple algebras and lifting
of block idempotents through the radical.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .algebra import (
    AlgebraError,
    SCAlgebra,
    TwoSidedIdeal,
    center,
    quotient,
    restrict_to_prime_field,
    subalgebra,
)
from .linalg import Subspace, nullspace


class StructureError(ValueError):
    pass


# ---------------------------------------------------------------------------
# radical
# ---------------------------------------------------------------------------


def trace_vector(A: SCAlgebra) -> list:
    """``t_k = Tr(y -> e_k y)``."""
    F = A.field
    t = []
    for k in range(A.dim):
        acc = F.zero
        for i in range(A.dim):
            for m, c in A.table[k][i]:
                if m == i:
                    acc = F.add(acc, c)
        t.append(acc)
    return t


def trace_form_kernel(A: SCAlgebra) -> Subspace:
    """``{a : Tr(L_{ab}) = 0 for all b}``; always contains the radical."""
    F = A.field
    t = trace_vector(A)
    d = A.dim
    gram = [[F.zero] * d for _ in range(d)]
    for j in range(d):
        for k in range(d):
            acc = F.zero
            for m, c in A.table[j][k]:
                if t[m] != F.zero:
                    acc = F.add(acc, F.mul(c, t[m]))
            gram[j][k] = acc
    # a = sum x_j e_j lies in the kernel iff sum_j x_j gram[j][k] = 0 for all k
    rows = [tuple(gram[j][k] for j in range(d)) for k in range(d)]
    return Subspace.span(F, d, nullspace(F, rows, d))


def _left_matrices(A: SCAlgebra, xs) -> np.ndarray:
    d = A.dim
    out = np.zeros((len(xs), d, d), dtype=np.int64)
    for b, x in enumerate(xs):
        for i, a in enumerate(x):
            if not a:
                continue
            row = A.table[i]
            for j in range(d):
                for k, c in row[j]:
                    out[b, k, j] += a * c
    return out


def _matpow_mod(M: np.ndarray, e: int, mod: int) -> np.ndarray:
    d = M.shape[-1]
    # float64 products are exact while d * mod^2 < 2^53, and go through BLAS
    dtype = np.float64 if d * mod * mod < 2**52 else np.int64
    result = np.broadcast_to(np.eye(d, dtype=dtype), M.shape).copy()
    base = (M % mod).astype(dtype)
    while e:
        if e & 1:
            result = np.matmul(result, base) % mod
        e >>= 1
        if e:
            base = np.matmul(base, base) % mod
    return np.rint(result).astype(np.int64) if dtype is np.float64 else result


def _radical_prime_field(A: SCAlgebra) -> Subspace:
    """Radical over F_p by iterated trace conditions on integer lifts.

    ``I_0`` is the trace-form kernel and
    ``I_i = {a in I_{i-1} : g_i(ab) = 0 for all b}`` where
    ``g_i(x) = Tr(lift(L_x)^(p^i)) / p^i mod p``; the radical is ``I_l`` for
    ``l = floor(log_p dim)``.
    """
    F = A.field
    p = F.p
    n = A.dim
    I = trace_form_kernel(A)
    i = 1
    while p**i <= n and I.dim:
        mod = p ** (i + 1)
        pe = p**i
        m = I.dim
        xs = [A.mul(a, A.basis_vector(k)) for a in I.rows for k in range(n)]
        mats = _left_matrices(A, xs)
        powered = _matpow_mod(mats, pe, mod)
        traces = np.trace(powered, axis1=1, axis2=2) % mod
        if np.any(traces % pe):
            raise AssertionError("trace of a p-power lift is not divisible by p^i")
        vals = ((traces // pe) % p).reshape(m, n)
        rows = [tuple(int(vals[j, k]) for j in range(m)) for k in range(n)]
        coeffs = nullspace(F, rows, m)
        I = Subspace.span(F, n, [I.combine(c) for c in coeffs])
        i += 1
    return I


def radical(A: SCAlgebra) -> TwoSidedIdeal:
    """Jacobson radical of an algebra over a finite field (or Q)."""
    F = A.field
    I0 = trace_form_kernel(A)
    if F.char == 0 or F.char > A.dim or I0.dim == 0:
        return TwoSidedIdeal.of(I0)
    res = restrict_to_prime_field(A)
    Jp = _radical_prime_field(res.algebra)
    if res.k == 1:
        return TwoSidedIdeal.of(Jp)
    return TwoSidedIdeal.of(Subspace.span(F, A.dim, [res.up(v) for v in Jp.rows]))


# ---------------------------------------------------------------------------
# commutative splitting
# ---------------------------------------------------------------------------


def _split_commutative(C: SCAlgebra) -> list[tuple]:
    F = C.field
    m = C.dim
    Q = F.order
    cols = [C.sub(C.pow(b, Q), b) for b in C.basis()]
    matrix = [tuple(cols[j][k] for j in range(m)) for k in range(m)]
    fixed = nullspace(F, matrix, m)
    s = len(fixed)
    idems = [C.unit]
    if s == 1:
        return idems
    p = F.char
    k = F.degree
    for b in fixed:
        for c in F.prime_basis():
            y = C.scale(c, b)
            tr = y
            for _ in range(k - 1):
                y = C.pow(y, p)
                tr = C.add(tr, y)
            refined = []
            for e in idems:
                for a in range(p):
                    shifted = C.sub(tr, C.scalar(F.from_int(a)))
                    f = C.sub(e, C.mul(e, C.pow(shifted, p - 1)))
                    if not C.is_zero(f):
                        refined.append(f)
            idems = refined
            if len(idems) == s:
                return sorted(idems, key=lambda v: tuple(F.key(x) for x in v))
    raise AssertionError("idempotent refinement did not separate all factors")


def split_commutative(C: SCAlgebra) -> list[tuple]:
    """Complete orthogonal primitive idempotents of a commutative semisimple algebra."""
    if not C.is_commutative():
        raise StructureError("algebra is not commutative")
    if radical(C).dim:
        raise StructureError("algebra has a nonzero radical")
    return _split_commutative(C)


# ---------------------------------------------------------------------------
# Wedderburn data and points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    r: int
    n: int
    kernel: TwoSidedIdeal
    idempotent: tuple  # central idempotent of A/J projecting onto the block


@dataclass(frozen=True)
class WedderburnData:
    radical: TwoSidedIdeal
    blocks: tuple
    quotient_map: object

    @property
    def semisimple_dim(self) -> int:
        return sum(b.r * b.r * b.n for b in self.blocks)


def wedderburn(A: SCAlgebra) -> WedderburnData:
    F = A.field
    J = radical(A)
    qm = quotient(A, J, verify=False)
    Q = qm.algebra
    Z = center(Q)
    C = subalgebra(Q, Z)
    blocks = []
    for e in _split_commutative(C):
        eps = Z.combine(e)
        block_dim = Subspace.span(F, Q.dim, [Q.mul(eps, b) for b in Q.basis()]).dim
        n = Subspace.span(F, C.dim, [C.mul(e, z) for z in C.basis()]).dim
        r = isqrt(block_dim // n)
        assert r * r * n == block_dim, "block dimension is not r^2 * n"
        rest = Q.sub(Q.unit, eps)
        others = Subspace.span(F, Q.dim, [Q.mul(rest, b) for b in Q.basis()])
        blocks.append(Block(r, n, qm.preimage(others), eps))
    blocks.sort(key=lambda b: (b.n, b.r, b.kernel.key()))
    return WedderburnData(J, tuple(blocks), qm)


@dataclass(frozen=True)
class Point:
    """A maximal two-sided ideal with residue algebra ``M_r(F_{q^n})``."""

    ideal: TwoSidedIdeal
    r: int
    n: int
    q: int

    @property
    def N(self) -> int:
        return self.q**self.n

    def kappa(self) -> str:
        return f"M_{self.r}(GF({self.q ** self.n}))"


def points_from(data: WedderburnData, F) -> list[Point]:
    pts = [Point(b.kernel, b.r, b.n, F.order) for b in data.blocks]
    pts.sort(key=lambda x: (x.N, x.ideal.key()))
    return pts


def max_two_sided_ideals(A: SCAlgebra) -> list[Point]:
    return points_from(wedderburn(A), A.field)


# ---------------------------------------------------------------------------
# idempotents
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdempotentFamily:
    pairs: tuple  # ((Point, e), ...)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    @property
    def idempotents(self) -> list:
        return [e for _, e in self.pairs]


def lift_idempotent(A: SCAlgebra, x, f=None, max_steps=None) -> tuple:
    """Lift ``x`` (idempotent modulo a nilpotent ideal) to an exact idempotent.

    Works in the corner ring ``f A f`` with unit ``f`` (default ``1``) by
    iterating ``e <- e + (f - 2e)(e^2 - e)``.
    """
    f = A.unit if f is None else f
    steps = max_steps if max_steps is not None else A.dim.bit_length() + 2
    e = x
    for _ in range(steps + 1):
        err = A.sub(A.mul(e, e), e)
        if A.is_zero(err):
            return e
        two_e = A.add(e, e)
        e = A.add(e, A.mul(A.sub(f, two_e), err))
    raise AssertionError("idempotent lifting did not terminate")


def block_idempotents(A: SCAlgebra, data: WedderburnData | None = None) -> IdempotentFamily:
    """Complete orthogonal family with one idempotent per maximal ideal."""
    data = data or wedderburn(A)
    F = A.field
    qm = data.quotient_map
    pts = points_from(data, F)
    by_kernel = {b.kernel: b for b in data.blocks}
    ordered = [by_kernel[p.ideal] for p in pts]
    f = A.unit
    es = []
    for blk in ordered[:-1]:
        x = A.mul(A.mul(f, qm.lift(blk.idempotent)), f)
        e = lift_idempotent(A, x, f)
        es.append(e)
        f = A.sub(f, e)
    es.append(f)
    fam = IdempotentFamily(tuple(zip(pts, es)))
    check_idempotent_family(A, fam)
    return fam


def check_idempotent_family(A: SCAlgebra, fam: IdempotentFamily) -> None:
    total = A.zero()
    for i, (pt, e) in enumerate(fam.pairs):
        if A.mul(e, e) != e:
            raise StructureError("family member is not idempotent")
        if pt.ideal.contains(e):
            raise StructureError("idempotent lies in its own maximal ideal")
        for j, (other, e2) in enumerate(fam.pairs):
            if i != j:
                if not A.is_zero(A.mul(e, e2)):
                    raise StructureError("idempotents are not orthogonal")
                if not other.ideal.contains(e):
                    raise StructureError("idempotent is not in another maximal ideal")
        total = A.add(total, e)
    if total != A.unit:
        raise StructureError("idempotents do not sum to 1")


def is_idempotent_for(A: SCAlgebra, e, m: Subspace, points) -> bool:
    """``e^2 = e``, ``e`` not in ``m``, ``e`` in every other maximal ideal."""
    if A.mul(e, e) != e or m.contains(e):
        return False
    return all(p.ideal.contains(e) for p in points if p.ideal != m)


def idempotent_detects_ideal(A: SCAlgebra, e, m: Subspace, I: Subspace, points=None) -> bool:
    """Whether ``I`` is contained in ``m``; cross-checked against ``e not in I``."""
    points = points if points is not None else max_two_sided_ideals(A)
    if not is_idempotent_for(A, e, m, points):
        raise StructureError("e is not an idempotent for (A, m)")
    contained = I.issubset(m)
    if contained != (not I.contains(e)):
        raise AssertionError("idempotent test disagrees with ideal containment")
    return contained


def require_finite_field(A: SCAlgebra) -> None:
    F = A.field
    if F.order is None:
        raise AlgebraError("a finite coefficient field is required")


__all__ = [
    "Block",
    "IdempotentFamily",
    "Point",
    "StructureError",
    "WedderburnData",
    "block_idempotents",
    "idempotent_detects_ideal",
    "lift_idempotent",
    "max_two_sided_ideals",
    "radical",
    "split_commutative",
    "trace_form_kernel",
    "wedderburn",
]
