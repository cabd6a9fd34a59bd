"""Morphisms of algebras, the A-algebra condition and tensor products.

``B`` is an A-algebra along ``h: A -> B`` when ``h(A)`` and the centralizer
``C_B(A)`` together generate ``B``; for finite-dimensional algebras this is
checked as ``span(h(A) * C_B(A)) = B``.  Under that condition prime ideals
pull back to prime ideals and ``B (x)_A C`` carries a ring structure with
``(b (x) z)(b' (x) z') = bb' (x) zz'`` for ``z, z'`` in ``C_C(A)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    SCAlgebra,
    TwoSidedIdeal,
    build,
    center,
    centralizer,
    matrix_algebra,
    quotient,
    span_of_products,
)
from .linalg import Subspace, nullspace, rref
from .structure import wedderburn


class MorphismError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True, eq=False)
class AlgMorphism:
    """Unital ring homomorphism given by the images of the source basis."""

    source: SCAlgebra
    target: SCAlgebra
    images: tuple

    def __call__(self, x) -> tuple:
        return self.target.comb(zip(x, self.images))

    def image(self) -> Subspace:
        return Subspace.span(self.target.field, self.target.dim, self.images)

    def kernel(self) -> TwoSidedIdeal:
        F = self.source.field
        d = self.source.dim
        rows = [tuple(img[k] for img in self.images) for k in range(self.target.dim)]
        return TwoSidedIdeal.of(Subspace.span(F, d, nullspace(F, rows, d)))

    def is_bijective(self) -> bool:
        return self.source.dim == self.target.dim == self.image().dim

    def compose(self, first: "AlgMorphism") -> "AlgMorphism":
        """``self o first``."""
        return AlgMorphism(first.source, self.target, tuple(self(v) for v in first.images))

    def is_identity(self) -> bool:
        return self.source is self.target and all(
            img == self.source.basis_vector(i) for i, img in enumerate(self.images)
        )


def make_morphism(A: SCAlgebra, B: SCAlgebra, images, *, verify: bool = True) -> AlgMorphism:
    """Verified unital homomorphism ``A -> B``; works over any coefficient ring."""
    images = tuple(tuple(v) for v in images)
    if A.ring != B.ring:
        raise MorphismError("source and target must share the coefficient ring")
    if len(images) != A.dim or any(len(v) != B.dim for v in images):
        raise MorphismError("image matrix does not match the ranks")
    h = AlgMorphism(A, B, images)
    if not verify:
        return h
    if h(A.unit) != B.unit:
        raise MorphismError("map is not unital: h(1) != 1")
    for i in range(A.dim):
        for j in range(A.dim):
            if h(A.mul_basis(i, j)) != B.mul(images[i], images[j]):
                raise MorphismError(
                    f"not multiplicative on ({A.labels[i]}, {A.labels[j]})",
                    witness=(i, j),
                )
    return h


def identity(A: SCAlgebra) -> AlgMorphism:
    return AlgMorphism(A, A, tuple(A.basis()))


def field_algebra(F) -> SCAlgebra:
    """``F`` as a rank-one algebra."""
    return build(F, ["1"], {(0, 0): {0: F.one}}, verify=False)


def unit_map(A: SCAlgebra) -> AlgMorphism:
    """The structure map ``F -> A``."""
    return AlgMorphism(field_algebra(A.ring), A, (A.unit,))


def scalar_embedding(A: SCAlgebra, n: int) -> AlgMorphism:
    """``A -> M_n(A)``, ``a -> diag(a, ..., a)``."""
    M = matrix_algebra(A, n)
    d = A.dim
    images = []
    for b in range(d):
        v = [A.ring.zero] * M.dim
        for i in range(n):
            v[(i * n + i) * d + b] = A.ring.one
        images.append(tuple(v))
    return make_morphism(A, M, images)


def diagonal_embedding(F, n: int = 2) -> AlgMorphism:
    """``F^n -> M_n(F)`` onto the diagonal matrices."""
    one = field_algebra(F)
    prod = build(
        F,
        [f"e{i + 1}" for i in range(n)],
        {(i, i): {i: F.one} for i in range(n)},
        unit=tuple(F.one for _ in range(n)),
        verify=True,
    )
    M = matrix_algebra(one, n)
    images = []
    for i in range(n):
        v = [F.zero] * M.dim
        v[i * n + i] = F.one
        images.append(tuple(v))
    return make_morphism(prod, M, images)


# ---------------------------------------------------------------------------
# A-algebra conditions
# ---------------------------------------------------------------------------


def centralizer_of_image(h: AlgMorphism) -> Subspace:
    return centralizer(h.target, h.images)


def procesi_check(h: AlgMorphism) -> bool:
    """Whether ``h(A) * C_B(A)`` spans ``B``."""
    C = centralizer_of_image(h)
    return span_of_products(h.target, h.images, C.rows).dim == h.target.dim


def rc_check(h: AlgMorphism) -> bool:
    """Whether ``h(A) * Z(B)`` spans ``B`` (relative commutativity)."""
    Z = center(h.target)
    return span_of_products(h.target, h.images, Z.rows).dim == h.target.dim


def preimage(h: AlgMorphism, q: Subspace) -> TwoSidedIdeal:
    """``h^{-1}(q)`` as the kernel of ``A -> B -> B/q``."""
    F = h.source.field
    reduced = [q.reduce(img) for img in h.images]
    rows = [tuple(r[k] for r in reduced) for k in range(h.target.dim)]
    return TwoSidedIdeal.of(Subspace.span(F, h.source.dim, nullspace(F, rows, h.source.dim)))


@dataclass(frozen=True)
class PrimeTest:
    ideal: TwoSidedIdeal
    prime: bool
    blocks: int
    radical_dim: int


def prime_test(A: SCAlgebra, P: Subspace) -> PrimeTest:
    """For finite-dimensional ``A``: ``P`` is prime iff ``A/P`` is simple."""
    if P.contains(A.unit):
        return PrimeTest(TwoSidedIdeal.of(P), False, 0, 0)
    Q = quotient(A, P, verify=False).algebra
    data = wedderburn(Q)
    prime = len(data.blocks) == 1 and data.radical.dim == 0
    return PrimeTest(TwoSidedIdeal.of(P), prime, len(data.blocks), data.radical.dim)


def pullback_point(h: AlgMorphism, q: Subspace, *, demonstrate: bool = False):
    """Pull a prime (maximal) ideal of the target back along ``h``.

    Refuses when ``h`` fails the A-algebra condition unless ``demonstrate``
    is set, in which case the :class:`PrimeTest` of ``h^{-1}(q)`` is returned
    so that a non-prime pullback can be exhibited.
    """
    if demonstrate:
        return prime_test(h.source, preimage(h, q))
    if not procesi_check(h):
        raise MorphismError("target is not an A-algebra along h; pullback of primes is undefined")
    test = prime_test(h.source, preimage(h, q))
    if not test.prime:
        raise AssertionError("pullback of a prime ideal along an A-algebra map is not prime")
    return test.ideal


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------


def _kron(F, x, y) -> tuple:
    zero = F.zero
    out = []
    for a in x:
        if a == zero:
            out.extend([zero] * len(y))
        else:
            out.extend(F.mul(a, b) if b != zero else zero for b in y)
    return tuple(out)


class _Solver:
    """Repeated solves ``M lam = rhs`` against a fixed column family."""

    def __init__(self, F, columns, n):
        self.F = F
        self.m = len(columns)
        aug = [tuple(col[k] for col in columns) for k in range(n)]
        self.rows, self.pivots = rref(F, aug, self.m)
        self.null = nullspace(F, aug, self.m)
        self.matrix = aug

    def solve(self, rhs):
        F = self.F
        aug = [row + (b,) for row, b in zip(self.matrix, rhs)]
        rows, pivots = rref(F, aug, self.m + 1)
        if pivots and pivots[-1] == self.m:
            return None
        lam = [F.zero] * self.m
        for row, pc in zip(rows, pivots):
            lam[pc] = row[self.m]
        return tuple(lam)


@dataclass(eq=False)
class TensorAlgebra:
    """``B (x)_A C`` with its canonical maps and centralizer spanning family."""

    algebra: SCAlgebra
    left: AlgMorphism
    right: AlgMorphism
    f: AlgMorphism
    g: AlgMorphism
    relations: Subspace
    indices: tuple
    zbasis: tuple
    family: tuple = field(repr=False)
    _solver: _Solver = field(repr=False)

    @property
    def B(self) -> SCAlgebra:
        return self.f.target

    @property
    def C(self) -> SCAlgebra:
        return self.g.target

    def project(self, w) -> tuple:
        """Image in ``B (x)_A C`` of a vector of ``B (x)_F C``."""
        r = self.relations.reduce(w)
        return tuple(r[i] for i in self.indices)

    def pure(self, b, c) -> tuple:
        return self.project(_kron(self.algebra.field, b, c))

    def rewrite(self, v) -> tuple:
        """Coefficients of ``v`` over the family ``e_i (x) z_t``."""
        lam = self._solver.solve(v)
        if lam is None:
            raise AssertionError("element is not in the span of the centralizer family")
        return lam


def rewrite_over_centralizer(T: TensorAlgebra, w) -> tuple:
    """Express ``w`` in ``B (x)_F C`` over ``{e_i (x) z_t}`` modulo balancing."""
    return T.rewrite(T.project(w))


def tensor(f: AlgMorphism, g: AlgMorphism) -> TensorAlgebra:
    """``B (x)_A C`` for A-algebras ``f: A -> B`` and ``g: A -> C``."""
    if f.source is not g.source and (
        f.source.labels != g.source.labels or f.source.table != g.source.table
    ):
        raise MorphismError("both morphisms must share their source algebra")
    if not procesi_check(f):
        raise MorphismError("left factor is not an A-algebra")
    if not procesi_check(g):
        raise MorphismError("right factor is not an A-algebra")
    A, B, C = f.source, f.target, g.target
    F = A.field
    dB, dC = B.dim, C.dim
    n = dB * dC
    rels = []
    for k in range(A.dim):
        fa, ga = f.images[k], g.images[k]
        for i in range(dB):
            ba = B.mul(B.basis_vector(i), fa)
            ei = B.basis_vector(i)
            for j in range(dC):
                ej = C.basis_vector(j)
                lhs = _kron(F, ba, ej)
                rhs = _kron(F, ei, C.mul(ga, ej))
                rels.append(tuple(F.sub(x, y) for x, y in zip(lhs, rhs)))
    R = Subspace.span(F, n, rels)
    idx = tuple(R.complement_indices())

    def project(w):
        r = R.reduce(w)
        return tuple(r[i] for i in idx)

    Z = centralizer(C, g.images)
    family = tuple((i, t) for i in range(dB) for t in range(Z.dim))
    fam_vecs = [project(_kron(F, B.basis_vector(i), Z.rows[t])) for i, t in family]
    solver = _Solver(F, fam_vecs, len(idx))
    if len(solver.rows) != len(idx):
        raise AssertionError("centralizer family does not span the tensor product")
    prods = {}
    for a, (i, t) in enumerate(family):
        for b, (i2, t2) in enumerate(family):
            prods[a, b] = project(
                _kron(F, B.mul_basis(i, i2), C.mul(Z.rows[t], Z.rows[t2]))
            )
    m = len(idx)
    # the product must not depend on the chosen expression over the family
    for lam in solver.null:
        for b in range(len(family)):
            for side in (0, 1):
                acc = [F.zero] * m
                for a, c in enumerate(lam):
                    if c != F.zero:
                        v = prods[a, b] if side == 0 else prods[b, a]
                        acc = [F.add(x, F.mul(c, y)) for x, y in zip(acc, v)]
                if any(x != F.zero for x in acc):
                    raise AssertionError("tensor multiplication is not well defined")
    coords = []
    for a in range(m):
        e = tuple(F.one if k == a else F.zero for k in range(m))
        coords.append(solver.solve(e))
    table = []
    for a in range(m):
        row = []
        for b in range(m):
            acc = [F.zero] * m
            for s, ca in enumerate(coords[a]):
                if ca == F.zero:
                    continue
                for t, cb in enumerate(coords[b]):
                    if cb == F.zero:
                        continue
                    c = F.mul(ca, cb)
                    acc = [F.add(x, F.mul(c, y)) for x, y in zip(acc, prods[s, t])]
            row.append(tuple((k, v) for k, v in enumerate(acc) if v != F.zero))
        table.append(row)
    labels = [f"{B.labels[i // dC]}*{C.labels[i % dC]}" for i in idx]
    unit = project(_kron(F, B.unit, C.unit))
    T = SCAlgebra(F, labels, table, unit, verify=True)
    left = make_morphism(B, T, [project(_kron(F, b, C.unit)) for b in B.basis()])
    right = make_morphism(C, T, [project(_kron(F, B.unit, c)) for c in C.basis()])
    return TensorAlgebra(T, left, right, f, g, R, idx, Z.rows, family, solver)


def swap_iso(T1: TensorAlgebra, T2: TensorAlgebra) -> AlgMorphism:
    """``B (x)_A C -> C (x)_A B`` sending ``b (x) z`` to ``z (x) b`` for ``z`` in ``C_C(A)``."""
    if T1.B is not T2.C or T1.C is not T2.B:
        raise MorphismError("tensor factors do not match for the swap")
    F = T1.algebra.field
    images = []
    for a in range(T1.algebra.dim):
        e = T1.algebra.basis_vector(a)
        lam = T1.rewrite(e)
        acc = T2.algebra.zero()
        for c, (i, t) in zip(lam, T1.family):
            if c != F.zero:
                v = T2.pure(T1.zbasis[t], T1.B.basis_vector(i))
                acc = T2.algebra.add(acc, T2.algebra.scale(c, v))
        images.append(acc)
    h = make_morphism(T1.algebra, T2.algebra, images)
    if not h.is_bijective():
        raise AssertionError("swap map is not bijective")
    return h


def naive_product_witness(T: TensorAlgebra):
    """Basis elements with ``(b1 (x) c1)(b2 (x) c2) != b1 b2 (x) c1 c2``, or ``None``."""
    B, C, Tm = T.B, T.C, T.algebra
    for i1 in range(B.dim):
        for j1 in range(C.dim):
            x = T.pure(B.basis_vector(i1), C.basis_vector(j1))
            for i2 in range(B.dim):
                for j2 in range(C.dim):
                    y = T.pure(B.basis_vector(i2), C.basis_vector(j2))
                    naive = T.pure(B.mul_basis(i1, i2), C.mul_basis(j1, j2))
                    actual = Tm.mul(x, y)
                    if naive != actual:
                        return (i1, j1, i2, j2), actual, naive
    return None
