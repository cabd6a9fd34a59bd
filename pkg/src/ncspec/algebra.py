"""Unital associative algebras given by structure constants.

An :class:`SCAlgebra` is free of finite rank over its coefficient ring with
basis ``e_0 .. e_{d-1}`` and products ``e_i e_j = sum_k c[i][j][k] e_k``.
The coefficient ring is a field from :mod:`ncspec.coeff` or one of the base
rings Z, F[T].  Elements are tuples of coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .coeff import ExtensionField, PrimeField
from .linalg import Subspace, nullspace, vec_comb


class AlgebraError(ValueError):
    """A description does not define a unital associative algebra.

    ``witness`` carries the failing basis indices when there are any.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SCAlgebra:
    """Structure-constant algebra.

    ``table[i][j]`` is a tuple of ``(k, c)`` pairs with ``c`` nonzero.
    """

    def __init__(self, ring, labels: Sequence[str], table, unit, *, verify: bool = True):
        d = len(labels)
        if d == 0:
            raise AlgebraError("the zero ring is not supported")
        self.ring = ring
        self.labels = tuple(labels)
        self.dim = d
        self.table = tuple(tuple(tuple(cell) for cell in row) for row in table)
        if len(self.table) != d or any(len(row) != d for row in self.table):
            raise AlgebraError("multiplication table has the wrong shape")
        self.unit = tuple(unit)
        if verify:
            check_base_central(self)
            check_unit(self)
            check_associative(self)

    def __repr__(self):
        return f"SCAlgebra({self.ring!r}, dim={self.dim})"

    def __reduce__(self):
        return (_rebuild_algebra, (self.ring, self.labels, self.table, self.unit))

    @property
    def field(self):
        if not self.ring.is_field:
            raise AlgebraError(f"coefficient ring {self.ring!r} is not a field")
        return self.ring

    @property
    def is_field_algebra(self) -> bool:
        return self.ring.is_field

    # -- elements --------------------------------------------------------
    def zero(self) -> tuple:
        return (self.ring.zero,) * self.dim

    def one(self) -> tuple:
        return self.unit

    def basis_vector(self, i: int) -> tuple:
        R = self.ring
        return tuple(R.one if j == i else R.zero for j in range(self.dim))

    def basis(self) -> list[tuple]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def element(self, coeffs: Mapping[str, object]) -> tuple:
        v = list(self.zero())
        for label, c in coeffs.items():
            v[self.labels.index(label)] = c
        return tuple(v)

    def scalar(self, c) -> tuple:
        return self.scale(c, self.unit)

    def add(self, x, y):
        R = self.ring
        return tuple(R.add(a, b) for a, b in zip(x, y))

    def sub(self, x, y):
        R = self.ring
        return tuple(R.sub(a, b) for a, b in zip(x, y))

    def neg(self, x):
        R = self.ring
        return tuple(R.neg(a) for a in x)

    def scale(self, c, x):
        R = self.ring
        return tuple(R.mul(c, a) for a in x)

    def comb(self, pairs) -> tuple:
        R = self.ring
        zero = R.zero
        out = [zero] * self.dim
        for c, v in pairs:
            if c == zero:
                continue
            for i, x in enumerate(v):
                if x != zero:
                    out[i] = R.add(out[i], R.mul(c, x))
        return tuple(out)

    def is_zero(self, x) -> bool:
        zero = self.ring.zero
        return all(a == zero for a in x)

    def mul(self, x, y) -> tuple:
        R = self.ring
        zero = R.zero
        table = self.table
        out = [zero] * self.dim
        if isinstance(R, PrimeField):
            p = R.p
            acc = [0] * self.dim
            for i, a in enumerate(x):
                if a:
                    row = table[i]
                    for j, b in enumerate(y):
                        if b:
                            ab = a * b
                            for k, c in row[j]:
                                acc[k] += ab * c
            return tuple(v % p for v in acc)
        add, mul = R.add, R.mul
        for i, a in enumerate(x):
            if a == zero:
                continue
            row = table[i]
            for j, b in enumerate(y):
                if b == zero:
                    continue
                ab = mul(a, b)
                for k, c in row[j]:
                    out[k] = add(out[k], mul(ab, c))
        return tuple(out)

    def mul_basis(self, i: int, j: int) -> tuple:
        R = self.ring
        out = [R.zero] * self.dim
        for k, c in self.table[i][j]:
            out[k] = c
        return tuple(out)

    def pow(self, x, e: int) -> tuple:
        result = self.unit
        while e:
            if e & 1:
                result = self.mul(result, x)
            e >>= 1
            if e:
                x = self.mul(x, x)
        return result

    def commutator(self, x, y) -> tuple:
        return self.sub(self.mul(x, y), self.mul(y, x))

    def is_commutative(self) -> bool:
        return all(
            self.table[i][j] == self.table[j][i]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def left_matrix(self, x) -> list[list]:
        """Matrix of ``y -> x y`` (rows indexed by output coordinate)."""
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def fmt(self, x) -> str:
        R = self.ring
        out = ""
        for c, label in zip(x, self.labels):
            if c == R.zero:
                continue
            cs = R.fmt(c)
            sign = "+"
            if cs.startswith("-") and not any(ch in cs[1:] for ch in "+-*"):
                sign, cs = "-", cs[1:]
            if cs == "1":
                term = label
            elif any(ch in cs[1:] for ch in "+-") or "*" in cs:
                term = f"({cs})*{label}"
            else:
                term = f"{cs}*{label}"
            if not out:
                out = term if sign == "+" else "-" + term
            else:
                out += f" {sign} {term}"
        return out or "0"


def _rebuild_algebra(ring, labels, table, unit):
    return SCAlgebra(ring, labels, table, unit, verify=False)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def _sparse_times_basis(A: SCAlgebra, terms, k: int, left: bool) -> dict:
    """``(sum c_m e_m) e_k`` (left=True) or ``e_k (sum c_m e_m)`` as a dict."""
    R = A.ring
    acc: dict = {}
    for m, c in terms:
        cell = A.table[m][k] if left else A.table[k][m]
        for l, c2 in cell:
            v = R.mul(c, c2)
            acc[l] = R.add(acc[l], v) if l in acc else v
    return {l: v for l, v in acc.items() if v != R.zero}


def check_associative(A: SCAlgebra) -> None:
    """Exhaustive check over basis triples; raises with the failing triple."""
    d = A.dim
    for i in range(d):
        for j in range(d):
            ij = A.table[i][j]
            for k in range(d):
                lhs = _sparse_times_basis(A, ij, k, left=True)
                rhs = _sparse_times_basis(A, A.table[j][k], i, left=False)
                if lhs != rhs:
                    li, lj, lk = A.labels[i], A.labels[j], A.labels[k]
                    raise AlgebraError(
                        f"not associative: ({li}*{lj})*{lk} != {li}*({lj}*{lk})",
                        witness=(i, j, k),
                    )


def check_unit(A: SCAlgebra) -> None:
    for i in range(A.dim):
        e = A.basis_vector(i)
        if A.mul(A.unit, e) != e or A.mul(e, A.unit) != e:
            raise AlgebraError(f"unit law fails on basis element {A.labels[i]}", witness=(i,))


def check_base_central(A: SCAlgebra) -> None:
    """Every generator of the base ring, acting as ``g * 1``, is central."""
    R = A.ring
    gens = R.generators() if hasattr(R, "generators") else [R.one]
    for g in gens:
        gu = A.scale(g, A.unit)
        for i in range(A.dim):
            e = A.basis_vector(i)
            if A.mul(gu, e) != A.mul(e, gu):
                raise AlgebraError(
                    f"base element {R.fmt(g)} is not central: it does not commute with {A.labels[i]}",
                    witness=(g, i),
                )


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def table_from_products(ring, d: int, products: Mapping) -> list:
    """Dense-to-sparse: ``products[(i, j)]`` is a mapping ``k -> c``."""
    table = [[() for _ in range(d)] for _ in range(d)]
    for (i, j), terms in products.items():
        items = terms.items() if isinstance(terms, Mapping) else terms
        table[i][j] = tuple(sorted((k, c) for k, c in items if c != ring.zero))
    return table


def build(ring, labels: Sequence[str], products: Mapping, unit=None, *, verify=True) -> SCAlgebra:
    """Algebra from a product mapping ``(i, j) -> {k: c}``; unit defaults to ``e_0``."""
    d = len(labels)
    if d == 0:
        raise AlgebraError("the zero ring is not supported")
    table = table_from_products(ring, d, products)
    if unit is None:
        unit = tuple(ring.one if i == 0 else ring.zero for i in range(d))
    return SCAlgebra(ring, labels, table, unit, verify=verify)


def check_group_table(mult: Sequence[Sequence[int]]) -> int:
    """Validate a group multiplication table; returns the identity index."""
    n = len(mult)
    if n == 0 or any(len(r) != n for r in mult):
        raise AlgebraError("group table must be square and nonempty")
    elems = set(range(n))
    for r in mult:
        if set(r) != elems:
            raise AlgebraError("group table rows must be permutations")
    ident = [e for e in range(n) if all(mult[e][g] == g and mult[g][e] == g for g in range(n))]
    if not ident:
        raise AlgebraError("group table has no identity")
    e = ident[0]
    for g in range(n):
        if not any(mult[g][h] == e and mult[h][g] == e for h in range(n)):
            raise AlgebraError(f"element {g} has no inverse")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
                    raise AlgebraError(f"group table not associative at ({a},{b},{c})")
    return e


def group_algebra(mult: Sequence[Sequence[int]], ring, labels=None) -> SCAlgebra:
    """Group ring of a finite group given by its multiplication table."""
    e = check_group_table(mult)
    n = len(mult)
    if e != 0:
        raise AlgebraError("the identity must be element 0")
    labels = labels or [f"g{i}" for i in range(n)]
    table = [[((mult[i][j], ring.one),) for j in range(n)] for i in range(n)]
    unit = tuple(ring.one if i == 0 else ring.zero for i in range(n))
    return SCAlgebra(ring, labels, table, unit, verify=False)


def matrix_algebra(A: SCAlgebra, n: int) -> SCAlgebra:
    """``M_n(A)`` with basis ``E_ij (x) e_b`` indexed by ``(i, j, b)``."""
    if n < 1:
        raise AlgebraError("matrix size must be >= 1")
    d = A.dim
    R = A.ring

    def idx(i, j, b):
        return (i * n + j) * d + b

    labels = []
    for i in range(n):
        for j in range(n):
            for b in range(d):
                labels.append(f"E{i + 1}{j + 1}_{A.labels[b]}" if n > 1 else A.labels[b])
    size = n * n * d
    table = [[() for _ in range(size)] for _ in range(size)]
    for i in range(n):
        for j in range(n):
            for b in range(d):
                for l in range(n):
                    for c in range(d):
                        table[idx(i, j, b)][idx(j, l, c)] = tuple(
                            (idx(i, l, k), v) for k, v in A.table[b][c]
                        )
    unit = [R.zero] * size
    for i in range(n):
        for b in range(d):
            unit[idx(i, i, b)] = A.unit[b]
    return SCAlgebra(R, labels, table, unit, verify=False)


def direct_product(A: SCAlgebra, B: SCAlgebra) -> SCAlgebra:
    """``A x B`` with block-diagonal structure constants."""
    if A.ring != B.ring:
        raise AlgebraError("factors must share the coefficient ring")
    d, e = A.dim, B.dim
    table = [[() for _ in range(d + e)] for _ in range(d + e)]
    for i in range(d):
        for j in range(d):
            table[i][j] = A.table[i][j]
    for i in range(e):
        for j in range(e):
            table[d + i][d + j] = tuple((d + k, c) for k, c in B.table[i][j])
    labels = [f"{l}@0" for l in A.labels] + [f"{l}@1" for l in B.labels]
    return SCAlgebra(A.ring, labels, table, A.unit + B.unit, verify=False)


def change_ring(A: SCAlgebra, ring, convert: Callable) -> SCAlgebra:
    """Apply a ring homomorphism to the structure constants (reduction, base change)."""
    zero = ring.zero
    table = []
    for row in A.table:
        new_row = []
        for cell in row:
            terms = []
            for k, c in cell:
                v = convert(c)
                if v != zero:
                    terms.append((k, v))
            new_row.append(tuple(terms))
        table.append(new_row)
    unit = tuple(convert(c) for c in A.unit)
    return SCAlgebra(ring, A.labels, table, unit, verify=False)


# ---------------------------------------------------------------------------
# restriction of scalars to the prime field
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Restriction:
    """``A`` viewed over the prime field, with coordinate conversions."""

    algebra: SCAlgebra
    source: SCAlgebra
    k: int

    def down(self, v) -> tuple:
        F = self.source.field
        out: list = []
        for c in v:
            out.extend(F.coords(c))
        return tuple(out)

    def up(self, w) -> tuple:
        F = self.source.field
        k = self.k
        return tuple(F.from_coords(w[i * k : (i + 1) * k]) for i in range(self.source.dim))


def restrict_to_prime_field(A: SCAlgebra) -> Restriction:
    F = A.field
    if isinstance(F, PrimeField):
        return Restriction(A, A, 1)
    if not isinstance(F, ExtensionField):
        raise AlgebraError("restriction of scalars needs a finite field")
    Fp = PrimeField(F.char)
    omegas = F.prime_basis()
    k = len(omegas)
    d = A.dim
    size = d * k
    table = [[() for _ in range(size)] for _ in range(size)]
    prods = [[F.mul(a, b) for b in omegas] for a in omegas]
    for i in range(d):
        for j in range(d):
            cell = A.table[i][j]
            if not cell:
                continue
            for s in range(k):
                for t in range(k):
                    w = prods[s][t]
                    acc: dict = {}
                    for m, c in cell:
                        for s2, x in enumerate(F.coords(F.mul(w, c))):
                            if x:
                                acc[m * k + s2] = x
                    table[i * k + s][j * k + t] = tuple(sorted(acc.items()))
    unit: list = []
    for c in A.unit:
        unit.extend(F.coords(c))
    labels = [f"{A.labels[i]}#{s}" for i in range(d) for s in range(k)]
    return Restriction(SCAlgebra(Fp, labels, table, unit, verify=False), A, k)


# ---------------------------------------------------------------------------
# linear-algebra computations over field coefficients
# ---------------------------------------------------------------------------


class TwoSidedIdeal(Subspace):
    """A subspace known to be closed under left and right multiplication."""

    @classmethod
    def of(cls, V: Subspace) -> "TwoSidedIdeal":
        return cls(V.field, V.n, V.rows, V.pivots)


def _commutant(A: SCAlgebra, elements) -> Subspace:
    F = A.field
    d = A.dim
    basis = A.basis()
    rows = []
    for s in elements:
        cols = [A.commutator(s, b) for b in basis]
        for k in range(d):
            rows.append(tuple(cols[j][k] for j in range(d)))
    if not rows:
        return Subspace.full(F, d)
    return Subspace.span(F, d, nullspace(F, rows, d))


def center(A: SCAlgebra) -> Subspace:
    """``Z(A)`` as the kernel of ``x -> (e_i x - x e_i)_i``."""
    return _commutant(A, A.basis())


def centralizer(B: SCAlgebra, S) -> Subspace:
    """``{x in B : s x = x s for all s in S}``."""
    return _commutant(B, list(S))


def is_two_sided_ideal(A: SCAlgebra, V: Subspace) -> bool:
    for x in V.rows:
        for b in A.basis():
            if not V.contains(A.mul(b, x)) or not V.contains(A.mul(x, b)):
                return False
    return True


def ideal_generated(A: SCAlgebra, gens) -> TwoSidedIdeal:
    """Smallest two-sided ideal containing ``gens``, by saturation."""
    F = A.field
    V = Subspace.span(F, A.dim, gens)
    basis = A.basis()
    while True:
        new = [A.mul(b, x) for x in V.rows for b in basis]
        new += [A.mul(x, b) for x in V.rows for b in basis]
        W = Subspace.span(F, A.dim, V.rows + tuple(new))
        if W.dim == V.dim:
            return TwoSidedIdeal.of(V)
        V = W


def ideal_product(A: SCAlgebra, I: Subspace, J: Subspace) -> TwoSidedIdeal:
    return ideal_generated(A, [A.mul(x, y) for x in I.rows for y in J.rows])


def ideal_power(A: SCAlgebra, I: Subspace, k: int) -> TwoSidedIdeal:
    P = TwoSidedIdeal.of(I)
    for _ in range(k - 1):
        P = ideal_product(A, P, I)
    return P


class QuotientMap:
    """Projection ``A -> A/I`` onto the complement of the pivot columns of ``I``."""

    def __init__(self, source: SCAlgebra, ideal: Subspace, target: SCAlgebra, indices):
        self.source = source
        self.ideal = ideal
        self.algebra = target
        self.indices = tuple(indices)

    def __call__(self, v) -> tuple:
        r = self.ideal.reduce(v)
        return tuple(r[i] for i in self.indices)

    def lift(self, w) -> tuple:
        F = self.source.field
        out = [F.zero] * self.source.dim
        for i, c in zip(self.indices, w):
            out[i] = c
        return tuple(out)

    def preimage(self, V: Subspace) -> TwoSidedIdeal:
        """Preimage in the source of a subspace of the quotient."""
        lifted = [self.lift(r) for r in V.rows]
        return TwoSidedIdeal.of(Subspace.span(self.source.field, self.source.dim, lifted + list(self.ideal.rows)))

    def matrix(self) -> list[tuple]:
        """Images of the source basis vectors."""
        return [self(b) for b in self.source.basis()]


def quotient(A: SCAlgebra, I: Subspace, *, verify: bool = True) -> QuotientMap:
    """``A/I`` on the complement basis; raises if ``I`` is improper."""
    F = A.field
    if I.contains(A.unit):
        raise AlgebraError("cannot form the quotient by the whole algebra")
    if I.dim == 0:
        idx = list(range(A.dim))
        Q = SCAlgebra(F, A.labels, A.table, A.unit, verify=False)
        return QuotientMap(A, I, Q, idx)
    idx = I.complement_indices()
    pos = {i: n for n, i in enumerate(idx)}
    table = []
    for a in idx:
        row = []
        for b in idx:
            r = I.reduce(A.mul_basis(a, b))
            row.append(tuple((pos[i], r[i]) for i in idx if r[i] != F.zero))
        table.append(row)
    ur = I.reduce(A.unit)
    unit = tuple(ur[i] for i in idx)
    Q = SCAlgebra(F, [A.labels[i] for i in idx], table, unit, verify=verify)
    return QuotientMap(A, I, Q, idx)


def subalgebra(A: SCAlgebra, V: Subspace, *, verify: bool = False) -> SCAlgebra:
    """The subalgebra on the echelon basis of a multiplicatively closed ``V``."""
    F = A.field
    if not V.contains(A.unit):
        raise AlgebraError("subspace does not contain the unit")
    m = V.dim
    table = []
    for x in V.rows:
        row = []
        for y in V.rows:
            xy = A.mul(x, y)
            if not V.contains(xy):
                raise AlgebraError("subspace is not closed under multiplication")
            c = V.coords(xy)
            row.append(tuple((k, v) for k, v in enumerate(c) if v != F.zero))
        table.append(row)
    labels = [f"z{i}" for i in range(m)]
    return SCAlgebra(F, labels, table, V.coords(A.unit), verify=verify)


def span_of_products(A: SCAlgebra, X, Y) -> Subspace:
    """Linear span of ``{x y : x in X, y in Y}``."""
    return Subspace.span(A.field, A.dim, [A.mul(x, y) for x in X for y in Y])


def vector_comb(A: SCAlgebra, coeffs, vectors) -> tuple:
    return vec_comb(A.field, A.dim, zip(coeffs, vectors))
