"""Orders over Z, F_q and F_q[T]: fibers, closed points, generic minimal
primes and the resulting Spec posets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from .algebra import (
    AlgebraError,
    SCAlgebra,
    center,
    change_ring,
    check_associative,
    check_base_central,
    check_unit,
    subalgebra,
)
from .coeff import (
    QQ,
    BaseMaxIdeal,
    IntegerRing,
    PolynomialRing,
    make_max_ideal,
    residue_field,
)
from .lattice import clear_denominators, hnf, saturate
from .linalg import Subspace, solve
from .structure import Point, max_two_sided_ideals, radical


class OrderError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Order:
    """An algebra free of finite rank over a central base ring."""

    base: object
    algebra: SCAlgebra
    verified: bool = True

    @property
    def rank(self) -> int:
        return self.algebra.dim


def make_order(base, algebra: SCAlgebra) -> Order:
    """Check base-centrality, the unit law and associativity."""
    if algebra.ring != base:
        raise OrderError(f"algebra is defined over {algebra.ring!r}, not {base!r}")
    check_base_central(algebra)
    check_unit(algebra)
    check_associative(algebra)
    return Order(base, algebra, True)


@lru_cache(maxsize=256)
def fiber(order: Order, m: BaseMaxIdeal) -> SCAlgebra:
    """``A / mA`` over the residue field of ``m``."""
    if m.base != order.base:
        raise OrderError("maximal ideal belongs to a different base ring")
    if order.algebra.ring.is_field:
        return order.algebra
    return change_ring(order.algebra, residue_field(m), m.reduce)


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SpecPoint:
    """A closed point (maximal ideal over a base maximal ideal) or a generic
    minimal prime of an order over Z.

    ``lattice`` is the Hermite basis of the ideal as a sublattice of ``Z^d``
    (base Z only).  Closed points carry the fiber :class:`Point`; generic
    points carry ``qdim``, the dimension of the simple residue algebra over
    Q, and ``center_degree``, the degree of its center.
    """

    kind: str
    base_ideal: BaseMaxIdeal | None
    point: Point | None = None
    lattice: tuple | None = None
    qdim: int | None = None
    center_degree: int | None = None
    label: str = ""

    @property
    def closed(self) -> bool:
        return self.kind == "closed"

    @property
    def N(self) -> int | None:
        return self.point.N if self.point else None

    @property
    def r(self) -> int | None:
        return self.point.r if self.point else None

    def relabel(self, label: str) -> "SpecPoint":
        return SpecPoint(
            self.kind, self.base_ideal, self.point, self.lattice, self.qdim,
            self.center_degree, label,
        )  # fmt: skip


def _closed_lattice(order: Order, m: BaseMaxIdeal, ideal: Subspace) -> tuple | None:
    if not isinstance(order.base, IntegerRing):
        return None
    d = order.rank
    p = m.generator
    rows = [tuple(int(x) for x in r) for r in ideal.rows]
    rows += [tuple(p if i == j else 0 for j in range(d)) for i in range(d)]
    return hnf(rows, d)


def closed_points_over(order: Order, m: BaseMaxIdeal) -> list[SpecPoint]:
    A = fiber(order, m)
    out = []
    for pt in max_two_sided_ideals(A):
        out.append(SpecPoint("closed", m, pt, _closed_lattice(order, m, pt.ideal)))
    return out


def rational_algebra(order: Order) -> SCAlgebra:
    if not isinstance(order.base, IntegerRing):
        raise OrderError("generic minimal primes are computed for orders over Z only")
    return change_ring(order.algebra, QQ, Fraction)


def _minimal_polynomial(C: SCAlgebra, z) -> list:
    """Monic minimal polynomial of ``z`` (low degree first, Fraction coefficients)."""
    F = C.field
    powers = [C.unit]
    while True:
        nxt = C.mul(powers[-1], z)
        V = Subspace.span(F, C.dim, powers)
        if V.contains(nxt):
            # solve nxt = sum c_i powers[i]
            cols = [tuple(pw[k] for pw in powers) for k in range(C.dim)]
            c = solve(F, cols, nxt, len(powers))
            return [-x for x in c] + [Fraction(1)]
        powers.append(nxt)


def _to_fraction(c) -> Fraction:
    r = sympy.Rational(c)
    return Fraction(int(r.p), int(r.q))


def central_idempotents_over_q(AQ: SCAlgebra):
    """Primitive central idempotents of a semisimple Q-algebra.

    The center is split by factoring the minimal polynomial of a primitive
    element, tried in the order: center basis vectors, then pairwise sums.
    """
    Z = center(AQ)
    C = subalgebra(AQ, Z)
    basis = C.basis()
    candidates = list(basis) + [
        C.add(basis[i], basis[j]) for i in range(len(basis)) for j in range(i + 1, len(basis))
    ]
    for z in candidates:
        mp = _minimal_polynomial(C, z)
        if len(mp) - 1 == C.dim:
            break
    else:
        raise OrderError("no primitive element found for the rational center")
    x = sympy.Symbol("x")
    m = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in mp])), x, domain="QQ")
    _, factors = m.factor_list()
    out = []
    for g, mult in factors:
        assert mult == 1, "minimal polynomial of a semisimple center is squarefree"
        g = g.monic()
        cof = sympy.Poly(sympy.quo(m, g), x, domain="QQ")
        h = (cof * cof.invert(g)).rem(m)
        coeffs = [_to_fraction(c) for c in reversed(h.all_coeffs())]
        e = C.comb(zip(coeffs, [C.pow(z, k) for k in range(len(coeffs))]))
        out.append((Z.combine(e), g.degree()))
    return out


def generic_minimal_primes(order: Order) -> list[SpecPoint]:
    """Kernels of the projections of ``A (x) Q`` onto its simple factors, cut back to ``A``."""
    AQ = rational_algebra(order)
    if radical(AQ).dim:
        raise OrderError("A (x) Q is not semisimple; generic primes are unsupported")
    d = AQ.dim
    pts = []
    for e, deg in central_idempotents_over_q(AQ):
        rest = AQ.sub(AQ.unit, e)
        ker = Subspace.span(QQ, d, [AQ.mul(rest, b) for b in AQ.basis()])
        qdim = d - ker.dim
        gens = [clear_denominators(r) for r in ker.rows]
        lat = saturate(gens, d) if gens else ()
        pts.append(SpecPoint("generic", None, None, lat, qdim, deg))
    pts.sort(key=lambda s: (s.qdim, s.lattice))
    return pts


# ---------------------------------------------------------------------------
# posets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpecPoset:
    points: tuple
    closure: frozenset  # pairs (i, j): points[j] lies in the closure of points[i]

    def index(self, label: str) -> int:
        for i, p in enumerate(self.points):
            if p.label == label:
                return i
        raise OrderError(f"no point labelled {label!r}")

    def closure_of(self, i: int) -> list[int]:
        return sorted(j for a, j in self.closure if a == i)

    def closed_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.points) if p.closed]


def _generic_in_closed(gen: SpecPoint, closed: SpecPoint) -> bool:
    """Containment of a generic prime in a closed point, tested modulo p."""
    p = closed.base_ideal.generator
    ideal = closed.point.ideal
    return all(ideal.contains(tuple(x % p for x in row)) for row in gen.lattice)


def spec_poset(order: Order, fibers=None, *, localize=None, generic: bool = False) -> SpecPoset:
    """Closed points over the selected fibers, plus generic minimal primes."""
    base = order.base
    if localize is not None:
        fibers = [make_max_ideal(base, localize)]
    if fibers is None:
        if isinstance(base, (IntegerRing, PolynomialRing)):
            raise OrderError("select fibers (or a localization) for an order over " + repr(base))
        fibers = [make_max_ideal(base)]
    fibers = sorted(fibers, key=lambda m: m.sort_key())
    closed = []
    for m in fibers:
        closed.extend(closed_points_over(order, m))
    closed = [p.relabel(f"m{i + 1}") for i, p in enumerate(closed)]
    gens = []
    if generic:
        gens = [p.relabel(f"p{i + 1}") for i, p in enumerate(generic_minimal_primes(order))]
    points = tuple(closed + gens)
    pairs = {(i, i) for i in range(len(points))}
    for i, g in enumerate(points):
        if g.closed:
            continue
        for j, c in enumerate(points):
            if c.closed and _generic_in_closed(g, c):
                pairs.add((i, j))
    return SpecPoset(points, frozenset(pairs))


def smallest_neighborhood(poset: SpecPoset, label_or_index) -> list[SpecPoint]:
    """All points whose closure contains the given closed point."""
    i = poset.index(label_or_index) if isinstance(label_or_index, str) else label_or_index
    if not 0 <= i < len(poset.points):
        raise OrderError("point not in poset")
    if not poset.points[i].closed:
        raise OrderError(f"{poset.points[i].label} is not a closed point")
    return [poset.points[a] for a in range(len(poset.points)) if (a, i) in poset.closure]


def ideal_lattice(order: Order, gens) -> tuple:
    """HNF of the two-sided ideal of a Z-order generated by integer vectors."""
    A = order.algebra
    if not isinstance(order.base, IntegerRing):
        raise OrderError("lattices are available over Z only")
    vecs = []
    basis = A.basis()
    for g in gens:
        for a in basis:
            ag = A.mul(a, g)
            for b in basis:
                vecs.append(A.mul(ag, b))
    return hnf(vecs, A.dim)


__all__ = [
    "AlgebraError",
    "Order",
    "OrderError",
    "SpecPoint",
    "SpecPoset",
    "closed_points_over",
    "fiber",
    "generic_minimal_primes",
    "ideal_lattice",
    "make_order",
    "smallest_neighborhood",
    "spec_poset",
]
