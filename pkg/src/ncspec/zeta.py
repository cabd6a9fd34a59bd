"""Hasse zeta functions of orders as truncated power series in ``u = q^-s``
(finite-field and F_q[T] bases) or as Dirichlet prefixes (base Z)."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebra import SCAlgebra
from .coeff import (
    IntegerRing,
    PolynomialRing,
    base_max_ideals,
    make_max_ideal,
    primes_up_to,
)
from .order import Order, OrderError, fiber
from .procesi import AlgMorphism, procesi_check, pullback_point
from .structure import max_two_sided_ideals, require_finite_field


@dataclass(frozen=True, order=True)
class EulerFactor:
    """``(1 - N^-s)^-multiplicity`` with ``N = q^degree``."""

    degree: int
    multiplicity: int = 1

    def __post_init__(self):
        if self.degree < 1 or self.multiplicity < 1:
            raise ValueError("Euler factor degree and multiplicity must be positive")


def _exact_log(N: int, q: int) -> int:
    k, x = 0, 1
    while x < N:
        x *= q
        k += 1
    if x != N:
        raise ValueError(f"{N} is not a power of {q}")
    return k


def _collect(degrees) -> list[EulerFactor]:
    return [EulerFactor(d, m) for d, m in sorted(Counter(degrees).items())]


def local_zeta(A: SCAlgebra, q: int | None = None) -> list[EulerFactor]:
    """Euler factors of a finite-dimensional algebra over a finite field.

    Degrees are measured against ``q`` (default: the size of the coefficient
    field), so a point with ``N(x) = q^d`` contributes to degree ``d``.
    """
    require_finite_field(A)
    q = A.field.order if q is None else q
    return _collect(_exact_log(pt.N, q) for pt in max_two_sided_ideals(A))


@dataclass(frozen=True)
class ZetaSeries:
    q: int
    D: int
    coeffs: tuple
    provenance: tuple = ()  # (fiber label, factors) sorted by fiber

    def __str__(self) -> str:
        return ",".join(map(str, self.coeffs))


def series_from_factors(factors, D: int) -> tuple:
    """Coefficients of ``prod (1 - u^d)^-mult`` up to ``u^D``."""
    a = [1] + [0] * D
    for f in factors:
        if f.degree > D:
            continue
        for _ in range(f.multiplicity):
            for n in range(f.degree, D + 1):
                a[n] += a[n - f.degree]
    return tuple(a)


def _fiber_factors(args):
    order, m, q = args
    return m, local_zeta(fiber(order, m), q)


def _base_q(order: Order) -> int:
    base = order.base
    if isinstance(base, IntegerRing):
        raise OrderError("zeta_series needs a finite-field or F_q[T] base; use dirichlet_prefix for Z")
    if isinstance(base, PolynomialRing):
        return base.field.order
    return base.order


def _map(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(x) for x in items]


def zeta_series(order: Order, D: int, *, jobs: int = 1) -> ZetaSeries:
    """Product of the local factors of every fiber of degree at most ``D``."""
    if D < 1:
        raise ValueError("D must be at least 1")
    q = _base_q(order)
    if isinstance(order.base, PolynomialRing):
        fibers = list(base_max_ideals(order.base, D))
    else:
        fibers = [make_max_ideal(order.base)]
    results = _map(_fiber_factors, [(order, m, q) for m in fibers], jobs)
    results.sort(key=lambda r: r[0].sort_key())
    factors = [f for _, fs in results for f in fs]
    prov = tuple((m.label(), tuple(fs)) for m, fs in results)
    return ZetaSeries(q, D, series_from_factors(factors, D), prov)


def compare_rational(series: ZetaSeries, num, den) -> bool:
    """Whether ``series * den == num`` modulo ``u^(D+1)``.

    Polynomials are integer coefficient lists, lowest degree first.
    """
    den = list(den)
    if not den or den[0] == 0:
        raise ValueError("denominator must have a nonzero constant term")
    D = series.D
    num = list(num) + [0] * (D + 1)
    a = series.coeffs
    for n in range(D + 1):
        s = sum(den[k] * a[n - k] for k in range(min(n, len(den) - 1) + 1))
        if s != num[n]:
            return False
    return True


def expand_rational(num, den, D: int) -> tuple:
    """Power series of ``num / den`` to ``u^D`` (``den[0]`` must be 1 or -1)."""
    if not den or den[0] not in (1, -1):
        raise ValueError("denominator must have constant term +-1")
    num = list(num) + [0] * (D + 1)
    out = []
    for n in range(D + 1):
        s = num[n] - sum(den[k] * out[n - k] for k in range(1, min(n, len(den) - 1) + 1))
        out.append(s * den[0])
    return tuple(out)


# ---------------------------------------------------------------------------
# base Z
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DirichletPrefix:
    N: int
    coeffs: tuple  # a_1..a_N
    factors: tuple  # (p, (EulerFactor, ...)) for each prime p <= N

    def a(self, n: int) -> int:
        return self.coeffs[n - 1]

    def local(self, p: int) -> tuple:
        for q, fs in self.factors:
            if q == p:
                return fs
        raise KeyError(p)


def _prime_factors_of(args):
    order, p = args
    return p, local_zeta(fiber(order, make_max_ideal(order.base, p)), p)


def dirichlet_prefix(order: Order, N: int, *, jobs: int = 1) -> DirichletPrefix:
    """Dirichlet coefficients ``a_1..a_N`` of the zeta function of a Z-order."""
    if N < 1:
        raise ValueError("N must be at least 1")
    if not isinstance(order.base, IntegerRing):
        raise OrderError("dirichlet_prefix needs base Z")
    primes = primes_up_to(N)
    results = sorted(_map(_prime_factors_of, [(order, p) for p in primes], jobs))
    a = [0] * (N + 1)
    a[1] = 1
    for p, fs in results:
        kmax = _exact_floor_log(N, p)
        local = series_from_factors(fs, kmax)
        # multiply in the p-part: every n built so far is coprime to p
        done = [n for n in range(1, N + 1) if a[n] and n % p]
        for n in done:
            pk = p
            for k in range(1, kmax + 1):
                if n * pk > N:
                    break
                a[n * pk] = a[n] * local[k]
                pk *= p
    return DirichletPrefix(N, tuple(a[1:]), tuple((p, tuple(fs)) for p, fs in results))


def _exact_floor_log(N: int, p: int) -> int:
    k, x = 0, p
    while x <= N:
        x *= p
        k += 1
    return k


# ---------------------------------------------------------------------------
# norms along morphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormReport:
    rows: tuple  # (target index, source index, N_target, N_source, exponent)


def norm_compatibility(h: AlgMorphism) -> NormReport:
    """For every maximal ideal of the target, compare its norm with that of
    its pullback; the first must be a positive power of the second."""
    if not procesi_check(h):
        raise OrderError("norm compatibility needs a map satisfying the A-algebra condition")
    src = max_two_sided_ideals(h.source)
    tgt = max_two_sided_ideals(h.target)
    rows = []
    for i, x in enumerate(tgt):
        P = pullback_point(h, x.ideal)
        j = next((k for k, y in enumerate(src) if y.ideal == P), None)
        if j is None:
            raise AssertionError("pullback of a maximal ideal is not maximal")
        y = src[j]
        try:
            e = _exact_log(x.N, y.N)
        except ValueError:
            e = 0
        if e < 1:
            raise AssertionError(f"N(x)={x.N} is not a positive power of N(y)={y.N}")
        rows.append((i, j, x.N, y.N, e))
    return NormReport(tuple(rows))
