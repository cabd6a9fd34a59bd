from __future__ import annotations

from functools import lru_cache, reduce
from math import gcd

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from ncspec import presets
from ncspec.algebra import build, direct_product, matrix_algebra, restrict_to_prime_field
from ncspec.coeff import (
    ZZ,
    PolynomialRing,
    make_field,
    poly_add,
    poly_divmod,
    poly_mul,
    poly_trim,
)
from ncspec.linalg import rref
from ncspec.order import make_order, spec_poset
from ncspec.structure import radical, wedderburn
from ncspec.zeta import EulerFactor, dirichlet_prefix, expand_rational, series_from_factors, zeta_series

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)]
fields = st.sampled_from(FIELDS).map(lambda pk: make_field(*pk))
slow = settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def elements(F):
    return st.integers(0, F.order - 1).map(F.from_key)


@given(st.data(), fields)
def test_field_axioms(data, F):
    a, b, c = (data.draw(elements(F)) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.sub(F.add(a, b), b) == a
    if not F.is_zero(a):
        assert F.mul(a, F.inv(a)) == F.one
        assert F.pow(a, F.order - 1) == F.one


def polys(F, max_deg=6):
    return st.lists(elements(F), max_size=max_deg + 1).map(lambda c: poly_trim(F, tuple(c)))


@given(st.data(), fields)
def test_poly_divmod(data, F):
    a = data.draw(polys(F))
    b = data.draw(polys(F, 3))
    if not b:
        return
    q, r = poly_divmod(F, a, b)
    assert poly_add(F, poly_mul(F, q, b), r) == a
    assert len(r) < len(b)


@given(st.data(), st.sampled_from([(3, 1), (5, 1), (2, 2)]))
def test_rref_is_canonical(data, pk):
    F = make_field(*pk)
    n = data.draw(st.integers(1, 5))
    rows = data.draw(st.lists(st.lists(elements(F), min_size=n, max_size=n), min_size=1, max_size=4))
    R, piv = rref(F, rows, n)
    # mixing in combinations and reordering leaves the echelon form unchanged
    coeffs = data.draw(st.lists(elements(F), min_size=len(rows), max_size=len(rows)))
    combo = [reduce(F.add, (F.mul(c, r[i]) for c, r in zip(coeffs, rows)), F.zero) for i in range(n)]
    R2, piv2 = rref(F, [combo] + list(reversed(rows)), n)
    assert (R, piv) == (R2, piv2)
    assert rref(F, R, n) == (R, piv)
    for row, p in zip(R, piv):
        assert row[p] == F.one and all(F.is_zero(x) for x in row[:p])


def _field_block(p, n, r):
    """``M_r(F_{p^n})`` as an algebra over ``F_p``."""
    K = make_field(p, n)
    one = build(K, ["1"], {(0, 0): {0: K.one}})
    return matrix_algebra(restrict_to_prime_field(one).algebra, r)


def _dual_numbers(p):
    F = make_field(p)
    return build(F, ["1", "x"], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})


@slow
@given(
    st.sampled_from([2, 3]),
    st.lists(st.tuples(st.integers(1, 2), st.integers(1, 2)), min_size=1, max_size=3),
    st.integers(0, 1),
)
def test_wedderburn_recovers_direct_products(p, shape, nilpotent):
    factors = [_field_block(p, n, r) for r, n in shape]
    if nilpotent:
        factors.append(_dual_numbers(p))
    A = reduce(direct_product, factors)
    data = wedderburn(A)
    expected = sorted([(n, r) for r, n in shape] + [(1, 1)] * nilpotent)
    assert sorted((b.n, b.r) for b in data.blocks) == expected
    assert radical(A).dim == nilpotent
    assert data.semisimple_dim + data.radical.dim == A.dim


factor_lists = st.lists(
    st.builds(EulerFactor, st.integers(1, 4), st.integers(1, 3)), max_size=5
)


def _mul_trunc(a, b, D):
    return tuple(sum(a[k] * b[n - k] for k in range(n + 1)) for n in range(D + 1))


@given(factor_lists, factor_lists, st.integers(1, 12))
def test_series_is_multiplicative(f, g, D):
    assert series_from_factors(f + g, D) == _mul_trunc(
        series_from_factors(f, D), series_from_factors(g, D), D
    )


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5), st.integers(1, 15))
def test_degree_one_factors_give_nondecreasing_counts(mults, D):
    a = series_from_factors([EulerFactor(1, m) for m in mults], D)
    assert a[0] == 1 and all(x <= y for x, y in zip(a, a[1:]))


@lru_cache(maxsize=None)
def _prefix(name):
    ctor, _ = presets.PRESETS[name]
    return dirichlet_prefix(make_order(ZZ, ctor(ZZ)), 60)


@given(st.sampled_from(["s3", "gauss", "c2", "mat2"]), st.integers(1, 60), st.integers(1, 60))
def test_dirichlet_coefficients_are_multiplicative(name, m, n):
    d = _prefix(name)
    if gcd(m, n) == 1 and m * n <= 60:
        assert d.a(m * n) == d.a(m) * d.a(n)


@slow
@given(st.sampled_from([3, 5, 7]), st.integers(1, 3))
def test_dihedral_census(q, D):
    # two split points over T = +-2, one point of each other degree
    F = make_field(q)
    z = zeta_series(make_order(PolynomialRing(F), presets.dihedral(PolynomialRing(F))), D)
    assert z.coeffs == expand_rational([1], [1, -(q + 2), 2 * q + 1, -q], D)


@slow
@given(st.sampled_from(["s3", "gauss", "c2"]), st.sampled_from([2, 3, 5, 7]))
def test_spec_poset_is_a_partial_order(name, p):
    ctor, _ = presets.PRESETS[name]
    P = spec_poset(make_order(ZZ, ctor(ZZ)), localize=p, generic=True)
    rel = P.closure
    n = len(P.points)
    for i in range(n):
        assert (i, i) in rel
        for j in range(n):
            if i != j and (i, j) in rel:
                assert (j, i) not in rel
                assert all((i, k) in rel for k in range(n) if (j, k) in rel)
    # each closed point is closed, and each generic point specializes to some closed one
    for i, pt in enumerate(P.points):
        cl = P.closure_of(i)
        assert cl == [i] if pt.closed else len(cl) > 1
