from __future__ import annotations

import pytest

from ncspec import presets
from ncspec.algebra import build, direct_product, matrix_algebra
from ncspec.coeff import ZZ, PolynomialRing, make_field
from ncspec.order import make_order
from ncspec.procesi import identity, unit_map
from ncspec.zeta import (
    EulerFactor,
    compare_rational,
    dirichlet_prefix,
    local_zeta,
    norm_compatibility,
    series_from_factors,
    zeta_series,
)

F3, F5 = make_field(3), make_field(5)


def test_local_zeta_examples():
    assert local_zeta(presets.s3(F3)) == [EulerFactor(1, 2)]
    assert local_zeta(presets.s3(F5)) == [EulerFactor(1, 3)]
    F9 = make_field(3, 2)
    assert local_zeta(presets.mat2(F9)) == [EulerFactor(1, 1)]
    assert local_zeta(presets.mat2(F9), 3) == [EulerFactor(2, 1)]


def test_f3_s3_series():
    z = zeta_series(make_order(F3, presets.s3(F3)), 5)
    assert z.coeffs == (1, 2, 3, 4, 5, 6)
    assert compare_rational(z, [1], [1, -2, 1])
    assert not compare_rational(z, [1], [1, -3, 3, -1])
    with pytest.raises(ValueError):
        compare_rational(z, [1], [0, 1])


@pytest.mark.parametrize("q", [2, 3, 5])
def test_affine_line(q):
    R = PolynomialRing(make_field(q))
    line = build(R, ["1"], {(0, 0): {0: R.one}})
    z = zeta_series(make_order(R, line), 5)
    assert z.coeffs == tuple(q**n for n in range(6))


def test_dihedral_over_f3():
    R = PolynomialRing(F3)
    z = zeta_series(make_order(R, presets.dihedral(R)), 6)
    assert compare_rational(z, [1], [1, -5, 7, -3])  # (1-u)^2 (1-3u)


def test_parallel_evaluation_is_identical():
    R = PolynomialRing(F3)
    O = make_order(R, presets.dihedral(R))
    assert zeta_series(O, 4, jobs=2) == zeta_series(O, 4)


def test_riemann_and_gauss_prefixes():
    one = build(ZZ, ["1"], {(0, 0): {0: 1}})
    assert dirichlet_prefix(make_order(ZZ, one), 10).coeffs == (1,) * 10
    g = dirichlet_prefix(make_order(ZZ, presets.gauss()), 10)
    assert g.coeffs == (1, 1, 0, 1, 2, 0, 0, 1, 1, 2)


def test_s3_local_factors():
    d = dirichlet_prefix(make_order(ZZ, presets.s3()), 5)
    assert d.local(3) == (EulerFactor(1, 2),)
    assert d.local(5) == (EulerFactor(1, 3),)


def test_series_from_factors():
    assert series_from_factors([EulerFactor(2, 1)], 5) == (1, 0, 1, 0, 1, 0)
    assert series_from_factors([], 3) == (1, 0, 0, 0)


def test_norm_compatibility_examples():
    A = presets.s3(F3)
    assert [r[-1] for r in norm_compatibility(identity(A)).rows] == [1, 1]
    rows = norm_compatibility(unit_map(A)).rows
    assert [(r[2], r[3], r[4]) for r in rows] == [(3, 3, 1), (3, 3, 1)]
    F9 = make_field(3, 2)
    M = presets.mat2(F9)
    # M_2(F_9) as an F_3-algebra through restriction of scalars
    from ncspec.algebra import restrict_to_prime_field

    M3 = restrict_to_prime_field(M).algebra
    (row,) = norm_compatibility(unit_map(M3)).rows
    assert row[2:] == (9, 3, 2)


def test_product_multiplies_series():
    A, B = presets.s3(F5), matrix_algebra(presets.c2(F5), 2)
    za = zeta_series(make_order(F5, A), 6).coeffs
    zb = zeta_series(make_order(F5, B), 6).coeffs
    zab = zeta_series(make_order(F5, direct_product(A, B)), 6).coeffs
    conv = tuple(sum(za[k] * zb[n - k] for k in range(n + 1)) for n in range(7))
    assert zab == conv
