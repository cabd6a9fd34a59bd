from __future__ import annotations

import itertools

import pytest

from ncspec.coeff import (
    ZZ,
    CoefficientError,
    PolynomialRing,
    base_max_ideals,
    irreducibles,
    make_field,
    make_max_ideal,
    poly_divmod,
    poly_is_irreducible,
    poly_mul,
    residue_field,
)


def mobius_oracle(n):
    mu, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            mu = -mu
        p += 1
    return -mu if m > 1 else mu


def irreducible_count(q, d):
    return sum(mobius_oracle(d // e) * q**e for e in range(1, d + 1) if d % e == 0) // d


def test_prime_field_arithmetic():
    F = make_field(3)
    assert F.order == 3
    assert F.mul(2, 2) == 1
    assert F.inv(2) == 2
    assert F.sub(0, 1) == 2


def test_gf4_generator_has_order_3():
    F = make_field(2, 2)
    g = F.generator()
    assert F.order == 4
    assert g != F.one and F.mul(g, g) != F.one
    assert F.pow(g, 3) == F.one


def test_gf8_modulus_is_lex_smallest_cubic():
    # constant term compared first: T^3 + T^2 + 1 beats T^3 + T + 1
    assert make_field(2, 3).modulus == (1, 0, 1, 1)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_modulus_matches_brute_force(p, k):
    def irreducible_by_trial_division(f):
        Fp = make_field(p)
        for e in range(1, k // 2 + 1):
            for g in itertools.product(range(p), repeat=e):
                if poly_divmod(Fp, f, tuple(g) + (1,))[1] == ():
                    return False
        return True

    cands = sorted(tuple(c) + (1,) for c in itertools.product(range(p), repeat=k))
    best = next(f for f in cands if irreducible_by_trial_division(f))
    assert make_field(p, k).modulus == best


def test_make_field_rejects_composite():
    with pytest.raises(CoefficientError):
        make_field(4)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (5, 2)])
def test_frobenius_has_order_k(p, k):
    F = make_field(p, k)
    g = F.generator()
    x, steps = F.pow(g, p), 1
    while x != g:
        x, steps = F.pow(x, p), steps + 1
    assert steps == k


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3)])
def test_every_nonzero_element_is_invertible(p, k):
    F = make_field(p, k)
    elems = list(F.elements())
    assert len(set(elems)) == p**k
    for a in elems:
        if a != F.zero:
            assert F.mul(a, F.inv(a)) == F.one


def test_irreducibles_small_cases():
    F2 = make_field(2)
    assert irreducibles(F2, 1) == ((0, 1), (1, 1))
    assert irreducibles(F2, 3) == ((1, 1, 0, 1), (1, 0, 1, 1))
    assert len(irreducibles(make_field(3), 2)) == 3


@pytest.mark.parametrize("q,dmax", [(2, 8), (3, 5), (4, 3), (5, 4), (7, 3), (9, 2)])
def test_irreducible_counts_match_moebius(q, dmax):
    p, k = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 9: (3, 2)}[q]
    F = make_field(p, k)
    for d in range(1, dmax + 1):
        polys = irreducibles(F, d)
        assert len(polys) == irreducible_count(q, d)
        assert len(set(polys)) == len(polys)


def test_irreducibles_agree_with_rabin_test():
    F = make_field(3)
    for f in irreducibles(F, 4):
        assert poly_is_irreducible(F, f)
    g = poly_mul(F, (1, 1), (2, 0, 1))
    assert not poly_is_irreducible(F, g)


def test_poly_divmod_identity():
    F = make_field(5)
    a, b = (1, 2, 3, 4, 1), (2, 0, 1)
    q, r = poly_divmod(F, a, b)
    assert len(r) < len(b)
    prod = poly_mul(F, q, b)
    total = tuple((x + y) % 5 for x, y in zip(prod + (0,) * 5, r + (0,) * 9))
    assert total[: len(a)] == a


def test_base_max_ideals():
    assert [m.generator for m in base_max_ideals(ZZ, 10)] == [2, 3, 5, 7]
    R = PolynomialRing(make_field(3))
    assert [m.generator for m in base_max_ideals(R, 1)] == [(0, 1), (1, 1), (2, 1)]
    F5 = make_field(5)
    ideals = list(base_max_ideals(F5, 3))
    assert len(ideals) == 1 and ideals[0].norm == 5


def test_max_ideal_validation():
    with pytest.raises(CoefficientError):
        make_max_ideal(ZZ, 6)
    R = PolynomialRing(make_field(3))
    with pytest.raises(CoefficientError):
        make_max_ideal(R, (1, 0, 1 + 1))  # T^2 + 2 = (T - 1)(T + 1) over F_3


def test_residue_fields():
    R = PolynomialRing(make_field(3))
    m = make_max_ideal(R, (1, 0, 1))
    K = residue_field(m)
    assert K.order == 9
    T = m.reduce(R.T)
    assert K.mul(T, T) == K.neg(K.one)
    assert residue_field(make_max_ideal(ZZ, 7)).order == 7
