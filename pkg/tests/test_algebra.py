from __future__ import annotations

import pytest

from ncspec import presets
from ncspec.algebra import (
    AlgebraError,
    SCAlgebra,
    build,
    center,
    centralizer,
    group_algebra,
    ideal_generated,
    ideal_power,
    matrix_algebra,
    quotient,
)
from ncspec.coeff import make_field
from ncspec.linalg import Subspace

F3 = make_field(3)
F5 = make_field(5)


def test_s3_group_algebra_is_accepted():
    A = presets.s3(F3)
    assert A.dim == 6
    assert not A.is_commutative()


def test_broken_associativity_reports_triple():
    A = presets.s3(F3)
    table = [list(row) for row in A.table]
    table[1][1] = ((0, 1),)  # beta * beta = 1 instead of beta^2
    with pytest.raises(AlgebraError) as err:
        SCAlgebra(F3, A.labels, table, A.unit)
    assert len(err.value.witness) == 3


def test_unit_law_is_checked():
    with pytest.raises(AlgebraError):
        build(F3, ["a", "b"], {(0, 0): {0: 1}, (1, 1): {1: 1}}, unit=(1, 0))


def test_c1_and_c2():
    C1 = group_algebra([[0]], F3)
    assert C1.dim == 1 and C1.unit == (1,)
    C2 = presets.c2(make_field(2))
    s = C2.basis_vector(1)
    assert C2.mul(s, s) == C2.unit


def test_matrix_algebras():
    M = matrix_algebra(presets.c2(F3), 1)
    assert M.dim == 2
    assert matrix_algebra(presets.s3(F3), 2).dim == 24
    M2 = presets.mat2(F3)
    E = M2.basis_vector
    assert M2.mul(E(1), E(2)) == E(0)  # E12 E21 = E11
    assert M2.is_zero(M2.mul(E(1), E(1)))


def test_center_of_f3_s3():
    A = presets.s3(F3)
    Z = center(A)
    assert Z.dim == 3
    u = A.add(A.unit, A.add(A.basis_vector(1), A.basis_vector(2)))
    v = A.mul(A.basis_vector(3), u)
    assert Z.contains(u) and Z.contains(v)
    for x in (u, v):
        for y in (u, v):
            assert A.is_zero(A.mul(x, y))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_center_of_matrix_algebra_is_scalars(p):
    M = presets.mat2(make_field(p))
    Z = center(M)
    assert Z.dim == 1 and Z.contains(M.unit)


def test_commutative_center_is_everything():
    A = group_algebra(presets.cyclic_table(3), F5)
    assert center(A).dim == 3


def test_centralizers():
    M = presets.mat2(F5)
    E11, E22 = M.basis_vector(0), M.basis_vector(3)
    C = centralizer(M, [E11, E22])
    assert C == Subspace.span(F5, 4, [E11, E22])
    assert centralizer(M, [M.unit]).dim == 4
    assert centralizer(M, M.basis()) == center(M)


def test_ideal_generated_by_beta_minus_one():
    A = presets.s3(F3)
    I = ideal_generated(A, [A.sub(A.basis_vector(1), A.unit)])
    assert I.dim == 4
    assert ideal_power(A, I, 3).dim == 0
    assert ideal_power(A, I, 2).dim > 0
    assert ideal_generated(A, [A.unit]).dim == 6
    assert ideal_generated(A, []).dim == 0


def test_quotient_by_augmentation_ideal():
    A = presets.s3(F3)
    I = ideal_generated(A, [A.sub(A.basis_vector(1), A.unit)])
    qm = quotient(A, I)
    Q = qm.algebra
    assert Q.dim == 2 and Q.is_commutative()
    a = qm(A.basis_vector(3))
    assert Q.mul(a, a) == Q.unit and a != Q.unit  # alpha maps to (1, -1)
    e1 = Q.scale(F3.inv(2), Q.add(Q.unit, a))
    assert Q.mul(e1, e1) == e1


def test_quotient_edge_cases():
    A = presets.s3(F3)
    assert quotient(A, Subspace.zero(F3, 6)).algebra.dim == 6
    with pytest.raises(AlgebraError):
        quotient(A, Subspace.full(F3, 6))
