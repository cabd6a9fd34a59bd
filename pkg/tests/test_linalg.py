from __future__ import annotations

from ncspec.coeff import make_field
from ncspec.linalg import Subspace, nullspace, rank, rref

F5 = make_field(5)
F4 = make_field(2, 2)


def test_rref_is_canonical():
    rows = [(1, 2, 3), (2, 4, 1), (0, 0, 1)]
    r1, p1 = rref(F5, rows, 3)
    r2, p2 = rref(F5, list(reversed(rows)), 3)
    assert r1 == r2 and list(p1) == list(p2) == [0, 2]


def test_nullspace_over_extension():
    w = F4.generator()
    M = [(F4.one, w), (w, F4.mul(w, w))]
    ker = nullspace(F4, M, 2)
    assert len(ker) == 1
    x = ker[0]
    assert all(F4.add(F4.mul(r[0], x[0]), F4.mul(r[1], x[1])) == F4.zero for r in M)
    assert rank(F4, M, 2) == 1


def test_subspace_lattice_operations():
    U = Subspace.span(F5, 3, [(1, 0, 0), (0, 1, 1)])
    V = Subspace.span(F5, 3, [(0, 1, 1), (0, 0, 1)])
    assert (U + V).dim == 3
    assert U.intersection(V) == Subspace.span(F5, 3, [(0, 1, 1)])
    assert Subspace.zero(F5, 3) <= U <= Subspace.full(F5, 3)
    assert U.contains((2, 3, 3)) and not U.contains((0, 0, 1))
    assert U.combine(U.coords((2, 3, 3))) == (2, 3, 3)
