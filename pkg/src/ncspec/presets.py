"""Compiled-in algebras and orders used by the CLI and the test-suite."""

from __future__ import annotations

from itertools import product

from .algebra import SCAlgebra, build, group_algebra, matrix_algebra
from .coeff import ZZ, PolynomialRing, make_field

S3_LABELS = ("1", "beta", "beta2", "alpha", "alpha_beta", "alpha_beta2")


def s3_table() -> list[list[int]]:
    """S_3 as ``alpha^a beta^b`` with ``alpha^2 = beta^3 = 1`` and ``beta alpha = alpha beta^-1``."""
    elems = [(a, b) for a in range(2) for b in range(3)]
    index = {g: i for i, g in enumerate(elems)}

    def mul(x, y):
        a, b = x
        c, d = y
        return ((a + c) % 2, ((-b if c else b) + d) % 3)

    return [[index[mul(x, y)] for y in elems] for x in elems]


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def klein_table() -> list[list[int]]:
    elems = list(product(range(2), repeat=2))
    index = {g: i for i, g in enumerate(elems)}
    return [[index[((a + c) % 2, (b + d) % 2)] for c, d in elems] for a, b in elems]


def groups_up_to_order_4() -> dict[str, list[list[int]]]:
    return {
        "C1": cyclic_table(1),
        "C2": cyclic_table(2),
        "C3": cyclic_table(3),
        "C4": cyclic_table(4),
        "C2xC2": klein_table(),
    }


def s3(ring=ZZ) -> SCAlgebra:
    return group_algebra(s3_table(), ring, list(S3_LABELS))


def c2(ring=ZZ) -> SCAlgebra:
    return group_algebra(cyclic_table(2), ring, ["1", "sigma"])


def dihedral(ring=None) -> SCAlgebra:
    """Group ring of the infinite dihedral group as a rank-4 algebra over ``F[T]``.

    Basis ``1, beta, alpha, alpha_beta`` with ``T = beta + beta^-1`` central:
    ``beta^2 = T beta - 1``, ``beta alpha = T alpha - alpha beta``,
    ``(alpha beta)^2 = 1``.
    """
    R = ring if ring is not None else PolynomialRing(make_field(3))
    one, T = R.one, R.T
    m1 = R.neg(one)
    prods = {
        (0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one}, (0, 3): {3: one},
        (1, 0): {1: one}, (1, 1): {1: T, 0: m1}, (1, 2): {2: T, 3: m1}, (1, 3): {2: one},
        (2, 0): {2: one}, (2, 1): {3: one}, (2, 2): {0: one}, (2, 3): {1: one},
        (3, 0): {3: one}, (3, 1): {3: T, 2: m1}, (3, 2): {0: T, 1: m1}, (3, 3): {0: one},
    }  # fmt: skip
    return build(R, ["1", "beta", "alpha", "alpha_beta"], prods)


def gauss(ring=ZZ) -> SCAlgebra:
    """``R[i]/(i^2 + 1)``."""
    return build(ring, ["1", "i"], {
        (0, 0): {0: ring.one}, (0, 1): {1: ring.one},
        (1, 0): {1: ring.one}, (1, 1): {0: ring.neg(ring.one)},
    })  # fmt: skip


def mat2(ring=ZZ) -> SCAlgebra:
    one = build(ring, ["1"], {(0, 0): {0: ring.one}})
    M = matrix_algebra(one, 2)
    labels = ["E11", "E12", "E21", "E22"]
    return SCAlgebra(ring, labels, M.table, M.unit, verify=False)


PRESETS = {
    "s3": (s3, "Z"),
    "c2": (c2, "Z"),
    "dihedral": (dihedral, "GF(3)[T]"),
    "mat2": (mat2, "Z"),
    "gauss": (gauss, "Z"),
}
