"""Prime spectra, Wedderburn data and Hasse zeta functions of
finite-dimensional algebras and of orders over Z, F_q and F_q[T]."""

from .algebra import AlgebraError, SCAlgebra, build, center, group_algebra, matrix_algebra
from .coeff import QQ, ZZ, PolynomialRing, make_field, make_max_ideal
from .description import load_description, parse_algebra, parse_morphism, serialize_algebra
from .order import Order, make_order, smallest_neighborhood, spec_poset
from .procesi import make_morphism, procesi_check, rc_check, tensor
from .structure import max_two_sided_ideals, radical, wedderburn
from .zeta import dirichlet_prefix, zeta_series

__all__ = [
    "AlgebraError",
    "Order",
    "PolynomialRing",
    "QQ",
    "SCAlgebra",
    "ZZ",
    "build",
    "center",
    "dirichlet_prefix",
    "group_algebra",
    "load_description",
    "make_field",
    "make_max_ideal",
    "make_morphism",
    "make_order",
    "matrix_algebra",
    "max_two_sided_ideals",
    "parse_algebra",
    "parse_morphism",
    "procesi_check",
    "radical",
    "rc_check",
    "serialize_algebra",
    "smallest_neighborhood",
    "spec_poset",
    "tensor",
    "wedderburn",
    "zeta_series",
]
