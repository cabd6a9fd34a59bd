"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (message on stderr), 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import presets
from .algebra import AlgebraError, center
from .coeff import CoefficientError, IntegerRing, PolynomialRing, make_max_ideal, base_max_ideals
from .description import DescriptionError, load_description, parse_base, parse_coefficient
from .order import Order, OrderError, closed_points_over, fiber, make_order, smallest_neighborhood, spec_poset
from .procesi import (
    AlgMorphism,
    MorphismError,
    naive_product_witness,
    preimage,
    procesi_check,
    prime_test,
    rc_check,
    swap_iso,
    tensor,
    unit_map,
)
from .structure import StructureError, max_two_sided_ideals, radical, wedderburn
from .zeta import dirichlet_prefix, zeta_series

DOMAIN_ERRORS = (
    AlgebraError,
    CoefficientError,
    DescriptionError,
    MorphismError,
    OrderError,
    StructureError,
    ArithmeticError,
)

SUBCOMMANDS = (
    "center",
    "radical",
    "wedderburn",
    "points",
    "spec",
    "zeta",
    "dirichlet",
    "tensor",
    "check-morphism",
    "neighborhood",
)


class DomainError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ncspec",
        description="Prime spectra, Wedderburn data and zeta functions of finite algebras and orders.",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--preset", choices=sorted(presets.PRESETS))
        src.add_argument("--file")
        sp.add_argument("--base", help="coefficient ring for a preset: Z, GF(q) or GF(q)[T]")
        sp.add_argument("--format", choices=("text", "machine"), default="text")
        sp.add_argument("--fiber", action="append", default=[], help="maximal ideal of the base (repeatable)")
        sp.add_argument("--jobs", type=_positive, default=1)
        if name in ("points", "zeta"):
            sp.add_argument("-D", type=_positive, help="degree bound")
        if name in ("points", "dirichlet"):
            sp.add_argument("-N", type=_positive, help="prime or coefficient bound")
        if name in ("spec", "neighborhood"):
            sp.add_argument("--localize", help="prime of Z (or irreducible of F[T]) to localize at")
            sp.add_argument("--generic", action="store_true", help="include generic minimal primes")
        if name == "neighborhood":
            sp.add_argument("--point", required=True, help="label of a closed point, e.g. m1")
        if name == "tensor":
            other = sp.add_mutually_exclusive_group(required=True)
            other.add_argument("--with-preset", choices=sorted(presets.PRESETS))
            other.add_argument("--with-file")
    return p


# ---------------------------------------------------------------------------
# inputs
# ---------------------------------------------------------------------------


def _load(preset, path, base_text):
    if preset is not None:
        ctor, default = presets.PRESETS[preset]
        ring = parse_base(base_text or default)
        return ctor(ring)
    if base_text:
        raise DomainError("--base applies to presets only; a description file names its own base")
    return load_description(path)


def load_input(args, *, morphism_ok: bool = False):
    obj = _load(args.preset, args.file, args.base)
    if isinstance(obj, AlgMorphism) and not morphism_ok:
        raise DomainError(f"{args.file} describes a morphism; this command needs an algebra")
    return obj


def _parse_fiber(base, text: str):
    if isinstance(base, IntegerRing):
        try:
            p = int(text)
        except ValueError:
            raise DomainError(f"fiber {text!r} is not an integer prime") from None
        return make_max_ideal(base, p)
    if isinstance(base, PolynomialRing):
        f = parse_coefficient(base, text)
        return make_max_ideal(base, f)
    raise DomainError("a field base has a single fiber; drop --fiber")


def field_algebra_of(args, A):
    """The algebra itself over a field base, or its unique selected fiber."""
    if A.ring.is_field:
        if args.fiber:
            raise DomainError("a field base has a single fiber; drop --fiber")
        return A, "0"
    if len(args.fiber) != 1:
        raise DomainError(f"base {A.ring!r} is not a field; select one fiber with --fiber")
    m = _parse_fiber(A.ring, args.fiber[0])
    return fiber(make_order(A.ring, A), m), m.label()


def _emit(lines, out):
    for line in lines:
        print(line, file=out)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_center(args):
    A, _ = field_algebra_of(args, load_input(args))
    Z = center(A)
    if args.format == "machine":
        return [f"center dim={Z.dim}"] + [f"element {A.fmt(v)}" for v in Z.rows]
    lines = [f"center of a {A.dim}-dimensional algebra over {A.field.name()}: dimension {Z.dim}"]
    lines += [f"  {A.fmt(v)}" for v in Z.rows]
    return lines


def cmd_radical(args):
    A, _ = field_algebra_of(args, load_input(args))
    J = radical(A)
    if args.format == "machine":
        return [f"radical dim={J.dim}"] + [f"element {A.fmt(v)}" for v in J.rows]
    lines = [f"Jacobson radical: dimension {J.dim} of {A.dim}"]
    lines += [f"  {A.fmt(v)}" for v in J.rows]
    return lines


def cmd_wedderburn(args):
    A, _ = field_algebra_of(args, load_input(args))
    data = wedderburn(A)
    q = A.field.order
    if args.format == "machine":
        lines = [f"radical dim={data.radical.dim}"]
        lines += [f"block r={b.r} n={b.n} q={q}" for b in data.blocks]
        return lines
    lines = [
        f"dim A = {A.dim}, dim J = {data.radical.dim}, dim A/J = {data.semisimple_dim}",
        f"{len(data.blocks)} block(s):",
    ]
    for pt in max_two_sided_ideals(A):
        lines.append(f"  {pt.kappa()}  (r={pt.r}, center degree {pt.n}, dimension {pt.r * pt.r * pt.n})")
    return lines


def _selected_fibers(args, base):
    if args.fiber:
        return [_parse_fiber(base, t) for t in args.fiber]
    if isinstance(base, IntegerRing):
        if not args.N:
            raise DomainError("select fibers with --fiber or a prime bound with -N")
        return list(base_max_ideals(base, args.N))
    if isinstance(base, PolynomialRing):
        if not args.D:
            raise DomainError("select fibers with --fiber or a degree bound with -D")
        return list(base_max_ideals(base, args.D))
    return [make_max_ideal(base)]


def cmd_points(args):
    A = load_input(args)
    order = make_order(A.ring, A)
    lines = []
    for m in _selected_fibers(args, order.base):
        pts = closed_points_over(order, m)
        if args.format == "machine":
            lines += [f"point base={m.label()} N={p.N} r={p.r}" for p in pts]
        else:
            lines.append(f"fiber at {m.label()}: {len(pts)} point(s)")
            lines += [f"  N={p.N}  r={p.r}  kappa={p.point.kappa()}" for p in pts]
    return lines


def _ideal_text(order: Order, pt) -> str:
    A = order.algebra
    if pt.lattice is not None:
        return "(" + ", ".join(A.fmt(v) for v in pt.lattice) + ")" if pt.lattice else "(0)"
    F = fiber(order, pt.base_ideal)
    rows = pt.point.ideal.rows
    return "(" + ", ".join(F.fmt(v) for v in rows) + ")" if rows else "(0)"


def _poset(args, A):
    order = make_order(A.ring, A)
    fibers = None
    if args.localize is None:
        if args.fiber:
            fibers = [_parse_fiber(order.base, t) for t in args.fiber]
        localize = None
    else:
        if args.fiber:
            raise DomainError("use either --localize or --fiber, not both")
        if isinstance(order.base, PolynomialRing):
            localize = parse_coefficient(order.base, args.localize)
        else:
            try:
                localize = int(args.localize)
            except ValueError:
                raise DomainError(f"cannot localize at {args.localize!r}") from None
    return order, spec_poset(order, fibers, localize=localize, generic=args.generic)


def cmd_spec(args):
    order, P = _poset(args, load_input(args))
    lines = []
    if args.format == "machine":
        for p in P.points:
            if p.closed:
                lines.append(f"point base={p.base_ideal.label()} N={p.N} r={p.r}")
            else:
                lines.append(f"generic label={p.label} qdim={p.qdim}")
        for i, p in enumerate(P.points):
            cl = ",".join(P.points[j].label for j in P.closure_of(i))
            lines.append(f"closure {p.label}={cl}")
        return lines
    lines.append(f"{len(P.points)} point(s)")
    for p in P.points:
        if p.closed:
            desc = f"closed over {p.base_ideal.label()}, kappa={p.point.kappa()}"
        else:
            desc = f"generic, residue dimension {p.qdim} over Q, center degree {p.center_degree}"
        lines.append(f"  {p.label}: {desc}")
        lines.append(f"      ideal {_ideal_text(order, p)}")
    lines.append("closures:")
    for i, p in enumerate(P.points):
        cl = ", ".join(P.points[j].label for j in P.closure_of(i))
        lines.append(f"  cl({p.label}) = {{{cl}}}")
    return lines


def cmd_neighborhood(args):
    _, P = _poset(args, load_input(args))
    U = smallest_neighborhood(P, args.point)
    labels = [p.label for p in U]
    if args.format == "machine":
        return [f"neighborhood {args.point}={','.join(labels)}"]
    return [f"U({args.point}) = {{{', '.join(labels)}}}"]


def cmd_zeta(args):
    A = load_input(args)
    if not args.D:
        raise DomainError("zeta needs a degree bound -D")
    order = make_order(A.ring, A)
    z = zeta_series(order, args.D, jobs=args.jobs)
    line = f"series D={z.D} coeffs={z}"
    if args.format == "machine":
        return [line]
    lines = [f"zeta in u = {z.q}^-s, truncated at u^{z.D}", line]
    if len(z.provenance) <= 12:
        for label, fs in z.provenance:
            parts = " ".join(f"(1-u^{f.degree})^-{f.multiplicity}" for f in fs)
            lines.append(f"  fiber {label}: {parts}")
    else:
        lines.append(f"  {len(z.provenance)} fibers")
    return lines


def cmd_dirichlet(args):
    A = load_input(args)
    if not args.N:
        raise DomainError("dirichlet needs a coefficient bound -N")
    order = make_order(A.ring, A)
    d = dirichlet_prefix(order, args.N, jobs=args.jobs)
    lines = []
    for p, fs in d.factors:
        for f in fs:
            lines.append(f"euler p={p} factor=(1-p^-{f.degree}s)^-{f.multiplicity}")
    lines.append(f"dirichlet N={d.N} coeffs={','.join(map(str, d.coeffs))}")
    if args.format == "machine":
        return lines
    return [f"local factors for primes up to {d.N}:"] + ["  " + x for x in lines[:-1]] + [lines[-1]]


def cmd_tensor(args):
    B, _ = field_algebra_of(args, load_input(args))
    C = _load(args.with_preset, args.with_file, args.base if args.with_preset else None)
    if isinstance(C, AlgMorphism):
        raise DomainError("--with-file must describe an algebra")
    if not C.ring.is_field:
        raise DomainError("the second factor must be over a field; pass a field --base")
    if C.ring != B.ring:
        raise DomainError("both factors must share the coefficient field")
    f, g = unit_map(B), unit_map(C)
    T = tensor(f, g)
    T2 = tensor(g, f)
    s, s2 = swap_iso(T, T2), swap_iso(T2, T)
    involution = s2.compose(s).is_identity()
    witness = naive_product_witness(T)
    naive = "holds" if witness is None else "fails"
    if args.format == "machine":
        return [f"tensor dim={T.algebra.dim}", f"swap involution={str(involution).lower()}", f"naive {naive}"]
    lines = [
        f"{B.dim} x {C.dim} over {B.field.name()}: tensor product of dimension {T.algebra.dim}",
        f"swap is an involution: {'yes' if involution else 'no'}",
        f"naive product rule: {naive}",
    ]
    return lines


def cmd_check_morphism(args):
    h = load_input(args, morphism_ok=True)
    if not isinstance(h, AlgMorphism):
        raise DomainError("check-morphism needs a morphism description ([source], [target], [map])")
    if not h.source.ring.is_field:
        raise DomainError("check-morphism works over a finite field")
    ok = procesi_check(h)
    lines = [
        f"morphism: verified ({h.source.dim} -> {h.target.dim} over {h.source.field.name()})",
        f"procesi: {str(ok).lower()}",
        f"rc: {str(rc_check(h)).lower()}",
    ]
    for i, pt in enumerate(max_two_sided_ideals(h.target), start=1):
        P = preimage(h, pt.ideal)
        t = prime_test(h.source, P)
        verdict = "prime" if t.prime else "NOT prime"
        lines.append(
            f"pullback of q{i} (dim {pt.ideal.dim}): dim {P.dim}, {verdict}"
            f" (quotient: {t.blocks} block(s), radical dim {t.radical_dim})"
        )
    return lines


COMMANDS = {
    "center": cmd_center,
    "radical": cmd_radical,
    "wedderburn": cmd_wedderburn,
    "points": cmd_points,
    "spec": cmd_spec,
    "zeta": cmd_zeta,
    "dirichlet": cmd_dirichlet,
    "tensor": cmd_tensor,
    "check-morphism": cmd_check_morphism,
    "neighborhood": cmd_neighborhood,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        lines = COMMANDS[args.command](args)
    except (DomainError, *DOMAIN_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(lines, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
