"""Text descriptions of algebras and morphisms.

An algebra file looks like::

    base GF(5)[T]
    basis 1 beta alpha alpha_beta
    mul beta beta = T*beta - 1
    mul alpha alpha = 1

The first basis label is the unit.  Coefficients are integers, fractions
(inverted modulo p), or polynomial expressions in ``T`` and, over
``GF(p^k)`` with ``k > 1``, the field generator ``w``.  Terms are separated
by `` + `` or `` - `` with surrounding spaces; a term is ``coeff*label``, a
bare label, or a bare coefficient (a multiple of the unit).  Omitted products
are zero.  ``#`` starts a comment.

A morphism file holds two algebra sections and a map section::

    [source]
    base GF(3)
    ...
    [target]
    ...
    [map]
    e1 -> E11
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .algebra import AlgebraError, SCAlgebra, build
from .coeff import (
    ZZ,
    CoefficientError,
    ExtensionField,
    IntegerRing,
    PolynomialRing,
    PrimeField,
    make_field,
    poly_fmt,
    poly_trim,
)
from .procesi import AlgMorphism, MorphismError, make_morphism


class DescriptionError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


_T, _W = sympy.symbols("T w")
_TRANSFORMS = standard_transformations + (convert_xor,)
_BASE_RE = re.compile(r"^(?:Z|GF\((\d+)(?:\^(\d+))?\)(\[T\])?)$")


def parse_base(text: str):
    m = _BASE_RE.match(text.strip())
    if not m:
        raise CoefficientError(f"unknown base {text.strip()!r}")
    if text.strip() == "Z":
        return ZZ
    p, k, poly = int(m.group(1)), int(m.group(2) or 1), m.group(3)
    F = make_field(p, k)
    return PolynomialRing(F) if poly else F


def base_name(ring) -> str:
    if isinstance(ring, IntegerRing):
        return "Z"
    F = ring.field if isinstance(ring, PolynomialRing) else ring
    if isinstance(F, PrimeField):
        name = f"GF({F.p})"
    elif isinstance(F, ExtensionField) and F == make_field(F.char, F.degree):
        name = f"GF({F.char}^{F.degree})"
    else:
        raise CoefficientError(f"{ring!r} has no textual base name")
    return name + ("[T]" if isinstance(ring, PolynomialRing) else "")


def _mod_int(F, c: Fraction):
    p = F.char
    if c.denominator % p == 0:
        raise CoefficientError(f"denominator {c.denominator} is not invertible mod {p}")
    return F.from_int(c.numerator * pow(c.denominator, -1, p) % p)


def parse_coefficient(ring, text: str):
    """Parse ``text`` as an element of ``ring``."""
    try:
        expr = parse_expr(text, local_dict={"T": _T, "w": _W}, transformations=_TRANSFORMS)
    except Exception as exc:  # sympy raises a zoo of exception types here
        raise CoefficientError(f"cannot parse coefficient {text!r}") from exc
    allowed = set()
    if isinstance(ring, PolynomialRing):
        allowed.add(_T)
        F = ring.field
    else:
        F = ring
    if isinstance(F, ExtensionField):
        allowed.add(_W)
    extra = expr.free_symbols - allowed
    if extra:
        raise CoefficientError(f"unexpected symbol {sorted(map(str, extra))[0]!r} in {text!r}")
    poly = sympy.Poly(expr, _T, _W, domain="QQ")
    if isinstance(ring, IntegerRing):
        c = Fraction(str(expr)) if expr.is_Rational else None
        if c is None or c.denominator != 1:
            raise CoefficientError(f"{text!r} is not an integer")
        return int(c)
    # group by power of T, build field elements from powers of w
    by_t: dict[int, object] = {}
    for (i, j), c in poly.terms():
        c = _mod_int(F.base if isinstance(F, ExtensionField) else F, Fraction(int(c.p), int(c.q)))
        if isinstance(F, ExtensionField):
            mono = F.from_poly((F.base.zero,) * j + (c,))
        else:
            mono = c
        by_t[i] = F.add(by_t.get(i, F.zero), mono)
    if not isinstance(ring, PolynomialRing):
        return by_t.get(0, F.zero)
    deg = max(by_t, default=-1)
    return poly_trim(F, tuple(by_t.get(i, F.zero) for i in range(deg + 1)))


def format_coefficient(ring, c) -> str:
    if isinstance(ring, PolynomialRing):
        return poly_fmt(ring.field, c)
    return ring.fmt(c)


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------


@dataclass
class _Line:
    number: int
    text: str


def _strip(lines) -> list[_Line]:
    out = []
    for i, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].rstrip()
        if text.strip():
            out.append(_Line(i, text))
    return out


def _split_terms(rhs: str) -> list[tuple[int, str]]:
    """Split at `` + `` / `` - `` outside parentheses; returns (sign, term)."""
    rhs = rhs.strip()
    sign = 1
    if rhs.startswith("- "):
        sign, rhs = -1, rhs[2:]
    out, depth, start = [], 0, 0
    i = 0
    while i < len(rhs):
        ch = rhs[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and 0 < i < len(rhs) - 1 and rhs[i - 1] == " " and rhs[i + 1] == " ":
            out.append((sign, rhs[start:i].strip()))
            sign = 1 if ch == "+" else -1
            start = i + 1
        i += 1
    out.append((sign, rhs[start:].strip()))
    return out


def _parse_rhs(ring, labels: dict, rhs: str, line: int, column: int) -> dict:
    terms: dict[int, object] = {}
    if rhs.strip() == "0" and "0" not in labels:
        return terms
    for sign, term in _split_terms(rhs):
        if not term:
            raise DescriptionError("empty term", line, column)
        if term.startswith("-") and term[1:] in labels:
            sign, term = -sign, term[1:]
        if "*" in term:
            coeff_text, label = term.rsplit("*", 1)
            label = label.strip()
            try:
                c = parse_coefficient(ring, coeff_text.strip())
            except CoefficientError as exc:
                raise DescriptionError(str(exc), line, column) from None
        elif term in labels:
            label, c = term, ring.one
        else:
            # a bare coefficient multiplies the unit
            label = next(iter(labels))
            try:
                c = parse_coefficient(ring, term)
            except CoefficientError:
                raise DescriptionError(f"unknown basis label {term!r}", line, column) from None
        if label not in labels:
            raise DescriptionError(f"unknown basis label {label!r}", line, column)
        if sign < 0:
            c = ring.neg(c)
        k = labels[label]
        terms[k] = ring.add(terms.get(k, ring.zero), c)
    return {k: c for k, c in terms.items() if not ring.is_zero(c)}


def _parse_algebra_lines(lines: list[_Line], start_line: int = 1) -> SCAlgebra:
    if not lines:
        raise DescriptionError("empty description", start_line)
    first = lines[0]
    head = first.text.split(None, 1)
    if head[0] != "base" or len(head) < 2:
        raise DescriptionError("expected 'base <ring>'", first.number, 1)
    try:
        ring = parse_base(head[1])
    except CoefficientError as exc:
        raise DescriptionError(str(exc), first.number, first.text.index(head[1]) + 1) from None
    if len(lines) < 2 or lines[1].text.split()[0] != "basis":
        n = lines[1].number if len(lines) > 1 else first.number + 1
        raise DescriptionError("expected 'basis <unit> <label> ...'", n, 1)
    basis_line = lines[1]
    labels = basis_line.text.split()[1:]
    if not labels:
        raise DescriptionError("basis is empty", basis_line.number)
    if len(set(labels)) != len(labels):
        raise DescriptionError("duplicate basis label", basis_line.number)
    index = {lab: i for i, lab in enumerate(labels)}
    products: dict[tuple[int, int], dict] = {}
    for ln in lines[2:]:
        m = re.match(r"^\s*mul\s+(\S+)\s+(\S+)\s*=(.*)$", ln.text)
        if not m:
            raise DescriptionError("expected 'mul <a> <b> = <terms>'", ln.number, 1)
        a, b, rhs = m.group(1), m.group(2), m.group(3)
        for name, col in ((a, m.start(1)), (b, m.start(2))):
            if name not in index:
                raise DescriptionError(f"unknown basis label {name!r}", ln.number, col + 1)
        key = (index[a], index[b])
        if key in products:
            raise DescriptionError(f"product {a}*{b} given twice", ln.number, 1)
        products[key] = _parse_rhs(ring, index, rhs, ln.number, m.start(3) + 1)
    unit = tuple(ring.one if i == 0 else ring.zero for i in range(len(labels)))
    for i in range(len(labels)):
        e = {i: ring.one}
        if products.get((0, i), {}) != e or products.get((i, 0), {}) != e:
            raise DescriptionError(
                f"first basis label {labels[0]!r} is not a two-sided unit "
                f"(check its products with {labels[i]!r})",
                basis_line.number,
            )
    try:
        return build(ring, labels, products, unit)
    except AlgebraError as exc:
        raise DescriptionError(str(exc)) from None


def parse_algebra(text: str) -> SCAlgebra:
    return _parse_algebra_lines(_strip(text.splitlines()))


def serialize_algebra(A: SCAlgebra) -> str:
    ring = A.ring
    if A.unit != A.basis_vector(0):
        raise DescriptionError("the first basis vector must be the unit to serialize")
    out = [f"base {base_name(ring)}", "basis " + " ".join(A.labels)]
    for i in range(A.dim):
        for j in range(A.dim):
            entries = A.table[i][j]
            if not entries:
                continue
            out.append(f"mul {A.labels[i]} {A.labels[j]} = " + _format_terms(ring, A.labels, entries))
    return "\n".join(out) + "\n"


def _format_terms(ring, labels, entries) -> str:
    parts = []
    for k, c in entries:
        s = format_coefficient(ring, c)
        if any(ch in s for ch in "+-"):
            s = f"({s})"
        parts.append(labels[k] if c == ring.one else f"{s}*{labels[k]}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------


def _sections(lines: list[_Line]) -> dict[str, list[_Line]]:
    out: dict[str, list[_Line]] = {}
    current = None
    for ln in lines:
        m = re.match(r"^\s*\[(\w+)\]\s*$", ln.text)
        if m:
            current = m.group(1)
            if current not in ("source", "target", "map"):
                raise DescriptionError(f"unknown section [{current}]", ln.number, 1)
            if current in out:
                raise DescriptionError(f"section [{current}] repeated", ln.number, 1)
            out[current] = []
            continue
        if current is None:
            raise DescriptionError("expected a section header such as [source]", ln.number, 1)
        out[current].append(ln)
    for name in ("source", "target", "map"):
        if name not in out:
            raise DescriptionError(f"missing section [{name}]")
    return out


def parse_morphism(text: str) -> AlgMorphism:
    lines = _strip(text.splitlines())
    sec = _sections(lines)
    A = _parse_algebra_lines(sec["source"])
    B = _parse_algebra_lines(sec["target"])
    if A.ring != B.ring:
        raise DescriptionError("source and target bases differ")
    index = {lab: i for i, lab in enumerate(B.labels)}
    images: dict[int, tuple] = {}
    for ln in sec["map"]:
        m = re.match(r"^\s*(\S+)\s*->(.*)$", ln.text)
        if not m:
            raise DescriptionError("expected '<label> -> <terms>'", ln.number, 1)
        if m.group(1) not in A.labels:
            raise DescriptionError(f"unknown source label {m.group(1)!r}", ln.number, 1)
        i = A.labels.index(m.group(1))
        if i in images:
            raise DescriptionError(f"image of {m.group(1)!r} given twice", ln.number, 1)
        terms = _parse_rhs(B.ring, index, m.group(2), ln.number, m.start(2) + 1)
        images[i] = tuple(terms.get(k, B.ring.zero) for k in range(B.dim))
    missing = [A.labels[i] for i in range(A.dim) if i not in images]
    if missing:
        raise DescriptionError(f"no image given for {missing[0]!r}")
    try:
        return make_morphism(A, B, [images[i] for i in range(A.dim)])
    except MorphismError as exc:
        raise DescriptionError(str(exc)) from None


def serialize_morphism(h: AlgMorphism) -> str:
    B = h.target
    out = ["[source]", serialize_algebra(h.source).rstrip(), "[target]", serialize_algebra(B).rstrip(), "[map]"]
    for lab, img in zip(h.source.labels, h.images):
        entries = [(k, c) for k, c in enumerate(img) if not B.ring.is_zero(c)]
        out.append(f"{lab} -> " + (_format_terms(B.ring, B.labels, entries) if entries else "0"))
    return "\n".join(out) + "\n"


def is_morphism_text(text: str) -> bool:
    return any(ln.text.strip() == "[source]" for ln in _strip(text.splitlines()))


def load_description(path: str):
    """Parse an algebra or morphism file; errors carry the line number."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DescriptionError(f"cannot read {path}: {exc.strerror}") from None
    return parse_morphism(text) if is_morphism_text(text) else parse_algebra(text)
