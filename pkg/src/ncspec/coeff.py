"""Exact coefficient arithmetic: finite fields, rationals, and the base rings
Z, F_q and F_q[T] together with their maximal ideals.

Field elements are plain Python values so they hash and compare cheaply:
ints for prime fields, tuples of base-field elements (low degree first)
for extensions, :class:`fractions.Fraction` for the rationals.
Polynomials over a field are tuples of coefficients, low degree first,
with no trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence


class CoefficientError(ValueError):
    """Raised for invalid field or base-ring parameters."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``|n|`` by trial division."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def mobius(n: int) -> int:
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def necklace_count(q: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree ``d`` over F_q."""
    total = sum(mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


class PrimeField:
    """F_p with elements represented by ints in ``range(p)``."""

    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise CoefficientError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.order = p
        self.degree = 1
        self.zero = 0
        self.one = 1
        self.base = None
        self.modulus = (0, 1)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __reduce__(self):
        return (PrimeField, (self.p,))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_int(self, n: int):
        return n % self.p

    def is_zero(self, a) -> bool:
        return a == 0

    def elements(self):
        return range(self.p)

    def key(self, a) -> int:
        return a

    def from_key(self, n: int):
        return n % self.p

    def coords(self, a) -> list[int]:
        return [a]

    def from_coords(self, c: Sequence[int]):
        return c[0] % self.p

    def prime_basis(self) -> list:
        return [1]

    def fmt(self, a) -> str:
        return str(a)

    def name(self) -> str:
        return f"GF({self.p})"


class ExtensionField:
    """``base[w]/(modulus)`` with ``modulus`` monic irreducible over ``base``.

    Elements are tuples of base elements of length ``k``.  Towers are allowed
    (the base may itself be an extension), which is how residue fields of
    GF(p^k)[T] at irreducible f are modelled.
    """

    is_field = True

    def __init__(self, base, modulus: Sequence, *, check: bool = True):
        modulus = poly_trim(base, tuple(modulus))
        k = len(modulus) - 1
        if k < 1:
            raise CoefficientError("extension modulus must have degree >= 1")
        if modulus[-1] != base.one:
            raise CoefficientError("extension modulus must be monic")
        if check and not poly_is_irreducible(base, modulus):
            raise CoefficientError(f"{poly_fmt(base, modulus)} is reducible over {base!r}")
        self.base = base
        self.modulus = modulus
        self.k = k
        self.char = base.char
        self.order = base.order**k
        self.degree = base.degree * k
        self.zero = (base.zero,) * k
        self.one = (base.one,) + (base.zero,) * (k - 1)
        self._prime = isinstance(base, PrimeField)
        # reduction rule: w^k = -sum_{i<k} modulus[i] w^i
        self._tail = tuple(base.neg(c) for c in modulus[:k])

    def __repr__(self):
        return f"GF({self.base!r}[w]/({poly_fmt(self.base, self.modulus, 'w')}))"

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ext", self.base, self.modulus))

    def __reduce__(self):
        return (_rebuild_extension, (self.base, self.modulus))

    def add(self, a, b):
        if self._prime:
            p = self.char
            return tuple((x + y) % p for x, y in zip(a, b))
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        if self._prime:
            p = self.char
            return tuple((x - y) % p for x, y in zip(a, b))
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        if self._prime:
            p = self.char
            return tuple(-x % p for x in a)
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        k = self.k
        if self._prime:
            p = self.char
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            prod[i + j] += x * y
            tail = self._tail
            for d in range(2 * k - 2, k - 1, -1):
                c = prod[d] % p
                if c:
                    off = d - k
                    for i, t in enumerate(tail):
                        if t:
                            prod[off + i] += c * t
            return tuple(c % p for c in prod[:k])
        B = self.base
        zero = B.zero
        prod = [zero] * (2 * k - 1)
        for i, x in enumerate(a):
            if x != zero:
                for j, y in enumerate(b):
                    if y != zero:
                        prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c != zero:
                off = d - k
                for i, t in enumerate(self._tail):
                    prod[off + i] = B.add(prod[off + i], B.mul(c, t))
        return tuple(prod[:k])

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        # extended Euclid in base[w]
        B = self.base
        r0, r1 = self.modulus, poly_trim(B, a)
        s0, s1 = (), (B.one,)
        while r1:
            q, r = poly_divmod(B, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(B, s0, poly_mul(B, q, s1))
        # r0 is a nonzero constant
        c = B.inv(r0[0])
        s = poly_scale(B, s0, c)
        return self._pad(s)

    def _pad(self, poly):
        return tuple(poly) + (self.base.zero,) * (self.k - len(poly))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def from_int(self, n: int):
        return (self.base.from_int(n),) + (self.base.zero,) * (self.k - 1)

    def from_base(self, c):
        return (c,) + (self.base.zero,) * (self.k - 1)

    def from_poly(self, poly):
        """Class of a polynomial over the base in this field."""
        return self._pad(poly_mod(self.base, poly_trim(self.base, tuple(poly)), self.modulus))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def generator(self):
        """The class of ``w``."""
        if self.k == 1:
            return self.from_base(self.base.neg(self.modulus[0]))
        return (self.base.zero, self.base.one) + (self.base.zero,) * (self.k - 2)

    def elements(self) -> Iterator:
        return (self.from_key(n) for n in range(self.order))

    def key(self, a) -> int:
        bq = self.base.order
        n = 0
        for c in reversed(a):
            n = n * bq + self.base.key(c)
        return n

    def from_key(self, n: int):
        bq = self.base.order
        out = []
        for _ in range(self.k):
            n, r = divmod(n, bq)
            out.append(self.base.from_key(r))
        return tuple(out)

    def coords(self, a) -> list[int]:
        out: list[int] = []
        for c in a:
            out.extend(self.base.coords(c))
        return out

    def from_coords(self, c: Sequence[int]):
        m = self.base.degree
        return tuple(self.base.from_coords(c[i * m : (i + 1) * m]) for i in range(self.k))

    def prime_basis(self) -> list:
        """F_p-basis matching :meth:`coords` ordering."""
        out = []
        for i in range(self.k):
            for b in self.base.prime_basis():
                v = [self.base.zero] * self.k
                v[i] = b
                out.append(tuple(v))
        return out

    def fmt(self, a) -> str:
        return poly_fmt(self.base, poly_trim(self.base, a), "w")

    def name(self) -> str:
        return f"GF({self.char}^{self.degree})"


def _rebuild_extension(base, modulus):
    return ExtensionField(base, modulus, check=False)


class RationalField:
    """Q via :class:`fractions.Fraction`."""

    is_field = True
    char = 0
    order = None
    degree = None
    base = None

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def pow(self, a, e):
        return Fraction(a) ** e

    def from_int(self, n: int):
        return Fraction(n)

    def is_zero(self, a) -> bool:
        return a == 0

    def key(self, a):
        return (a.numerator, a.denominator)

    def fmt(self, a) -> str:
        return str(a)

    def name(self) -> str:
        return "QQ"


QQ = RationalField()


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1):
    """GF(p^k) with the smallest monic irreducible defining polynomial.

    Candidates are compared lexicographically starting from the constant
    coefficient.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise CoefficientError(f"{p} is not prime")
    if k < 1:
        raise CoefficientError(f"extension degree must be >= 1, got {k}")
    Fp = PrimeField(p)
    if k == 1:
        return Fp
    for n in range(p**k):
        low = [(n // p ** (k - 1 - i)) % p for i in range(k)]
        f = tuple(low) + (1,)
        if low[0] and poly_is_irreducible(Fp, f):
            return ExtensionField(Fp, f, check=False)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------
# dense univariate polynomials over a field
# ---------------------------------------------------------------------------


def poly_trim(F, a: tuple) -> tuple:
    zero = F.zero
    n = len(a)
    while n and a[n - 1] == zero:
        n -= 1
    return a[:n] if n != len(a) else a


def poly_deg(a: tuple) -> int:
    return len(a) - 1


def poly_add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return poly_trim(F, tuple(out))


def poly_neg(F, a):
    return tuple(F.neg(c) for c in a)


def poly_sub(F, a, b):
    return poly_add(F, a, poly_neg(F, b))


def poly_scale(F, a, c):
    if c == F.zero:
        return ()
    return poly_trim(F, tuple(F.mul(x, c) for x in a))


def poly_mul(F, a, b):
    if not a or not b:
        return ()
    zero = F.zero
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x != zero:
            for j, y in enumerate(b):
                if y != zero:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(F, tuple(out))


def poly_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    if len(a) <= db:
        return (), poly_trim(F, tuple(a))
    q = [F.zero] * (len(a) - db)
    for d in range(len(a) - 1, db - 1, -1):
        c = a[d]
        if c != F.zero:
            c = F.mul(c, lead_inv)
            q[d - db] = c
            for i, y in enumerate(b):
                a[d - db + i] = F.sub(a[d - db + i], F.mul(c, y))
    return poly_trim(F, tuple(q)), poly_trim(F, tuple(a[:db]))


def poly_mod(F, a, b):
    return poly_divmod(F, a, b)[1]


def poly_monic(F, a):
    if not a:
        return a
    return poly_scale(F, a, F.inv(a[-1]))


def poly_gcd(F, a, b):
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_powmod(F, a, e: int, m):
    result = (F.one,)
    a = poly_mod(F, a, m)
    while e:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, a), m)
        e >>= 1
        if e:
            a = poly_mod(F, poly_mul(F, a, a), m)
    return result


def poly_eval(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_is_irreducible(F, f) -> bool:
    """Rabin's test over a finite field ``F``."""
    f = poly_trim(F, tuple(f))
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    q = F.order
    X = (F.zero, F.one)
    f = poly_monic(F, f)

    def frob_power(m):
        x = X
        for _ in range(m):
            x = poly_powmod(F, x, q, f)
        return x

    if frob_power(d) != poly_mod(F, X, f):
        return False
    for r in prime_factors(d):
        h = poly_sub(F, frob_power(d // r), X)
        if poly_gcd(F, h, f) != (F.one,):
            return False
    return True


def poly_key(F, a) -> tuple:
    """Sort key: degree first, then coefficients from the top down."""
    return (len(a),) + tuple(F.key(c) for c in reversed(a))


def poly_fmt(F, a, var: str = "T") -> str:
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == F.zero:
            continue
        cs = F.fmt(c)
        if isinstance(F, ExtensionField):
            cs = f"({cs})" if ("+" in cs or "-" in cs[1:]) else cs
        if i == 0:
            terms.append(cs)
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == F.one else f"{cs}*{mono}")
    return "+".join(terms)


def monic_polys(F, d: int) -> Iterator[tuple]:
    """All monic polynomials of degree ``d`` in :func:`poly_key` order."""
    elems = [F.from_key(n) for n in range(F.order)]
    for high in itertools.product(elems, repeat=d):
        yield tuple(reversed(high)) + (F.one,)


@lru_cache(maxsize=None)
def irreducibles(F, d: int) -> tuple:
    """Ordered tuple of all monic irreducibles of degree ``d`` over ``F``.

    Built by sieving: every reducible monic of degree ``d`` is a monic
    irreducible of degree ``e <= d/2`` times a monic of degree ``d - e``.
    """
    if d < 1:
        raise CoefficientError("degree must be >= 1")
    if d == 1:
        return tuple(monic_polys(F, 1))
    reducible = set()
    for e in range(1, d // 2 + 1):
        for g in irreducibles(F, e):
            for h in monic_polys(F, d - e):
                reducible.add(poly_mul(F, g, h))
    return tuple(f for f in monic_polys(F, d) if f not in reducible)


# ---------------------------------------------------------------------------
# base rings
# ---------------------------------------------------------------------------


class IntegerRing:
    """Z as a coefficient ring for orders."""

    is_field = False
    char = 0
    zero = 0
    one = 1

    def __repr__(self):
        return "Z"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n: int):
        return n

    def is_zero(self, a) -> bool:
        return a == 0

    def key(self, a):
        return a

    def fmt(self, a) -> str:
        return str(a)

    def name(self) -> str:
        return "Z"

    def generators(self):
        return [1]


ZZ = IntegerRing()


class PolynomialRing:
    """F[T] over a finite field ``F``; elements are trimmed coefficient tuples."""

    is_field = False

    def __init__(self, field):
        self.field = field
        self.char = field.char
        self.zero = ()
        self.one = (field.one,)

    def __repr__(self):
        return f"{self.field.name()}[T]"

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.field == self.field

    def __hash__(self):
        return hash(("poly", self.field))

    def add(self, a, b):
        return poly_add(self.field, a, b)

    def sub(self, a, b):
        return poly_sub(self.field, a, b)

    def neg(self, a):
        return poly_neg(self.field, a)

    def mul(self, a, b):
        return poly_mul(self.field, a, b)

    def from_int(self, n: int):
        return poly_trim(self.field, (self.field.from_int(n),))

    def from_field(self, c):
        return poly_trim(self.field, (c,))

    def is_zero(self, a) -> bool:
        return not a

    def key(self, a):
        return poly_key(self.field, a)

    def fmt(self, a) -> str:
        return poly_fmt(self.field, a)

    def name(self) -> str:
        return repr(self)

    @property
    def T(self):
        return (self.field.zero, self.field.one)

    def generators(self):
        """Ring generators over the prime ring: T and a generator of F."""
        F = self.field
        gens = [self.T]
        if isinstance(F, ExtensionField):
            gens.append(self.from_field(F.generator()))
        return gens


@dataclass(frozen=True)
class BaseMaxIdeal:
    """A maximal ideal of a base ring with finite residue field.

    ``generator`` is a prime (base Z), a monic irreducible (base F[T]) or
    ``None`` (the zero ideal of a field base).
    """

    base: object
    generator: object
    norm: int

    @property
    def degree(self) -> int:
        """Residue degree over the prime-field-or-F_q the base is built on."""
        if isinstance(self.base, PolynomialRing):
            return len(self.generator) - 1
        return 1

    @property
    def characteristic(self) -> int:
        if isinstance(self.base, IntegerRing):
            return self.generator
        return self.base.char

    def residue_field(self):
        return residue_field(self)

    def reduce(self, x):
        return reduce_to_residue(self, x)

    def label(self) -> str:
        base = self.base
        if isinstance(base, IntegerRing):
            return str(self.generator)
        if isinstance(base, PolynomialRing):
            return poly_fmt(base.field, self.generator)
        return "0"

    def sort_key(self):
        base = self.base
        if isinstance(base, PolynomialRing):
            return (self.norm, poly_key(base.field, self.generator))
        return (self.norm, self.generator if self.generator is not None else 0)


def base_field_of(base):
    """The finite field F for bases F and F[T]; ``None`` for Z."""
    if isinstance(base, PolynomialRing):
        return base.field
    if isinstance(base, IntegerRing):
        return None
    return base


@lru_cache(maxsize=4096)
def residue_field(m: BaseMaxIdeal):
    base = m.base
    if isinstance(base, IntegerRing):
        return PrimeField(m.generator)
    if isinstance(base, PolynomialRing):
        F = base.field
        if len(m.generator) == 2:
            return F
        return ExtensionField(F, m.generator, check=False)
    return base


def reduce_to_residue(m: BaseMaxIdeal, x):
    base = m.base
    if isinstance(base, IntegerRing):
        return x % m.generator
    if isinstance(base, PolynomialRing):
        F = base.field
        f = m.generator
        if len(f) == 2:
            root = F.neg(f[0])
            return poly_eval(F, x, root)
        return residue_field(m).from_poly(x)
    return x


def make_max_ideal(base, generator=None) -> BaseMaxIdeal:
    """Validate and wrap a maximal ideal of ``base``."""
    if isinstance(base, IntegerRing):
        if not isinstance(generator, int) or not is_prime(generator):
            raise CoefficientError(f"{generator} is not a prime")
        return BaseMaxIdeal(base, generator, generator)
    if isinstance(base, PolynomialRing):
        F = base.field
        f = poly_monic(F, poly_trim(F, tuple(generator)))
        if not poly_is_irreducible(F, f):
            raise CoefficientError(f"{poly_fmt(F, f)} is not irreducible over {F.name()}")
        return BaseMaxIdeal(base, f, F.order ** (len(f) - 1))
    if generator not in (None, 0, ()):
        raise CoefficientError("a field base has only the zero ideal")
    return BaseMaxIdeal(base, None, base.order)


def base_max_ideals(base, bound: int) -> Iterator[BaseMaxIdeal]:
    """Maximal ideals of ``base`` in increasing norm.

    ``bound`` caps the prime for Z and the degree for F[T]; a field base has
    the zero ideal only.
    """
    if bound < 1:
        raise CoefficientError("bound must be >= 1")
    if isinstance(base, IntegerRing):
        for p in primes_up_to(bound):
            yield BaseMaxIdeal(base, p, p)
    elif isinstance(base, PolynomialRing):
        F = base.field
        for d in range(1, bound + 1):
            for f in irreducibles(F, d):
                yield BaseMaxIdeal(base, f, F.order**d)
    else:
        yield BaseMaxIdeal(base, None, base.order)
