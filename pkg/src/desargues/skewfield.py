"""Exact arithmetic in pluggable skew fields.

Four backends are provided:

* ``Q``       the rationals,
* ``F:p``     the prime field of residues mod p,
* ``F:p^k``   the extension field F_p[x]/(f) for a fixed irreducible f,
* ``HQ``      Hamilton quaternions with rational components.

Finite skew fields are commutative (Wedderburn), so ``HQ`` is the only
noncommutative backend.  Every value is immutable and held in a canonical
form, so ``==`` is identity of canonical forms.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Optional

from .errors import DivisionByZero, FieldMismatch, LiteralError

MAX_FINITE_ORDER = 2**16

# monic irreducible moduli, coefficients low -> high
IRREDUCIBLE_TABLE = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (3, 2): (1, 0, 1),  # x^2 + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def _poly_mod(a: list, m: tuple, p: int) -> list:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over F_p."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def is_irreducible(poly: tuple, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(poly) - 1
    if k < 1 or poly[-1] % p == 0:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_mod(poly, low + (1,), p)):
                return False
    return True


def default_modulus(p: int, k: int) -> tuple:
    if (p, k) in IRREDUCIBLE_TABLE:
        return IRREDUCIBLE_TABLE[(p, k)]
    for low in itertools.product(range(p), repeat=k):
        cand = low + (1,)
        if low[0] and is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {k} over F_{p}")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """Which skew field K the scalars live in.

    ``kind`` is one of ``"Q"``, ``"F"`` (prime or extension field) and ``"HQ"``.
    For ``"F"`` with ``k > 1`` the ``modulus`` is the monic irreducible
    polynomial (low-to-high coefficients) defining F_p[x]/(modulus).
    """

    kind: str
    p: int = 0
    k: int = 1
    modulus: tuple = ()

    def __post_init__(self):
        if self.kind not in ("Q", "F", "HQ"):
            raise LiteralError(f"unknown field kind {self.kind!r}")
        if self.kind == "F":
            if not is_prime(self.p):
                raise LiteralError(f"{self.p} is not prime")
            if self.k < 1:
                raise LiteralError("extension degree must be >= 1")
            if self.p**self.k > MAX_FINITE_ORDER:
                raise LiteralError(f"fields of order > 2^16 are not supported")
            if self.k > 1:
                if not self.modulus:
                    object.__setattr__(self, "modulus", default_modulus(self.p, self.k))
                mod = tuple(c % self.p for c in self.modulus)
                if len(mod) != self.k + 1 or mod[-1] != 1 or not is_irreducible(mod, self.p):
                    raise LiteralError(f"{self.modulus} is not a monic irreducible of degree {self.k}")
                object.__setattr__(self, "modulus", mod)

    # -- constructors ---------------------------------------------------

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("F", p, 1)

    @classmethod
    def extension(cls, p: int, k: int, modulus: tuple = ()) -> "FieldSpec":
        return cls("F", p, k, tuple(modulus))

    @classmethod
    def quaternions(cls) -> "FieldSpec":
        return cls("HQ")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``Q``, ``HQ``, ``F:<p>`` or ``F:<p>^<k>``."""
        t = text.strip()
        if t == "Q":
            return cls.rationals()
        if t == "HQ":
            return cls.quaternions()
        m = re.fullmatch(r"F:(\d+)(?:\^(\d+))?", t)
        if not m:
            raise LiteralError(f"bad field spec {text!r}")
        return cls("F", int(m.group(1)), int(m.group(2) or 1))

    def __str__(self) -> str:
        if self.kind == "F":
            return f"F:{self.p}" if self.k == 1 else f"F:{self.p}^{self.k}"
        return self.kind

    # -- structure --------------------------------------------------------

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "F" else 0

    @property
    def order(self) -> Optional[int]:
        return self.p**self.k if self.kind == "F" else None

    @property
    def is_finite(self) -> bool:
        return self.kind == "F"

    @property
    def is_commutative(self) -> bool:
        return self.kind != "HQ"

    @cached_property
    def _cls(self):
        if self.kind == "Q":
            return Rational
        if self.kind == "HQ":
            return Quaternion
        return Residue if self.k == 1 else GFElement

    def zero(self) -> "Scalar":
        return self.from_int(0)

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, n: int) -> "Scalar":
        return self._cls._from_int(self, n)

    def basis(self) -> list:
        """A finite generating set used to decide centrality."""
        if self.kind == "HQ":
            return [self.parse_scalar(s) for s in ("1", "i", "j", "k")]
        return [self.one()]

    def elements(self) -> Iterator["Scalar"]:
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        if self.k == 1:
            for r in range(self.p):
                yield Residue(self, r)
        else:
            for coeffs in itertools.product(range(self.p), repeat=self.k):
                yield GFElement(self, coeffs)

    def random(self, rng: random.Random, nonzero: bool = False) -> "Scalar":
        while True:
            x = self._cls._random(self, rng)
            if not (nonzero and x.is_zero()):
                return x

    def parse_scalar(self, text: str) -> "Scalar":
        return self._cls._parse(self, text.replace(" ", ""))


class Scalar:
    """Element of a skew field.  Subclasses fix the payload representation."""

    __slots__ = ("spec", "_v")

    def __init__(self, spec: FieldSpec, v):
        self.spec = spec
        self._v = v

    # subclass hooks: _add, _mul, _neg, _inv, is_zero, __str__

    def _sub(self, other):
        return self._add(other._neg())

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatch(f"{self.spec} vs {other.spec}")
            return other
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(other)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._sub(other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._add(self._neg())

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._mul(other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._mul(self)

    def __neg__(self):
        return self._neg()

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in {self.spec}")
        return self._inv()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inv() ** (-n)
        result, base = self.spec.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._v == other._v and self.spec == other.spec
        if isinstance(other, int):
            return self == self.spec.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.kind, self._v))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"{type(self).__name__}({self.spec}, {self})"


class Rational(Scalar):
    """Payload ``(num, den)`` with den > 0 and gcd(num, den) = 1."""

    __slots__ = ()

    @classmethod
    def _from_int(cls, spec, n):
        return cls(spec, (n, 1))

    @classmethod
    def from_fraction(cls, spec, f) -> "Rational":
        f = Fraction(f)
        return cls(spec, (f.numerator, f.denominator))

    @classmethod
    def _random(cls, spec, rng):
        return cls.from_fraction(spec, Fraction(rng.randint(-12, 12), rng.randint(1, 6)))

    @classmethod
    def _parse(cls, spec, text):
        m = re.fullmatch(r"([+-]?\d+)(?:/(\d+))?", text)
        if not m or (m.group(2) and int(m.group(2)) == 0):
            raise LiteralError(f"bad rational literal {text!r}")
        return cls.from_fraction(spec, Fraction(int(m.group(1)), int(m.group(2) or 1)))

    @property
    def value(self) -> Fraction:
        return Fraction(*self._v)

    def _add(self, o):
        n1, d1 = self._v
        n2, d2 = o._v
        if d1 == d2 == 1:
            return Rational(self.spec, (n1 + n2, 1))
        n, d = n1 * d2 + n2 * d1, d1 * d2
        g = math.gcd(n, d)
        return Rational(self.spec, (n // g, d // g))

    def _sub(self, o):
        n2, d2 = o._v
        return self._add(Rational(self.spec, (-n2, d2)))

    def _mul(self, o):
        n1, d1 = self._v
        n2, d2 = o._v
        n, d = n1 * n2, d1 * d2
        g = math.gcd(n, d)
        return Rational(self.spec, (n // g, d // g))

    def _neg(self):
        return Rational(self.spec, (-self._v[0], self._v[1]))

    def _inv(self):
        n, d = self._v
        return Rational(self.spec, (d, n) if n > 0 else (-d, -n))

    def is_zero(self):
        return self._v[0] == 0

    def __str__(self):
        n, d = self._v
        return str(n) if d == 1 else f"{n}/{d}"


class Residue(Scalar):
    __slots__ = ()

    @classmethod
    def _from_int(cls, spec, n):
        return cls(spec, n % spec.p)

    @classmethod
    def _random(cls, spec, rng):
        return cls(spec, rng.randrange(spec.p))

    @classmethod
    def _parse(cls, spec, text):
        m = re.fullmatch(r"[+-]?\d+", text) or re.fullmatch(r"\[([+-]?\d+)\]", text)
        if not m:
            raise LiteralError(f"bad residue literal {text!r}")
        return cls(spec, int(m.group(1) if m.groups() else m.group(0)) % spec.p)

    def _add(self, o):
        return Residue(self.spec, (self._v + o._v) % self.spec.p)

    def _mul(self, o):
        return Residue(self.spec, (self._v * o._v) % self.spec.p)

    def _neg(self):
        return Residue(self.spec, -self._v % self.spec.p)

    def _inv(self):
        return Residue(self.spec, pow(self._v, -1, self.spec.p))

    def is_zero(self):
        return self._v == 0

    def __str__(self):
        return str(self._v)


@functools.cache
def _gf_tables(spec: FieldSpec):
    """Discrete log / antilog tables over a generator of the multiplicative group."""
    p, k, q = spec.p, spec.k, spec.p**spec.k
    one = (1,) + (0,) * (k - 1)

    def mul(a, b):
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return tuple(_poly_mod(prod, spec.modulus, p))

    for g in itertools.product(range(p), repeat=k):
        if not any(g):
            continue
        exp, x = [], one
        for _ in range(q - 1):
            exp.append(x)
            x = mul(x, g)
        if len(set(exp)) == q - 1:
            return exp, {v: i for i, v in enumerate(exp)}
    raise AssertionError("multiplicative group is cyclic")  # unreachable


class GFElement(Scalar):
    """Element of F_p[x]/(f); payload is the coefficient tuple, low -> high."""

    __slots__ = ()

    @classmethod
    def _from_int(cls, spec, n):
        return cls(spec, (n % spec.p,) + (0,) * (spec.k - 1))

    @classmethod
    def _random(cls, spec, rng):
        return cls(spec, tuple(rng.randrange(spec.p) for _ in range(spec.k)))

    @classmethod
    def _parse(cls, spec, text):
        if re.fullmatch(r"[+-]?\d+", text):
            return cls._from_int(spec, int(text))
        m = re.fullmatch(r"\[([+-]?\d+(?:,[+-]?\d+)*)\]", text)
        if not m:
            raise LiteralError(f"bad extension-field literal {text!r}")
        coeffs = [int(c) for c in m.group(1).split(",")]
        if len(coeffs) > spec.k:
            raise LiteralError(f"{text!r} has more than {spec.k} coefficients")
        coeffs += [0] * (spec.k - len(coeffs))
        return cls(spec, tuple(c % spec.p for c in coeffs))

    def _add(self, o):
        p = self.spec.p
        return GFElement(self.spec, tuple((a + b) % p for a, b in zip(self._v, o._v)))

    def _mul(self, o):
        if self.is_zero() or o.is_zero():
            return self.spec.zero()
        exp, log = _gf_tables(self.spec)
        return GFElement(self.spec, exp[(log[self._v] + log[o._v]) % len(exp)])

    def _neg(self):
        p = self.spec.p
        return GFElement(self.spec, tuple(-a % p for a in self._v))

    def _inv(self):
        exp, log = _gf_tables(self.spec)
        return GFElement(self.spec, exp[-log[self._v] % len(exp)])

    def is_zero(self):
        return not any(self._v)

    def __str__(self):
        return "[" + ",".join(str(c) for c in self._v) + "]"


def _qnorm(a, b, c, d, den):
    g = math.gcd(a, b, c, d, den)
    if den < 0:
        g = -g
    return (a // g, b // g, c // g, d // g, den // g)


_QTERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?([ijk]?)")


class Quaternion(Scalar):
    """a + bi + cj + dk with rational a..d.

    Payload ``(a, b, c, d, den)`` of integers with den > 0 and
    gcd(a, b, c, d, den) = 1: a common-denominator form, in bijection with the
    quadruple of reduced fractions.
    """

    __slots__ = ()

    @classmethod
    def from_fractions(cls, spec, a, b, c, d) -> "Quaternion":
        fr = [Fraction(x) for x in (a, b, c, d)]
        den = math.lcm(*(f.denominator for f in fr))
        return cls(spec, _qnorm(*(int(f * den) for f in fr), den))

    @classmethod
    def _from_int(cls, spec, n):
        return cls(spec, (n, 0, 0, 0, 1))

    @classmethod
    def _random(cls, spec, rng):
        return cls.from_fractions(
            spec, *(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(4))
        )

    @classmethod
    def _parse(cls, spec, text):
        if not text:
            raise LiteralError("empty quaternion literal")
        comps = dict.fromkeys("1ijk", Fraction(0))
        pos = 0
        while pos < len(text):
            m = _QTERM.match(text, pos)
            sign, num, unit = m.groups()
            if m.end() == pos or (num is None and not unit) or (pos > 0 and not sign):
                raise LiteralError(f"bad quaternion literal {text!r}")
            if num is not None and "/" in num and int(num.split("/")[1]) == 0:
                raise LiteralError(f"zero denominator in {text!r}")
            coeff = Fraction(num) if num is not None else Fraction(1)
            comps[unit or "1"] += -coeff if sign == "-" else coeff
            pos = m.end()
        return cls.from_fractions(spec, *comps.values())

    @property
    def components(self) -> tuple:
        a, b, c, d, den = self._v
        return tuple(Fraction(x, den) for x in (a, b, c, d))

    def _add(self, o):
        a1, b1, c1, d1, e1 = self._v
        a2, b2, c2, d2, e2 = o._v
        return Quaternion(
            self.spec,
            _qnorm(a1 * e2 + a2 * e1, b1 * e2 + b2 * e1, c1 * e2 + c2 * e1, d1 * e2 + d2 * e1, e1 * e2),
        )

    def _mul(self, o):
        a1, b1, c1, d1, e1 = self._v
        a2, b2, c2, d2, e2 = o._v
        return Quaternion(
            self.spec,
            _qnorm(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
                e1 * e2,
            ),
        )

    def _neg(self):
        a, b, c, d, e = self._v
        return Quaternion(self.spec, (-a, -b, -c, -d, e))

    def _inv(self):
        # conjugate over norm
        a, b, c, d, e = self._v
        n = a * a + b * b + c * c + d * d
        return Quaternion(self.spec, _qnorm(a * e, -b * e, -c * e, -d * e, n))

    def is_zero(self):
        return self._v[0] == self._v[1] == self._v[2] == self._v[3] == 0

    def __str__(self):
        out = []
        for coeff, unit in zip(self.components, ("", "i", "j", "k")):
            if coeff == 0:
                continue
            if unit and abs(coeff) == 1:
                text = "-" if coeff < 0 else ""
            else:
                text = str(coeff)
            if out and not text.startswith("-"):
                text = "+" + text
            out.append(text + unit)
        return "".join(out) or "0"


# -- operations on the field ---------------------------------------------


def field_arith(op: str, a: Scalar, b: Optional[Scalar] = None) -> Scalar:
    """Dispatch ``add``/``neg``/``mul``/``inv`` by name."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown op {op!r}")


def characteristic(spec: FieldSpec) -> int:
    return spec.characteristic


def centralizer_contains(p: Scalar, k: Scalar) -> bool:
    """Whether ``k`` lies in the centralizer of ``p``, i.e. pk = kp."""
    return p * k == k * p


def is_central(a: Scalar) -> bool:
    # commuting with a generating set suffices by bilinearity
    if a.spec.is_commutative:
        return True
    return all(centralizer_contains(a, g) for g in a.spec.basis())


def conjugate(p: Scalar, q: Scalar) -> Scalar:
    """q^-1 p q."""
    return q.inv() * p * q
