"""Independent reference arithmetic for each backend.

None of this goes through the package's arithmetic: rationals use
``fractions``, prime fields use plain modular ints, extension fields use
schoolbook polynomial products with brute-force inverses, and quaternions
use sympy.
"""

from fractions import Fraction
from functools import lru_cache
import itertools

from sympy import Rational
from sympy.algebras.quaternion import Quaternion as SQ

from desargues.skewfield import FieldSpec

BACKENDS = ["Q", "F:2", "F:3", "F:5", "F:2^2", "HQ"]


def to_oracle(x):
    spec = x.spec
    if spec.kind == "Q":
        return Fraction(str(x))
    if spec.kind == "HQ":
        return SQ(*(Rational(c.numerator, c.denominator) for c in x.components))
    if spec.k == 1:
        return int(str(x))
    return tuple(int(c) for c in str(x).strip("[]").split(","))


def from_oracle(spec: FieldSpec, v):
    if spec.kind == "Q":
        return spec.parse_scalar(str(v))
    if spec.kind == "HQ":
        comps = [Fraction(str(c)) for c in (v.a, v.b, v.c, v.d)]
        text = "".join(f"{'+' if c >= 0 else ''}{c}{u}" for c, u in zip(comps, ["", "i", "j", "k"]))
        return spec.parse_scalar(text)
    if spec.k == 1:
        return spec.parse_scalar(str(v % spec.p))
    return spec.parse_scalar("[" + ",".join(map(str, v)) + "]")


def _poly_mul(spec, a, b):
    p, k, mod = spec.p, spec.k, spec.modulus
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            for t in range(k + 1):
                prod[deg - k + t] = (prod[deg - k + t] - c * mod[t]) % p
    return tuple(prod[:k])


@lru_cache(maxsize=None)
def _gf_inverse_table(spec):
    one = (1,) + (0,) * (spec.k - 1)
    els = list(itertools.product(range(spec.p), repeat=spec.k))
    return {a: b for a in els for b in els if _poly_mul(spec, a, b) == one}


def oracle(op, spec, a, b=None):
    """Compute ``op`` on oracle values; ``sub`` is a - b and ``ldiv`` is b^-1 a."""
    if spec.kind == "F" and spec.k > 1:
        p = spec.p
        add = lambda x, y: tuple((u + v) % p for u, v in zip(x, y))
        neg = lambda x: tuple((-u) % p for u in x)
        mul = lambda x, y: _poly_mul(spec, x, y)
        inv = lambda x: _gf_inverse_table(spec)[x]
    elif spec.kind == "F":
        p = spec.p
        add = lambda x, y: (x + y) % p
        neg = lambda x: (-x) % p
        mul = lambda x, y: (x * y) % p
        inv = lambda x: pow(x, p - 2, p)
    else:
        add = lambda x, y: x + y
        neg = lambda x: -x
        mul = lambda x, y: x * y
        inv = (lambda x: 1 / x) if spec.kind == "Q" else (lambda x: x.inverse())
    if op == "add":
        return add(a, b)
    if op == "neg":
        return neg(a)
    if op == "mul":
        return mul(a, b)
    if op == "inv":
        return inv(a)
    if op == "sub":
        return add(a, neg(b))
    if op == "ldiv":
        return mul(inv(b), a)
    raise ValueError(op)


def check_op(op, a, b=None):
    """Oracle result of ``op`` lifted back into the package's scalars."""
    spec = a.spec
    ob = to_oracle(b) if b is not None else None
    return from_oracle(spec, oracle(op, spec, to_oracle(a), ob))
