"""Two- and three-point ratios on the line OI, their maps, and identity checks.

``ratio2(A, B) = B^-1 A`` and ``ratio3(A, B, C) = (B - C)^-1 (A - C)``, with
the distinguished value :data:`INFINITY` when the divisor vanishes and the
numerator does not.  Both have a geometric twin built from the incidence
constructions in :mod:`desargues.construct`.

The ``check_*`` functions evaluate families of identities exactly and return
:class:`Check` records.  Where a published statement and its derivation
disagree, both forms are evaluated and the record says which one holds; the
``status`` follows the form that holds in general (``resolved_form``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .construct import geo_left_div, geo_sub
from .errors import DegenerateInput, DivisionByZero, InfiniteInput, UndefinedRatio
from .plane import (
    LeftDilation,
    ParallelProjection,
    Point,
    Translation,
    Vertical,
    axis,
    collinear,
)
from .skewfield import Scalar


class _Infinity:
    """The infinite point.  It supports no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"


class _AllSolutions:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ALL_SOLUTIONS"

    def __str__(self):
        return "all"


INFINITY = _Infinity()
ALL_SOLUTIONS = _AllSolutions()

RatioValue = Union[Scalar, _Infinity]


def ratio2(A: Scalar, B: Scalar) -> RatioValue:
    """r(A:B) = B^-1 A."""
    if B.is_zero():
        if A.is_zero():
            raise UndefinedRatio("r(O:O) is undefined")
        return INFINITY
    return B.inv() * A


def ratio3(A: Scalar, B: Scalar, C: Scalar) -> RatioValue:
    """r(A,B;C) = (B - C)^-1 (A - C)."""
    if B == C:
        if A == C:
            raise UndefinedRatio("r(A,A;A) is undefined")
        return INFINITY
    return (B - C).inv() * (A - C)


def ratio2_geometric(A: Scalar, B: Scalar, aux: Optional[Point] = None) -> RatioValue:
    if B.is_zero():
        return ratio2(A, B)
    return geo_left_div(A, B, aux)[0]


def ratio3_geometric(A: Scalar, B: Scalar, C: Scalar, aux: Optional[Point] = None) -> RatioValue:
    if B == C:
        return ratio3(A, B, C)
    num = geo_sub(A, C, aux)[0]
    den = geo_sub(B, C, aux)[0]
    return geo_left_div(num, den, aux)[0]


def ratio2_inverse_point(R: RatioValue, B: Scalar) -> Scalar:
    """The X with r(X:B) = R."""
    if R is INFINITY:
        raise InfiniteInput("no point has ratio inf to a nonzero B")
    if B.is_zero():
        raise DivisionByZero("r(X:O) is never finite")
    return B * R


def ratio3_inverse_point(R: RatioValue, B: Scalar, C: Scalar) -> Scalar:
    """The X with r(X,B;C) = R, namely (B - C)R + C."""
    if R is INFINITY:
        raise InfiniteInput("no point has three-point ratio inf")
    if B == C:
        raise DegenerateInput("B = C")
    return (B - C) * R + C


@dataclass(frozen=True)
class LineEquation:
    """r_BC(X) = M X + N."""

    M: Scalar
    N: Scalar

    def __call__(self, X: Scalar) -> Scalar:
        return self.M * X + self.N


def line_equation_coeffs(B: Scalar, C: Scalar) -> LineEquation:
    if B == C:
        raise DegenerateInput("B = C")
    return LineEquation((B - C).inv(), (C - B).inv() * C)


def midpoint_solve(A: Scalar, B: Scalar):
    """The C with C + C = A + B.

    Returns None in characteristic 2 when A != B, and ALL_SOLUTIONS when
    A = B there (every C works).
    """
    spec = A.spec
    if spec.characteristic != 2:
        two = spec.one() + spec.one()
        return two.inv() * (A + B)
    return ALL_SOLUTIONS if A == B else None


# -- ratio maps -----------------------------------------------------------


@dataclass(frozen=True)
class TwoPointMap:
    """r_B(X) = r(X:B)."""

    B: Scalar

    def __post_init__(self):
        if self.B.is_zero():
            raise DegenerateInput("r_B needs B != O")

    def __call__(self, X):
        return ratio2(X, self.B)

    def inverse(self, R):
        return ratio2_inverse_point(R, self.B)

    @property
    def zero_arg(self):
        return self.B.spec.zero()

    @property
    def unit_arg(self):
        return self.B

    def opposite_arg(self, X):
        return -X

    def inverse_value(self, X):
        """r_X(B), the multiplicative inverse of r_B(X)."""
        return ratio2(self.B, X)

    def invertible(self, X) -> bool:
        return not X.is_zero()

    def sum_preimage(self, X, Y):
        return X + Y

    def product_preimage(self, X, Y):
        return X * self.B.inv() * Y

    def describe(self):
        return {"B": str(self.B)}


@dataclass(frozen=True)
class ThreePointMap:
    """r_BC(X) = r(X,B;C)."""

    B: Scalar
    C: Scalar

    def __post_init__(self):
        if self.B == self.C:
            raise DegenerateInput("r_BC needs B != C")

    def __call__(self, X):
        return ratio3(X, self.B, self.C)

    def inverse(self, R):
        return ratio3_inverse_point(R, self.B, self.C)

    @property
    def zero_arg(self):
        return self.C

    @property
    def unit_arg(self):
        return self.B

    def opposite_arg(self, X):
        return self.C + self.C - X

    def inverse_value(self, X):
        """r_XC(B), the multiplicative inverse of r_BC(X)."""
        return ratio3(self.B, X, self.C)

    def invertible(self, X) -> bool:
        return X != self.C

    def sum_preimage(self, X, Y):
        return X + Y - self.C

    def product_preimage(self, X, Y):
        return self.C + (X - self.C) * (self.B - self.C).inv() * (Y - self.C)

    def describe(self):
        return {"B": str(self.B), "C": str(self.C)}


RatioMap = Union[TwoPointMap, ThreePointMap]


# -- check records --------------------------------------------------------


def _lit(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, tuple):
        return ", ".join(_lit(x) for x in v)
    return str(v)


@dataclass
class Check:
    identity: str
    inputs: dict
    status: str
    lhs: str = ""
    rhs: str = ""
    note: str = ""
    forms: dict = field(default_factory=dict)
    resolved_form: str = ""

    def to_dict(self) -> dict:
        d = {
            "identity": self.identity,
            "inputs": self.inputs,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if self.note:
            d["note"] = self.note
        if self.forms:
            d["forms"] = self.forms
            d["resolved_form"] = self.resolved_form
        return d


def _inputs(**kw) -> dict:
    return {k: str(v) for k, v in kw.items()}


def _eq(identity, inputs, ok, lhs: Callable, rhs: Callable, why="") -> Check:
    if not ok:
        return Check(identity, inputs, "skipped", note=why)
    left, right = lhs(), rhs()
    return Check(identity, inputs, "pass" if left == right else "fail", _lit(left), _lit(right))


def _disputed(identity, inputs, ok, lhs: Callable, forms: dict, resolved: str, why="") -> Check:
    """Evaluate one left side against several published right sides."""
    if not ok:
        return Check(identity, inputs, "skipped", note=why)
    left = lhs()
    values = {name: f() for name, f in forms.items()}
    holds = {name: v == left for name, v in values.items()}
    return Check(
        identity,
        inputs,
        "pass" if holds[resolved] else "fail",
        _lit(left),
        _lit(values[resolved]),
        forms=holds,
        resolved_form=resolved,
    )


def _raises(identity, inputs, fn, exc) -> Check:
    try:
        value = fn()
    except exc:
        return Check(identity, inputs, "pass", "raises " + exc.__name__, "raises " + exc.__name__)
    return Check(identity, inputs, "fail", _lit(value), "raises " + exc.__name__)


def check_ratio2_identities(A: Scalar, B: Scalar, C: Scalar, aux: Optional[Point] = None) -> list:
    spec = A.spec
    O, I = spec.zero(), spec.one()
    inp = _inputs(A=A, B=B, C=C)
    nzA, nzB, nzC = not A.is_zero(), not B.is_zero(), not C.is_zero()
    out = [
        _eq("r(A:B)^-1 = r(B:A)", inp, nzA and nzB,
            lambda: ratio2(A, B).inv(), lambda: ratio2(B, A), "needs A, B != O"),
        _eq("r(A+B:C) = r(A:C) + r(B:C)", inp, nzC,
            lambda: ratio2(A + B, C), lambda: ratio2(A, C) + ratio2(B, C), "needs C != O"),
        _eq("r(A*B:C) = r(A:C)*B", inp, nzC,
            lambda: ratio2(A * B, C), lambda: ratio2(A, C) * B, "needs C != O"),
        _disputed("r(A:B*C) = C^-1 r(A:C) [statement] | C^-1 r(A:B) [proof]", inp, nzB and nzC,
                  lambda: ratio2(A, B * C),
                  {"statement": lambda: C.inv() * ratio2(A, C), "proof": lambda: C.inv() * ratio2(A, B)},
                  "proof", "needs B, C != O"),
    ]
    iff = _eq("r(A:B) = r(B:A) <=> A = B", inp, nzA and nzB,
              lambda: ratio2(A, B) == ratio2(B, A), lambda: A == B, "needs A, B != O")
    if iff.status == "fail" and A == -B:
        iff.note = "counterexample: A = -B gives r(A:B) = r(B:A) = -I"
    out.append(iff)
    out.append(_eq("r(A:B) = r(B:A) <=> A = B or A = -B", inp, nzA and nzB,
                   lambda: ratio2(A, B) == ratio2(B, A), lambda: A == B or A == -B, "needs A, B != O"))
    # degenerate table
    out += [
        _eq("r(A:A) = I", inp, nzA, lambda: ratio2(A, A), lambda: I, "needs A != O"),
        _eq("r(O:B) = O", inp, nzB, lambda: ratio2(O, B), lambda: O, "needs B != O"),
        _disputed("r(I:B) = I [statement] | B^-1 I [derivation]", inp, nzB,
                  lambda: ratio2(I, B), {"statement": lambda: I, "derivation": lambda: B.inv() * I},
                  "derivation", "needs B != O"),
        _eq("r(I:I) = I", inp, True, lambda: ratio2(I, I), lambda: I),
        _eq("r(A:O) = inf", inp, nzA, lambda: ratio2(A, O), lambda: INFINITY, "needs A != O"),
        _raises("r(O:O) is undefined", inp, lambda: ratio2(O, O), UndefinedRatio),
        _eq("r_B^-1(r(A:B)) = A", inp, nzB,
            lambda: ratio2_inverse_point(ratio2(A, B), B), lambda: A, "needs B != O"),
        _eq("geometric r(A:B) = B^-1 A", inp, nzB,
            lambda: ratio2_geometric(A, B, aux), lambda: ratio2(A, B), "needs B != O"),
    ]
    return out


def check_ratio3_identities(A: Scalar, B: Scalar, C: Scalar, aux: Optional[Point] = None) -> list:
    spec = A.spec
    O, I = spec.zero(), spec.one()
    inp = _inputs(A=A, B=B, C=C)
    distinct = len({A, B, C}) == 3
    nonzero = not (A.is_zero() or B.is_zero() or C.is_zero())
    out = [
        _eq("r(-A,-B;-C) = r(A,B;C)", inp, B != C,
            lambda: ratio3(-A, -B, -C), lambda: ratio3(A, B, C), "needs B != C"),
        _eq("r(A,B;C)^-1 = r(B,A;C)", inp, A != C and B != C,
            lambda: ratio3(A, B, C).inv(), lambda: ratio3(B, A, C), "needs A, B != C"),
        _eq("r(A,A;C) = I", inp, A != C, lambda: ratio3(A, A, C), lambda: I, "needs A != C"),
        _eq("r(O,O;C) = I", inp, not C.is_zero(), lambda: ratio3(O, O, C), lambda: I, "needs C != O"),
        _eq("r(I,I;C) = I", inp, C != I, lambda: ratio3(I, I, C), lambda: I, "needs C != I"),
        _eq("r(C,B;C) = O", inp, B != C, lambda: ratio3(C, B, C), lambda: O, "needs B != C"),
        _eq("r(A,C;C) = inf", inp, A != C, lambda: ratio3(A, C, C), lambda: INFINITY, "needs A != C"),
        _raises("r(C,C;C) is undefined", inp, lambda: ratio3(C, C, C), UndefinedRatio),
        _eq("A = B*R + C*(I-R) for R = r(A,B;C)", inp, B != C,
            lambda: B * ratio3(A, B, C) + C * (I - ratio3(A, B, C)), lambda: A, "needs B != C"),
        # with B = C the same form collapses to B whatever R is
        _eq("B = C forces A = B: B*R + B*(I-R) = B", _inputs(B=B, R=A), True,
            lambda: B * A + B * (I - A), lambda: B),
        _disputed("A = C forces A = B [statement] | (B-A)*R = O [derivation]", inp, B != C,
                  lambda: True,
                  {"statement": lambda: C == B,
                   "derivation": lambda: (B - C) * ratio3(C, B, C) == O},
                  "derivation", "needs B != C"),
        _eq("X^-1 - Y^-1 = Y^-1 (Y-X) X^-1 at X=A, Y=B", inp, not (A.is_zero() or B.is_zero()),
            lambda: A.inv() - B.inv(), lambda: B.inv() * (B - A) * A.inv(), "needs A, B != O"),
        _disputed("r(A^-1,B^-1;C^-1) = B r(A,B;C) A^-1 [statement] | B r(B,A;C) A^-1 [proof]",
                  inp, distinct and nonzero,
                  lambda: ratio3(A.inv(), B.inv(), C.inv()),
                  {"statement": lambda: B * ratio3(A, B, C) * A.inv(),
                   "proof": lambda: B * ratio3(B, A, C) * A.inv()},
                  "statement", "needs distinct nonzero A, B, C"),
        _eq("r(A^-1,B^-1;C^-1) = r(A,B;C) r(B,A;O) (commutative only)", inp,
            distinct and nonzero and spec.is_commutative,
            lambda: ratio3(A.inv(), B.inv(), C.inv()), lambda: ratio3(A, B, C) * ratio3(B, A, O),
            "noncommutative backend" if not spec.is_commutative else "needs distinct nonzero A, B, C"),
        _eq("r_BC^-1(r(A,B;C)) = A", inp, B != C,
            lambda: ratio3_inverse_point(ratio3(A, B, C), B, C), lambda: A, "needs B != C"),
        _eq("geometric r(A,B;C) = (B-C)^-1 (A-C)", inp, B != C,
            lambda: ratio3_geometric(A, B, C, aux), lambda: ratio3(A, B, C), "needs B != C"),
    ]
    if B != C:
        eq = line_equation_coeffs(B, C)
        out += [
            _eq("M = (B-C)^-1, N = (C-B)^-1 C: r(A,B;C) = M A + N", inp, True,
                lambda: eq(A), lambda: ratio3(A, B, C)),
            _eq("M C + N = O", inp, True, lambda: eq(C), lambda: O),
            _eq("M B + N = I", inp, True, lambda: eq(B), lambda: I),
        ]
    else:
        out.append(Check("line equation M X + N", inp, "skipped", note="needs B != C"))
    out += _midpoint_checks(A, B, C, inp, distinct)
    return out


def _m_prime(A, B, C):
    return (C - B).inv() + (C - A).inv()


def _midpoint_checks(A, B, C, inp, distinct) -> list:
    spec = A.spec
    O, I = spec.zero(), spec.one()
    out = [
        _eq("(C-B)^-1 (A-B) - (C-A)^-1 (B-A) = M'(A-B), M' = (C-B)^-1 + (C-A)^-1", inp, distinct,
            lambda: (C - B).inv() * (A - B) - (C - A).inv() * (B - A),
            lambda: _m_prime(A, B, C) * (A - B), "needs distinct A, B, C"),
        _eq("M' = O <=> C + C = A + B", inp, distinct,
            lambda: _m_prime(A, B, C) == O, lambda: C + C == A + B, "needs distinct A, B, C"),
    ]
    if spec.characteristic == 2 or A == B:
        why = "characteristic 2" if spec.characteristic == 2 else "needs A != B"
        out.append(Check("midpoint C0 of A, B: r(A,C0;B) = r(B,C0;A) = I+I", inp, "skipped", note=why))
        return out
    Cm = midpoint_solve(A, B)
    mid = _inputs(A=A, B=B, C0=Cm)
    out += [
        _eq("midpoint C0 of A, B: M'(A,B,C0) = O", mid, True, lambda: _m_prime(A, B, Cm), lambda: O),
        _eq("midpoint C0 of A, B: r(A,C0;B) = I+I", mid, True, lambda: ratio3(A, Cm, B), lambda: I + I),
        _eq("midpoint C0 of A, B: r(B,C0;A) = I+I", mid, True, lambda: ratio3(B, Cm, A), lambda: I + I),
    ]
    return out


def check_bijection(rmap: RatioMap) -> Check:
    """Exhaustive surjectivity and injectivity of a ratio map on a finite line."""
    spec = rmap.B.spec
    inp = rmap.describe()
    if not spec.is_finite:
        return Check("ratio map is a bijection of the line", inp, "skipped", note="infinite backend")
    line = list(spec.elements())
    image = [rmap(X) for X in line]
    ok = len(set(image)) == len(line) and set(image) == set(line)
    return Check("ratio map is a bijection of the line", inp, "pass" if ok else "fail",
                 str(len(set(image))), str(len(line)))


def check_substructure(rmap: RatioMap, sample: list, all_triples: bool = False) -> list:
    """Closure, neutral elements, opposites, inverses and both distributive laws on a sample.

    By default X runs over the sample with Y, Z its cyclic successors; with
    ``all_triples`` every (X, Y, Z) in sample^3 is checked.
    """
    spec = rmap.B.spec
    O, I = spec.zero(), spec.one()
    r = rmap
    two_point = isinstance(r, TwoPointMap)
    name = "r_B" if two_point else "r_BC"
    laws_ok = two_point or not (r.B.is_zero() or r.C.is_zero())
    why = "" if laws_ok else "group theorems assume B, C != O"
    out = []
    if two_point:
        out.append(_disputed("r_B(O) = I [statement] | B^-1 O [derivation]", r.describe(), True,
                             lambda: r(O), {"statement": lambda: I, "derivation": lambda: O},
                             "derivation"))
    else:
        out.append(_eq("r_BC(C) = O", r.describe(), True, lambda: r(r.C), lambda: O))
    out.append(_eq(f"{name}(B) = I", r.describe(), True,
                   lambda: r(r.unit_arg), lambda: I))
    n = len(sample)
    if all_triples:
        triples = itertools.product(sample, repeat=3)
    else:
        triples = ((X, sample[(i + 1) % n], sample[(i + 2) % n]) for i, X in enumerate(sample))
    for X, Y, Z in triples:
        inp = dict(r.describe(), **_inputs(X=X, Y=Y, Z=Z))
        rX, rY, rZ = r(X), r(Y), r(Z)
        out += [
            _eq(f"{name}^-1({name}(X)) = X", inp, True, lambda: r.inverse(rX), lambda: X),
            _eq(f"closure: {name}(X) + {name}(Y) is a ratio value", inp, True,
                lambda: rX + rY, lambda: r(r.sum_preimage(X, Y))),
            _eq(f"closure: {name}(X) * {name}(Y) is a ratio value", inp, True,
                lambda: rX * rY, lambda: r(r.product_preimage(X, Y))),
            _eq("(x + y) + z = x + (y + z)", inp, laws_ok, lambda: (rX + rY) + rZ, lambda: rX + (rY + rZ), why),
            _eq("x + y = y + x", inp, laws_ok, lambda: rX + rY, lambda: rY + rX, why),
            _eq(f"zero: x + {name}(zero) = x", inp, laws_ok, lambda: rX + r(r.zero_arg), lambda: rX, why),
            _eq(f"opposite: x + {name}({'-X' if two_point else '2C-X'}) = {name}(zero)", inp, laws_ok,
                lambda: rX + r(r.opposite_arg(X)), lambda: r(r.zero_arg), why),
            _eq("(x y) z = x (y z)", inp, laws_ok, lambda: (rX * rY) * rZ, lambda: rX * (rY * rZ), why),
            _eq(f"unit: x {name}(B) = {name}(B) x = x", inp, laws_ok,
                lambda: (rX * r(r.unit_arg), r(r.unit_arg) * rX), lambda: (rX, rX), why),
            _eq(f"inverse: x {'r_X(B)' if two_point else 'r_XC(B)'} = I", inp, laws_ok and r.invertible(X),
                lambda: (rX * r.inverse_value(X), r.inverse_value(X) * rX), lambda: (I, I),
                why or "X has no inverse ratio"),
            _eq("x (y + z) = x y + x z", inp, laws_ok, lambda: rX * (rY + rZ), lambda: rX * rY + rX * rZ, why),
            _eq("(x + y) z = x z + y z", inp, laws_ok, lambda: (rX + rY) * rZ, lambda: rX * rZ + rY * rZ, why),
        ]
    return out


def _rebased(line, O_, I_):
    """Coordinate on a line other than OI that sends O' to O and I' to I."""
    pick = (lambda P: P.y) if isinstance(line, Vertical) else (lambda P: P.x)
    unit = (pick(I_) - pick(O_)).inv()
    return lambda P: (pick(P) - pick(O_)) * unit


def check_preservation(kind: str, A: Scalar, B: Scalar, C: Scalar, param) -> list:
    """Whether a collineation keeps ratios of points on OI.

    ``kind`` is ``"dilation"`` (param: lambda), ``"translation"`` (param: t,
    shifting along OI) or ``"projection"`` (param: (target line, direction)).
    """
    spec = A.spec
    O, I = spec.zero(), spec.one()
    pts = {name: Point(v, O) for name, v in (("A", A), ("B", B), ("C", C))}
    inp = _inputs(A=A, B=B, C=C)
    out = []

    if kind in ("dilation", "translation"):
        f = LeftDilation(param) if kind == "dilation" else Translation(param, O)
        inp["param"] = str(param)
        img = {k: f(P) for k, P in pts.items()}
        a, b, c = img["A"].x, img["B"].x, img["C"].x
        out.append(_eq(f"{kind} keeps OI on itself", inp, True,
                       lambda: all(P.y.is_zero() for P in img.values()), lambda: True))
        out.append(_eq(f"{kind} keeps A, B, C collinear", inp, True,
                       lambda: collinear(*img.values()), lambda: True))
        out.append(_eq(f"{kind} preserves r(A,B;C)", inp, B != C,
                       lambda: ratio3(a, b, c), lambda: ratio3(A, B, C), "needs B != C"))
        if kind == "dilation":
            out.append(_eq("dilation preserves r(A:B)", inp, not B.is_zero(),
                           lambda: ratio2(a, b), lambda: ratio2(A, B), "needs B != O"))
        else:
            label = "translation changes r(A:B) (expected counterexample)"
            if B.is_zero() or b.is_zero():
                out.append(Check(label, inp, "skipped", note="needs B, B+t != O"))
            else:
                before, after = ratio2(A, B), ratio2(a, b)
                if before != after:
                    out.append(Check(label, inp, "pass", _lit(after), _lit(before), note="ratio2 not preserved"))
                else:
                    out.append(Check(label, inp, "skipped", _lit(after), _lit(before),
                                     note="no counterexample at this input"))
        return out

    if kind == "projection":
        dst, direction = param
        proj = ParallelProjection(axis(spec), dst, direction)
        inp["target"] = str(dst)
        inp["direction"] = f"({direction.x}, {direction.y})"
        O_, I_ = proj(Point(O, O)), proj(Point(I, O))
        coord = _rebased(dst, O_, I_)
        a, b, c = (coord(proj(pts[k])) for k in "ABC")
        out += [
            _eq("projection keeps A', B', C' on the target line", inp, True,
                lambda: all(dst.contains(proj(P)) for P in pts.values()), lambda: True),
            _eq("projection preserves r(A,B;C) in rebased coordinates", inp, B != C,
                lambda: ratio3(a, b, c), lambda: ratio3(A, B, C), "needs B != C"),
            _eq("projection preserves r(A:B) in rebased coordinates", inp, not B.is_zero(),
                lambda: ratio2(a, b), lambda: ratio2(A, B), "needs B != O"),
        ]
        return out
    raise ValueError(f"unknown map kind {kind!r}")
