"""The coordinate plane AG(2, K) over a skew field K.

Lines use the right-slope convention ``y = x*m + b`` (the slope multiplies
from the right).  Under this convention the multiplication construction on
the x-axis realizes ``A*B`` rather than ``B*A``; see ``construct``.

Points on the line through P with direction (dx, dy) are ``P + s*(dx, dy)``
with the scalar s acting from the LEFT, which is why left dilations
``(x, y) -> (lam*x, lam*y)`` are collineations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .errors import BadDirection, DegenerateInput, HypothesisViolated, NotOnSource, SameLine
from .skewfield import FieldSpec, Scalar


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, lam: Scalar) -> "Point":
        """Left scalar multiple (lam*x, lam*y)."""
        return Point(lam * self.x, lam * self.y)

    def __str__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class Vertical:
    """The line {(c, y)}."""

    c: Scalar

    def contains(self, P: Point) -> bool:
        return P.x == self.c

    def __str__(self):
        return f"x = {self.c}"


@dataclass(frozen=True)
class Slanted:
    """The line {(x, x*m + b)}."""

    m: Scalar
    b: Scalar

    def contains(self, P: Point) -> bool:
        return P.y == P.x * self.m + self.b

    def at(self, x: Scalar) -> Point:
        return Point(x, x * self.m + self.b)

    def __str__(self):
        return f"y = x*({self.m}) + ({self.b})"


Line = Union[Vertical, Slanted]


def axis(spec: FieldSpec) -> Slanted:
    """The distinguished line through O = (0, 0) and I = (1, 0)."""
    return Slanted(spec.zero(), spec.zero())


def line_through(P: Point, Q: Point) -> Line:
    if P == Q:
        raise DegenerateInput(f"line through {P} and itself is not unique")
    if P.x == Q.x:
        return Vertical(P.x)
    m = (Q.x - P.x).inv() * (Q.y - P.y)
    return Slanted(m, P.y - P.x * m)


def parallel_through(l: Line, P: Point) -> Line:
    if isinstance(l, Vertical):
        return Vertical(P.x)
    return Slanted(l.m, P.y - P.x * l.m)


def is_parallel(l1: Line, l2: Line) -> bool:
    """Same direction class; a line is parallel to itself."""
    if isinstance(l1, Vertical) or isinstance(l2, Vertical):
        return isinstance(l1, Vertical) and isinstance(l2, Vertical)
    return l1.m == l2.m


def intersect(l1: Line, l2: Line) -> Optional[Point]:
    """Unique common point of two distinct lines, or None when parallel."""
    if l1 == l2:
        raise SameLine(f"{l1} meets itself everywhere")
    if is_parallel(l1, l2):
        return None
    if isinstance(l1, Vertical):
        return l2.at(l1.c)
    if isinstance(l2, Vertical):
        return l1.at(l2.c)
    # x*(m1 - m2) = b2 - b1, solved by right division
    x = (l2.b - l1.b) * (l1.m - l2.m).inv()
    return l1.at(x)


def collinear(*points: Point) -> bool:
    distinct = list(dict.fromkeys(points))
    if len(distinct) <= 2:
        return True
    l = line_through(distinct[0], distinct[1])
    return all(l.contains(P) for P in distinct[2:])


def line_with_direction(P: Point, direction: Point) -> Line:
    """Line through P in direction (dx, dy); slope is dx^-1 * dy."""
    if direction.x.is_zero() and direction.y.is_zero():
        raise BadDirection("zero direction vector")
    if direction.x.is_zero():
        return Vertical(P.x)
    m = direction.x.inv() * direction.y
    return Slanted(m, P.y - P.x * m)


# -- Desargues configurations -----------------------------------------------


@dataclass(frozen=True)
class TriangleConfig:
    A: Point
    B: Point
    C: Point
    A_: Point
    B_: Point
    C_: Point


def desargues_violations(cfg: TriangleConfig) -> list:
    """Every violated hypothesis of Desargues' axiom, as readable strings."""
    A, B, C, A_, B_, C_ = cfg.A, cfg.B, cfg.C, cfg.A_, cfg.B_, cfg.C_
    out = []
    for name, tri in (("ABC", (A, B, C)), ("A'B'C'", (A_, B_, C_))):
        if len(set(tri)) < 3:
            out.append(f"{name} has repeated vertices")
        elif collinear(*tri):
            out.append(f"{name} is collinear")
    if out:
        return out
    if A == A_ or B == B_ or C == C_:
        return ["a vertex coincides with its partner, so AA', BB', CC' are not all lines"]

    lAA, lBB, lCC = line_through(A, A_), line_through(B, B_), line_through(C, C_)
    lAB, lAB_ = line_through(A, B), line_through(A_, B_)
    lBC, lBC_ = line_through(B, C), line_through(B_, C_)
    lAC, lAC_ = line_through(A, C), line_through(A_, C_)

    if len({lAA, lBB, lCC, lAC, lAC_}) < 5:
        out.append("lines AA', BB', CC', AC, A'C' are not pairwise distinct")
    if lAB == lAB_:
        out.append("AB and A'B' coincide")
    elif not is_parallel(lAB, lAB_):
        out.append("AB is not parallel to A'B'")
    if lBC == lBC_:
        out.append("BC and B'C' coincide")
    elif not is_parallel(lBC, lBC_):
        out.append("BC is not parallel to B'C'")

    if len({lAA, lBB, lCC}) == 3:
        parallel = is_parallel(lAA, lBB) and is_parallel(lBB, lCC)
        if not parallel:
            P = intersect(lAA, lBB)
            if P is None or not lCC.contains(P):
                out.append("AA', BB', CC' are neither parallel nor concurrent")
    return out


def check_desargues(cfg: TriangleConfig) -> bool:
    """Whether AC is parallel to A'C' for a configuration satisfying the axiom's hypotheses."""
    bad = desargues_violations(cfg)
    if bad:
        raise HypothesisViolated(bad)
    return is_parallel(line_through(cfg.A, cfg.C), line_through(cfg.A_, cfg.C_))


def random_point(spec: FieldSpec, rng: random.Random) -> Point:
    return Point(spec.random(rng), spec.random(rng))


def random_desargues_config(spec: FieldSpec, rng: random.Random, max_tries: int = 1000) -> TriangleConfig:
    """Sample a configuration in perspective (central or parallel), rejecting invalid ones.

    Only the hypotheses are built in: A'B' || AB and B'C' || BC.  Whether
    A'C' || AC is left for the checker to decide.
    """
    for _ in range(max_tries):
        A, B, C = (random_point(spec, rng) for _ in range(3))
        if len({A, B, C}) < 3 or collinear(A, B, C):
            continue
        A_ = random_point(spec, rng)
        if A_ == A:
            continue
        if rng.random() < 0.5:
            # central: A' on PA, B' on PB, C' on PC
            P = random_point(spec, rng)
            if P in (A, B, C):
                continue
            A_ = P + (A - P).scaled(spec.random(rng, nonzero=True))
            rays = [line_through(P, X) for X in (B, C)]
        else:
            direction = line_through(A, A_)
            rays = [parallel_through(direction, X) for X in (B, C)]
        try:
            B_ = intersect(parallel_through(line_through(A, B), A_), rays[0])
            if B_ is None:
                continue
            C_ = intersect(parallel_through(line_through(B, C), B_), rays[1])
        except SameLine:
            continue
        if C_ is None:
            continue
        cfg = TriangleConfig(A, B, C, A_, B_, C_)
        if not desargues_violations(cfg):
            return cfg
    raise RuntimeError("could not sample a valid configuration")


def all_points(spec: FieldSpec) -> list:
    els = list(spec.elements())
    return [Point(x, y) for x in els for y in els]


def enumerate_desargues_configs(spec: FieldSpec) -> Iterator[TriangleConfig]:
    """Every valid configuration in AG(2, F) for a small finite F.

    Brute force over ordered 6-tuples of points, pruned only by hypotheses
    that involve the vertices chosen so far.
    """
    pts = all_points(spec)
    for A, B, C in itertools.permutations(pts, 3):
        if collinear(A, B, C):
            continue
        lAB, lBC = line_through(A, B), line_through(B, C)
        for A_ in pts:
            if A_ == A:
                continue
            for B_ in pts:
                if B_ in (B, A_):
                    continue
                lAB_ = line_through(A_, B_)
                if lAB_ == lAB or not is_parallel(lAB, lAB_):
                    continue
                for C_ in pts:
                    cfg = TriangleConfig(A, B, C, A_, B_, C_)
                    if not desargues_violations(cfg):
                        yield cfg


# -- collineations ------------------------------------------------------------


@dataclass(frozen=True)
class Translation:
    t1: Scalar
    t2: Scalar

    def __call__(self, P: Point) -> Point:
        return Point(P.x + self.t1, P.y + self.t2)


@dataclass(frozen=True)
class LeftDilation:
    lam: Scalar

    def __post_init__(self):
        if self.lam.is_zero():
            raise DegenerateInput("dilation factor must be nonzero")

    def __call__(self, P: Point) -> Point:
        return P.scaled(self.lam)


@dataclass(frozen=True)
class ParallelProjection:
    """Project ``src`` onto ``dst`` along lines with the given direction."""

    src: Line
    dst: Line
    direction: Point

    def __post_init__(self):
        ray = line_with_direction(self.direction, self.direction)
        if is_parallel(ray, self.dst):
            raise BadDirection("projection direction is parallel to the target line")
        if is_parallel(ray, self.src):
            raise BadDirection("projection direction is parallel to the source line")

    def __call__(self, P: Point) -> Point:
        if not self.src.contains(P):
            raise NotOnSource(f"{P} is not on {self.src}")
        ray = line_with_direction(P, self.direction)
        if ray == self.dst:
            return P
        return intersect(ray, self.dst)


def apply_map(kind, P: Point) -> Point:
    return kind(P)
