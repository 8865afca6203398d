"""Arithmetic on the line through O and I by ruler-and-parallels alone.

The distinguished line is the x-axis, with O = (0, 0) and I = (1, 0); a point
(a, 0) is identified with the scalar a.  Each construction uses only
``line_through``, ``parallel_through`` and ``intersect`` and records every
object it creates in a :class:`ConstructionTrace`.  The auxiliary point B1
may be any point off the axis; the result does not depend on it.

Subtraction and left division run the addition/multiplication constructions
backwards: the unknown operand is recovered in the last step by drawing the
parallel through B1 instead of through P1.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import AuxOnLine, DegenerateAux, DivisionByZero, SameLine
from .plane import Line, Point, Slanted, Vertical, axis, intersect, is_parallel, line_through, parallel_through
from .skewfield import FieldSpec, Scalar


@dataclass(frozen=True)
class Step:
    step: int
    label: str
    obj: Union[Point, Line]
    through: tuple = ()
    parallel_to: Optional[str] = None
    on: tuple = ()

    @property
    def kind(self) -> str:
        return "point" if isinstance(self.obj, Point) else "line"


@dataclass
class ConstructionTrace:
    spec: FieldSpec
    op: str
    operands: tuple
    aux: Point
    steps: list = field(default_factory=list)
    result: Optional[Scalar] = None

    def objects(self) -> dict:
        return {s.label: s.obj for s in self.steps}

    def problems(self) -> list:
        """Everything that fails to replay; empty when the trace is sound."""
        objs, out = {}, []
        for s in self.steps:
            if s.kind == "line":
                for lab in s.through:
                    if lab not in objs or not s.obj.contains(objs[lab]):
                        out.append(f"{s.label} does not pass through {lab}")
                if s.parallel_to is not None:
                    ref = objs.get(s.parallel_to)
                    if ref is None or not is_parallel(s.obj, ref):
                        out.append(f"{s.label} is not parallel to {s.parallel_to}")
            else:
                lines = [objs.get(lab) for lab in s.on]
                for lab, l in zip(s.on, lines):
                    if l is None or not l.contains(s.obj):
                        out.append(f"{s.label} is not on {lab}")
                if len(lines) == 2 and None not in lines:
                    try:
                        if intersect(*lines) != s.obj:
                            out.append(f"{s.label} is not the intersection of {s.on[0]} and {s.on[1]}")
                    except SameLine:
                        out.append(f"{s.on[0]} and {s.on[1]} coincide")
            objs[s.label] = s.obj
        last = self.steps[-1].obj if self.steps else None
        if not isinstance(last, Point) or not last.y.is_zero():
            out.append("final point is not on the line OI")
        elif self.result is None or last.x != self.result:
            out.append("final point does not match the recorded result")
        if self.aux.y.is_zero():
            out.append("auxiliary point lies on the line OI")
        return out

    def replay(self) -> bool:
        return not self.problems()

    # -- JSON ----------------------------------------------------------------

    def to_dict(self) -> dict:
        steps = []
        for s in self.steps:
            d = {"step": s.step, "label": s.label, "kind": s.kind, "data": _obj_data(s.obj)}
            if s.through:
                d["through"] = list(s.through)
            if s.parallel_to is not None:
                d["parallel_to"] = s.parallel_to
            if s.on:
                d["on"] = list(s.on)
            steps.append(d)
        return {
            "field": str(self.spec),
            "op": self.op,
            "operands": [str(x) for x in self.operands],
            "aux": [str(self.aux.x), str(self.aux.y)],
            "steps": steps,
            "result": str(self.result),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "ConstructionTrace":
        spec = FieldSpec.parse(d["field"])
        lit = spec.parse_scalar
        steps = [
            Step(
                s["step"],
                s["label"],
                _obj_from_data(spec, s["kind"], s["data"]),
                tuple(s.get("through", ())),
                s.get("parallel_to"),
                tuple(s.get("on", ())),
            )
            for s in d["steps"]
        ]
        return cls(
            spec,
            d.get("op", ""),
            tuple(lit(x) for x in d.get("operands", ())),
            Point(lit(d["aux"][0]), lit(d["aux"][1])),
            steps,
            lit(d["result"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "ConstructionTrace":
        return cls.from_dict(json.loads(text))


def _obj_data(obj):
    if isinstance(obj, Point):
        return [str(obj.x), str(obj.y)]
    if isinstance(obj, Vertical):
        return {"vertical": str(obj.c)}
    return {"m": str(obj.m), "b": str(obj.b)}


def _obj_from_data(spec, kind, data):
    lit = spec.parse_scalar
    if kind == "point":
        return Point(lit(data[0]), lit(data[1]))
    if "vertical" in data:
        return Vertical(lit(data["vertical"]))
    return Slanted(lit(data["m"]), lit(data["b"]))


class _Builder:
    def __init__(self, op, spec, operands, aux):
        if aux.y.is_zero():
            raise AuxOnLine(f"auxiliary point {aux} lies on the line OI")
        self.trace = ConstructionTrace(spec, op, operands, aux)
        self.objs = {}
        zero, one = spec.zero(), spec.one()
        self.point(0, "O", Point(zero, zero))
        self.point(0, "I", Point(one, zero))
        self._add(Step(0, "l^OI", axis(spec), through=("O", "I")))

    def _add(self, step):
        self.trace.steps.append(step)
        self.objs[step.label] = step.obj
        return step.obj

    def point(self, n, label, P, on=()):
        return self._add(Step(n, label, P, on=tuple(on)))

    def join(self, n, label, p, q):
        return self._add(Step(n, label, line_through(self.objs[p], self.objs[q]), through=(p, q)))

    def parallel(self, n, label, line, p):
        l = parallel_through(self.objs[line], self.objs[p])
        return self._add(Step(n, label, l, through=(p,), parallel_to=line))

    def meet(self, n, label, l1, l2):
        try:
            P = intersect(self.objs[l1], self.objs[l2])
        except SameLine:
            P = None
        if P is None:
            raise DegenerateAux(f"{l1} and {l2} do not meet in a single point; choose another auxiliary point")
        return self.point(n, label, P, on=(l1, l2))

    def finish(self, label):
        self.trace.result = self.objs[label].x
        return self.trace.result, self.trace


def default_aux(spec: FieldSpec) -> Point:
    return Point(spec.zero(), spec.one())


def random_aux(spec: FieldSpec, rng: random.Random) -> Point:
    return Point(spec.random(rng), spec.random(rng, nonzero=True))


def _on_axis(A: Scalar) -> Point:
    return Point(A, A.spec.zero())


def _addition_step2(b: _Builder, first: str):
    b.join(2, "l^OB1", "O", "B1")
    b.parallel(2, "l_OI^B1", "l^OI", "B1")
    b.parallel(2, f"l_OB1^{first}", "l^OB1", first)
    b.meet(2, "P1", "l_OI^B1", f"l_OB1^{first}")


def _multiplication_step2(b: _Builder, first: str):
    b.join(2, "l^IB1", "I", "B1")
    b.join(2, "l^OB1", "O", "B1")
    b.parallel(2, f"l_IB1^{first}", "l^IB1", first)
    b.meet(2, "P1", f"l_IB1^{first}", "l^OB1")


def geo_add(A: Scalar, B: Scalar, aux: Optional[Point] = None):
    """A + B: P1 = l_OI^B1 ^ l_OB1^A, then C = l_BB1^P1 ^ l^OI."""
    aux = aux or default_aux(A.spec)
    b = _Builder("add", A.spec, (A, B), aux)
    b.point(0, "A", _on_axis(A))
    b.point(0, "B", _on_axis(B))
    b.point(1, "B1", aux)
    _addition_step2(b, "A")
    b.join(3, "l^BB1", "B", "B1")
    b.parallel(3, "l_BB1^P1", "l^BB1", "P1")
    b.meet(3, "C", "l_BB1^P1", "l^OI")
    return b.finish("C")


def geo_mul(A: Scalar, B: Scalar, aux: Optional[Point] = None):
    """A * B: P1 = l_IB1^A ^ l^OB1, then C = l_BB1^P1 ^ l^OI."""
    aux = aux or default_aux(A.spec)
    b = _Builder("mul", A.spec, (A, B), aux)
    b.point(0, "A", _on_axis(A))
    b.point(0, "B", _on_axis(B))
    b.point(1, "B1", aux)
    _multiplication_step2(b, "A")
    b.join(3, "l^BB1", "B", "B1")
    b.parallel(3, "l_BB1^P1", "l^BB1", "P1")
    b.meet(3, "C", "l_BB1^P1", "l^OI")
    return b.finish("C")


def geo_sub(C: Scalar, A: Scalar, aux: Optional[Point] = None):
    """The B with A + B = C: the parallel to l^CP1 through B1 meets l^OI at B."""
    aux = aux or default_aux(C.spec)
    b = _Builder("sub", C.spec, (C, A), aux)
    b.point(0, "C", _on_axis(C))
    b.point(0, "A", _on_axis(A))
    b.point(1, "B1", aux)
    _addition_step2(b, "A")
    b.join(3, "l^CP1", "C", "P1")
    b.parallel(3, "l_CP1^B1", "l^CP1", "B1")
    b.meet(3, "B", "l_CP1^B1", "l^OI")
    return b.finish("B")


def geo_left_div(A: Scalar, B: Scalar, aux: Optional[Point] = None):
    """The X with B * X = A, i.e. B^-1 A."""
    if B.is_zero():
        raise DivisionByZero("left division by O")
    aux = aux or default_aux(A.spec)
    b = _Builder("ldiv", A.spec, (A, B), aux)
    b.point(0, "A", _on_axis(A))
    b.point(0, "B", _on_axis(B))
    b.point(1, "B1", aux)
    _multiplication_step2(b, "B")
    b.join(3, "l^AP1", "A", "P1")
    b.parallel(3, "l_AP1^B1", "l^AP1", "B1")
    b.meet(3, "X", "l_AP1^B1", "l^OI")
    return b.finish("X")


def geo_neg(A: Scalar, aux: Optional[Point] = None):
    return geo_sub(A.spec.zero(), A, aux)


def geo_inv(B: Scalar, aux: Optional[Point] = None):
    return geo_left_div(B.spec.one(), B, aux)


OPERATIONS = {"add": geo_add, "mul": geo_mul, "sub": geo_sub, "ldiv": geo_left_div}
