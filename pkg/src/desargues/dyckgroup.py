"""Polygon complexes over collinear ratio points and their integer word group.

A polygon is a planar graph with declared faces (cycles) and an ordered
basis of generator vertices that lie on one line.  Every vertex is reached
from the first generator by a shortest edge path; cutting that path at each
generator it passes through gives an integer word over the basis.  Words
add coefficientwise, so the structure is the free abelian group on the basis.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import BasisMismatch, UnknownVertex
from .plane import Point, collinear
from .skewfield import FieldSpec


@dataclass(frozen=True)
class DyckPolygon:
    labels: tuple
    edges: tuple  # of frozensets {u, v}
    cycles: tuple  # of label tuples
    generators: tuple
    points: dict = field(default_factory=dict, compare=False, hash=False)
    spec: Optional[FieldSpec] = None

    @classmethod
    def from_dict(cls, d: dict, spec: Optional[FieldSpec] = None) -> "DyckPolygon":
        spec = spec or FieldSpec.parse(d.get("field", "Q"))
        labels, points = [], {}
        for v in d["vertices"]:
            labels.append(v["label"])
            if "x" in v and "y" in v:
                points[v["label"]] = Point(spec.parse_scalar(str(v["x"])), spec.parse_scalar(str(v["y"])))
        edges = tuple(dict.fromkeys(frozenset(e) for e in d.get("edges", ())))
        return cls(
            tuple(labels),
            edges,
            tuple(tuple(c) for c in d.get("cycles", ())),
            tuple(d.get("generators", ())),
            points,
            spec,
        )

    @classmethod
    def from_json(cls, text: str, spec: Optional[FieldSpec] = None) -> "DyckPolygon":
        return cls.from_dict(json.loads(text), spec)

    def to_dict(self) -> dict:
        verts = []
        for lab in self.labels:
            v = {"label": lab}
            if lab in self.points:
                v["x"], v["y"] = str(self.points[lab].x), str(self.points[lab].y)
            verts.append(v)
        return {
            "field": str(self.spec) if self.spec else "Q",
            "vertices": verts,
            "edges": [sorted(e) for e in self.edges],
            "cycles": [list(c) for c in self.cycles],
            "generators": list(self.generators),
        }

    def neighbors(self, v: str) -> list:
        """Adjacent vertices, generators first in basis order, then by label."""
        adj = {u for e in self.edges if v in e for u in e if u != v}
        order = {g: i for i, g in enumerate(self.generators)}
        return sorted(adj, key=lambda u: (0, order[u], "") if u in order else (1, 0, u))


def example_polygon() -> DyckPolygon:
    """The example complex: three triangles hung off the ratio points A, B, C.

    The third face is stored open as C, O, B1 and closes through the edge
    B1-C; the validator reports that implicit closure.
    """
    pts = {
        "A": ("5", "0"), "B": ("3", "0"), "C": ("1", "0"), "O": ("0", "0"),
        "A-C": ("4", "0"), "B-C": ("2", "0"),
        "B3": ("9/2", "1"), "B4": ("5/2", "1"), "B1": ("1/2", "1"),
    }
    cycles = [["A", "A-C", "B3", "A"], ["B", "B-C", "B4", "B"], ["C", "O", "B1"]]
    edges = [["A", "B"], ["B", "C"]]
    for c in cycles:
        ring = c if c[0] == c[-1] else c + [c[0]]
        edges += [[u, v] for u, v in zip(ring, ring[1:])]
    return DyckPolygon.from_dict({
        "field": "Q",
        "vertices": [{"label": k, "x": x, "y": y} for k, (x, y) in pts.items()],
        "edges": edges,
        "cycles": cycles,
        "generators": ["A", "B", "C"],
    })


def _closed(cycle: tuple) -> tuple:
    return cycle if len(cycle) > 1 and cycle[0] == cycle[-1] else cycle + cycle[:1]


def validate_polygon(P: DyckPolygon) -> dict:
    """Structural report: ``valid`` is false iff ``violations`` is nonempty."""
    bad, notes = [], []
    known = set(P.labels)
    if len(known) != len(P.labels):
        bad.append("duplicate vertex labels")
    for e in P.edges:
        if len(e) != 2:
            bad.append(f"edge {sorted(e)} is a loop")
        for u in e - known:
            bad.append(f"edge endpoint {u} is not a vertex")
    for i, c in enumerate(P.cycles, 1):
        if len(set(c)) < 3:
            bad.append(f"cycle {i} has fewer than 3 vertices")
            continue
        ring = _closed(c)
        for u, v in zip(ring, ring[1:]):
            if frozenset((u, v)) not in P.edges:
                bad.append(f"cycle {i}: {u}-{v} is not an edge")
        if c[0] != c[-1]:
            notes.append(f"cycle {i} is listed open; closed through {c[-1]}-{c[0]}")

    if P.labels:
        seen, todo = {P.labels[0]}, [P.labels[0]]
        while todo:
            for u in P.neighbors(todo.pop()):
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        if seen != known:
            bad.append("disconnected: unreachable " + ", ".join(sorted(known - seen)))

    gens = P.generators
    if not gens:
        bad.append("no generators")
    if len(set(gens)) != len(gens):
        bad.append("generators are not distinct")
    for g in gens:
        if g not in known:
            bad.append(f"generator {g} is not a vertex")
    located = [P.points[g] for g in gens if g in P.points]
    if len(located) < len(set(gens) & known):
        notes.append("generator coordinates missing; collinearity not checked")
    elif not collinear(*located):
        bad.append("generators are not collinear")

    V, E, F = len(known), len(P.edges), len(P.cycles)
    if V - E + F != 1:
        bad.append(f"Euler characteristic V - E + F = {V - E + F}, expected 1")
    return {
        "valid": not bad,
        "violations": bad,
        "notes": notes,
        "euler": {"V": V, "E": E, "F": F, "chi": V - E + F},
    }


def _require(P: DyckPolygon, v: str):
    if v not in P.labels:
        raise UnknownVertex(f"unknown vertex {v!r}")


def reach(P: DyckPolygon, src: str, dst: str) -> list:
    """Shortest edge path from generator ``src`` to ``dst``, endpoints included."""
    _require(P, src)
    _require(P, dst)
    if src not in P.generators:
        raise UnknownVertex(f"{src!r} is not a generator")
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for w in P.neighbors(u):
            if w not in prev:
                prev[w] = u
                queue.append(w)
    if dst not in prev:
        raise UnknownVertex(f"{dst!r} is not reachable from {src!r}")
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


@dataclass(frozen=True)
class GroupWord:
    """Integer combination of basis generators; only nonzero terms are stored."""

    basis: tuple
    terms: tuple = ()  # sorted (label, k) with k != 0

    @classmethod
    def of(cls, basis, coeffs: dict) -> "GroupWord":
        basis = tuple(basis)
        for g in coeffs:
            if g not in basis:
                raise BasisMismatch(f"{g!r} is not in the basis {basis}")
        order = {g: i for i, g in enumerate(basis)}
        terms = tuple(sorted(((g, k) for g, k in coeffs.items() if k), key=lambda t: order[t[0]]))
        return cls(basis, terms)

    @classmethod
    def zero(cls, basis) -> "GroupWord":
        return cls(tuple(basis))

    @property
    def coefficients(self) -> dict:
        return dict(self.terms)

    def __getitem__(self, g):
        return self.coefficients.get(g, 0)

    @property
    def measure(self) -> int:
        """Path length k_1 + ... + k_n."""
        return sum(k for _, k in self.terms)

    def __add__(self, other: "GroupWord") -> "GroupWord":
        return word_op("add", self, other)

    def __neg__(self) -> "GroupWord":
        return word_op("negate", self)

    def __sub__(self, other: "GroupWord") -> "GroupWord":
        return self + (-other)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{k}{g}" for g, k in self.terms).replace("+ -", "- ")


def word_op(op: str, w1: GroupWord, w2: Optional[GroupWord] = None) -> GroupWord:
    if op == "negate":
        return GroupWord(w1.basis, tuple((g, -k) for g, k in w1.terms))
    if op != "add":
        raise ValueError(f"unknown word operation {op!r}")
    if w2 is None:
        raise ValueError("add needs two words")
    if w1.basis != w2.basis:
        raise BasisMismatch(f"bases differ: {w1.basis} vs {w2.basis}")
    total = dict(w1.terms)
    for g, k in w2.terms:
        total[g] = total.get(g, 0) + k
    return GroupWord.of(w1.basis, total)


def decompose(path: list, generators) -> dict:
    """Cut a path at each generator it visits; a segment's moves count toward its generator."""
    gens = set(generators)
    coeffs, current = {}, None
    for u in path[:-1]:
        if u in gens:
            current = u
        coeffs[current] = coeffs.get(current, 0) + 1
    return coeffs


def present(P: DyckPolygon, v: str) -> GroupWord:
    """Word for ``v`` read off the shortest path from the first generator."""
    _require(P, v)
    if v in P.generators:
        return GroupWord.of(P.generators, {v: 1})
    path = reach(P, P.generators[0], v)
    return GroupWord.of(P.generators, decompose(path, P.generators))
