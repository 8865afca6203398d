import itertools
import json

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from desargues.dyckgroup import (
    DyckPolygon,
    GroupWord,
    example_polygon,
    present,
    reach,
    validate_polygon,
    word_op,
)
from desargues.errors import BasisMismatch, UnknownVertex

BASIS = ("A", "B", "C")


def graph_of(P):
    G = nx.Graph()
    G.add_nodes_from(P.labels)
    G.add_edges_from(tuple(e) for e in P.edges)
    return G


def oracle_word(P, v):
    """Segment decomposition of the unique shortest path, computed via networkx."""
    if v in P.generators:
        return {v: 1}
    paths = list(nx.all_shortest_paths(graph_of(P), P.generators[0], v))
    assert len(paths) == 1, "the oracle only covers unambiguous targets"
    coeffs, owner = {}, None
    for u in paths[0][:-1]:
        owner = u if u in P.generators else owner
        coeffs[owner] = coeffs.get(owner, 0) + 1
    return coeffs


def triangle(prefix="", gens=None):
    a, b, c = (prefix + s for s in "abc")
    return {
        "vertices": [{"label": a, "x": "0", "y": "0"}, {"label": b, "x": "1", "y": "0"},
                     {"label": c, "x": "0", "y": "1"}],
        "edges": [[a, b], [b, c], [c, a]],
        "cycles": [[a, b, c, a]],
        "generators": gens or [a, b],
    }


def test_example_validates_with_closure_note():
    report = validate_polygon(example_polygon())
    assert report["valid"]
    assert report["euler"] == {"V": 9, "E": 11, "F": 3, "chi": 1}
    assert any("cycle 3" in n for n in report["notes"])


def test_example_paths():
    P = example_polygon()
    assert reach(P, "A", "B4") == ["A", "B", "B4"]
    assert reach(P, "A", "B1") == ["A", "B", "C", "B1"]
    assert reach(P, "A", "A") == ["A"]


def test_example_words():
    P = example_polygon()
    assert present(P, "A").coefficients == {"A": 1}
    assert present(P, "B4").coefficients == {"A": 1, "B": 1}
    assert present(P, "B1").coefficients == {"A": 1, "B": 1, "C": 1}


def test_present_matches_oracle_everywhere():
    P = example_polygon()
    for v in P.labels:
        assert present(P, v).coefficients == oracle_word(P, v)


def test_path_measure_is_path_length():
    P = example_polygon()
    for v in P.labels:
        if v not in P.generators:
            assert present(P, v).measure == len(reach(P, "A", v)) - 1


def test_triangle_inequality():
    P = example_polygon()
    G = graph_of(P)
    for g, h in itertools.permutations(P.generators, 2):
        for v in P.labels:
            d = len(reach(P, g, v)) - 1
            assert d == nx.shortest_path_length(G, g, v)
            assert d <= len(reach(P, g, h)) - 1 + len(reach(P, h, v)) - 1


def test_ties_follow_basis_order():
    # a square: from a, vertex d is two moves away through b or through c
    d = {
        "vertices": [{"label": s} for s in "abcd"],
        "edges": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]],
        "cycles": [["a", "b", "d", "c", "a"]],
        "generators": ["a", "c", "b"],
    }
    P = DyckPolygon.from_dict(d)
    assert reach(P, "a", "d") == ["a", "c", "d"]
    assert present(P, "d").coefficients == {"a": 1, "c": 1}


def test_single_triangle_valid():
    assert validate_polygon(DyckPolygon.from_dict(triangle()))["valid"]


def test_disconnected_invalid():
    t1, t2 = triangle("p"), triangle("q")
    both = {k: t1[k] + t2[k] for k in ("vertices", "edges", "cycles")}
    both["generators"] = t1["generators"]
    report = validate_polygon(DyckPolygon.from_dict(both))
    assert not report["valid"]
    assert any("disconnected" in v for v in report["violations"])


def test_noncollinear_generators_invalid():
    report = validate_polygon(DyckPolygon.from_dict(triangle(gens=["a", "b", "c"])))
    assert "generators are not collinear" in report["violations"]


def test_missing_cycle_edge_invalid():
    t = triangle()
    t["edges"] = t["edges"][:2]
    report = validate_polygon(DyckPolygon.from_dict(t))
    assert any("is not an edge" in v for v in report["violations"])
    assert any("Euler" in v for v in report["violations"])


def test_unknown_vertex():
    P = example_polygon()
    with pytest.raises(UnknownVertex):
        present(P, "Z")
    with pytest.raises(UnknownVertex):
        reach(P, "O", "A")  # O is not a generator


def test_json_round_trip(tmp_path):
    P = example_polygon()
    again = DyckPolygon.from_json(json.dumps(P.to_dict()))
    assert again.to_dict() == P.to_dict()


def words(basis=BASIS, lo=-3, hi=3):
    return st.builds(lambda ks: GroupWord.of(basis, dict(zip(basis, ks))),
                     st.lists(st.integers(lo, hi), min_size=len(basis), max_size=len(basis)))


def test_word_examples():
    w1 = GroupWord.of(BASIS, {"A": 1, "B": 2})
    w2 = GroupWord.of(BASIS, {"B": 1, "C": 3})
    assert (w1 + w2).coefficients == {"A": 1, "B": 3, "C": 3}
    assert w1 + GroupWord.zero(BASIS) == w1
    assert w1 + word_op("negate", w1) == GroupWord.zero(BASIS)
    assert GroupWord.of(BASIS, {"A": 0}).terms == ()


def test_word_laws_exhaustive():
    all_words = [GroupWord.of(BASIS, dict(zip(BASIS, ks))) for ks in itertools.product(range(-3, 4), repeat=3)]
    zero = GroupWord.zero(BASIS)
    for u in all_words:
        assert u + zero == u == zero + u
        assert u + (-u) == zero
        for v in all_words:
            s = u + v
            assert s == v + u
            assert all(-6 <= k <= 6 for _, k in s.terms)


@given(words(), words(), words())
def test_word_associativity(u, v, w):
    assert (u + v) + w == u + (v + w)


def test_basis_mismatch():
    with pytest.raises(BasisMismatch):
        GroupWord.zero(("A", "B")) + GroupWord.zero(BASIS)
    with pytest.raises(BasisMismatch):
        GroupWord.of(("A",), {"B": 1})
