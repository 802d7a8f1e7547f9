import json

import pytest

from schubsing import (
    Direction, NotInIntervalError, all_elements, build_graph, build_root_system,
    export_dot, export_json, format_root, format_word, identity, longest_element, parse_word,
)


def test_single_vertex(b2):
    G = build_graph(identity(b2))
    assert len(G.vertices) == 1 and not G.edges()
    assert export_dot(G) == 'graph "B2 e" {\n  v0 [label="e"];\n}\n'


def test_b2_example(b2_example):
    w, x = b2_example
    G = build_graph(w)
    assert len(G.vertices) == 6
    assert G.degree(x) == 3
    weights = {format_root(c.tangent_weight) for c in G.curves_at(x)}
    assert weights == {"a1", "-a2", "-2a1-a2"}
    ups = {format_word(c.other) for c in G.up_curves(x)}
    assert ups == {"s2 s1", "s1 s2"}  # r_b r_a and r_{2a+b} r_a
    assert {format_word(c.other) for c in G.curves_at(w)} == {"s1 s2", "s2 s1", "e"}
    assert all(c.direction is Direction.DOWN for c in G.curves_at(w))


def test_g2_example(g2):
    w, x = parse_word(g2, "s2 s1 s2 s1"), parse_word(g2, "s2 s1")
    weights = {format_root(c.tangent_weight) for c in build_graph(w).curves_at(x)}
    assert weights == {"-a1", "a2", "a1+a2", "-3a1-2a2"}


def test_a3_degree_excess(a3_3412):
    G = build_graph(a3_3412)
    assert G.degree(identity(a3_3412.system)) == 5 > a3_3412.length


def test_a2_longest_regular():
    rs = build_root_system("A", 2)
    G = build_graph(longest_element(rs))
    assert all(G.degree(x) == 3 for x in G.vertices)


def test_outside_interval(b2_example, b2):
    w, _ = b2_example
    with pytest.raises(NotInIntervalError):
        build_graph(w).curves_at(parse_word(b2, "s2 s1 s2"))


@pytest.mark.parametrize("name", ["B3", "A3"])
def test_graph_invariants(name):
    rs = build_root_system(name[0], int(name[1]))
    for w in all_elements(rs):
        G = build_graph(w)
        assert G.degree(w) == w.length
        pairs = set()
        for x in G.vertices:
            assert G.degree(x) >= w.length
            for c in G.curves_at(x):
                assert x.apply_inverse(c.tangent_weight) in rs.all_roots[len(rs.all_roots) // 2:]
                assert (c.direction is Direction.UP) == (c.other.length > x.length)
                back = next(d for d in G.curves_at(c.other) if d.other == x)
                assert back.gamma_pos == c.gamma_pos
                # the far end sees the opposite line
                assert back.tangent_weight == tuple(-v for v in c.tangent_weight)
                pairs.add(frozenset((x, c.other)))
        assert len(pairs) == len(G.edges())


def test_deterministic_exports(b2_example):
    w, _ = b2_example
    G = build_graph(w)
    dot = export_dot(G)
    assert dot.count(" -- ") == len(G.edges())
    assert dot == export_dot(build_graph(w))
    data = json.loads(export_json(G))
    assert [v["word"] for v in data["vertices"]] == ["e", "s1", "s2", "s1 s2", "s2 s1", "s1 s2 s1"]
    assert sum(1 for e in data["edges"] if 1 in (e["source"], e["target"])) == 3
