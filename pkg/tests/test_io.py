import json
import random

import networkx as nx
import pytest

from ringline import make_ring
from ringline.graph import Graph, complete_graph
from ringline.io import export_graph, from_graph6, from_json, to_dot, to_graph6, to_json
from ringline.pline import distant_graph

from conftest import SEED


def _random_graph(rnd, n, p=0.4):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < p]
    return Graph.from_edges(n, edges)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_triangle():
    assert to_graph6(complete_graph(3)) == b"Bw"
    assert from_graph6("Bw").adj == complete_graph(3).adj
    assert from_graph6(">>graph6<<Bw\n").adj == complete_graph(3).adj


@pytest.mark.parametrize("n", [0, 1, 2, 5, 62, 63, 64, 130])
def test_graph6_matches_networkx(n):
    g = _random_graph(random.Random(SEED + n), n)
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(_nx(g), header=False).strip()
    assert ours == theirs
    assert from_graph6(ours).adj == g.adj
    if n >= 63:
        assert ours[0] == 126


def test_graph6_long_form_size_header():
    # sizes at or above 258048 use the eight byte header; only the header is checked
    from ringline.io import _g6_size
    assert _g6_size(258048) == b"~~???~??"          # 258048 = 63 * 64**2
    assert from_graph6(b"~??~" + bytes(63 for _ in range((63 * 62 // 2 + 5) // 6))).n == 63


def test_distant_graph_exports():
    g = distant_graph(make_ring("M2(GF(2))"))
    dot = to_dot(g).decode()
    assert dot.startswith('graph "G" {') and dot.rstrip().endswith("}")
    assert dot.count("[label=") == 35 and dot.count(" -- ") == 280
    doc = json.loads(to_json(g))
    assert doc["version"] == 1 and doc["n"] == 35 and len(doc["edges"]) == 280
    back = from_json(to_json(g))
    assert back == g
    assert from_graph6(export_graph(g, "g6")).adj == g.adj


def test_json_is_compact_and_deterministic():
    g = distant_graph(make_ring("Z4"))
    data = to_json(g)
    assert data.endswith(b"\n") and b" " not in data.strip()
    assert data == to_json(distant_graph(make_ring("Z4")))


@pytest.mark.parametrize("bad", [b"", b"B", b"Bww", "B\x10", b"~?"])
def test_bad_graph6(bad):
    with pytest.raises(ValueError):
        from_graph6(bad)


def test_bad_json_and_format():
    with pytest.raises(ValueError):
        from_json('{"version": 2, "n": 0, "edges": []}')
    with pytest.raises(ValueError):
        export_graph(complete_graph(2), "gml")
