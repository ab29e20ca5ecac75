import random
from itertools import combinations

import networkx as nx
import pytest

from conftest import SEED
from ringline import make_ring
from ringline.cliques import (CliquePartition, clique_number, cliques_of_size,
                              enumerate_clique_partitions, enumerate_max_cliques,
                              find_clique_partition, lift_partition, maximal_cliques,
                              product_partition, verify_partition)
from ringline.errors import BudgetExceededError
from ringline.exact_cover import count_exact_covers, exact_covers
from ringline.graph import (Graph, complete_graph, complete_multipartite,
                            is_complete_multipartite, tensor_product)
from ringline.isomorphism import is_isomorphic, verify_isomorphism
from ringline.pline import distant_graph, radical_projection


def nxg(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(n, p, rng):
    return Graph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


RING_GRAPHS = ["Z4", "Z6", "Z8", "LT2(GF(2))", "M2(GF(2))", "Z4xGF(2)", "Trunc(GF(4),2)",
               "GF(2)xGF(3)"]


# -------------------------------------------------------------------- graph

def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])                       # asymmetric
    with pytest.raises(ValueError):
        Graph(1, [1])                             # loop
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_matrix([[0, 1], [0, 0]])


def test_graph_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.neighbors(1) == [0, 2]
    assert g.degrees() == [1, 2, 2, 1] and g.regular_degree() is None
    assert g.num_edges == 3
    assert g.diameter() == 3 and g.eccentricity(1) == 2
    assert g.complement().edges() == [(0, 2), (0, 3), (1, 3)]
    assert g.induced([3, 2, 1]).edges() == [(0, 1), (1, 2)]
    assert (Graph.from_matrix(g.adjacency_matrix()).adj == g.adj)
    assert Graph.from_edges(4, [(0, 1)]).components() == [[0, 1], [2], [3]]
    assert Graph.from_edges(3, [(0, 1)]).diameter() is None


def test_tensor_product_against_networkx():
    rng = random.Random(SEED)
    for _ in range(10):
        a, b = random_graph(5, 0.5, rng), random_graph(4, 0.6, rng)
        mine = tensor_product([a, b])
        theirs = nx.tensor_product(nxg(a), nxg(b))
        relabel = {(u, v): u * b.n + v for u, v in theirs.nodes}
        assert set(mine.edges()) == {tuple(sorted((relabel[x], relabel[y])))
                                     for x, y in theirs.edges()}


def test_tensor_labels():
    g = tensor_product([distant_graph(make_ring("Z2")), distant_graph(make_ring("Z3"))])
    assert g.n == 12 and g.labels[0] == "((0,1),(0,1))"


def test_complete_multipartite():
    g = complete_multipartite(3, 2)
    assert nx.is_isomorphic(nxg(g), nx.complete_multipartite_graph(2, 2, 2))
    assert is_complete_multipartite(g) == (3, 2)
    assert is_complete_multipartite(complete_graph(4)) == (4, 1)
    assert is_complete_multipartite(Graph.from_edges(4, [(0, 1), (2, 3)])) is None


# ------------------------------------------------------------------ cliques

@pytest.mark.parametrize("spec", RING_GRAPHS)
def test_clique_counts_against_networkx(spec):
    g = distant_graph(make_ring(spec))
    h = nxg(g)
    theirs = sorted(tuple(sorted(c)) for c in nx.find_cliques(h))
    assert maximal_cliques(g) == theirs
    omega = max(len(c) for c in theirs)
    assert clique_number(g) == omega
    assert enumerate_max_cliques(g) == (omega, sorted(c for c in theirs if len(c) == omega))


def test_random_cliques_against_networkx():
    rng = random.Random(SEED + 1)
    for _ in range(30):
        g = random_graph(rng.randrange(1, 18), rng.random(), rng)
        cl = list(nx.find_cliques(nxg(g)))
        assert clique_number(g) == max(len(c) for c in cl)
        assert maximal_cliques(g) == sorted(tuple(sorted(c)) for c in cl)
        k = rng.randrange(1, 5)
        brute = [c for c in combinations(range(g.n), k) if g.is_clique(c)]
        assert cliques_of_size(g, k) == brute


def test_m2_clique_facts():
    g = distant_graph(make_ring("M2(GF(2))"))
    omega, cl = enumerate_max_cliques(g)
    assert (omega, len(cl)) == (5, 56)
    assert {len(c) for c in maximal_cliques(g)} == {5}


def test_verify_partition_diagnostics():
    g = distant_graph(make_ring("Z4"))            # K(2,2,2)
    good = find_clique_partition(g)
    assert verify_partition(g, good)
    b = list(good.blocks)
    assert not verify_partition(g, CliquePartition(b[:1]))
    overlap = CliquePartition((b[0], (b[0][0],) + b[1][1:]))
    assert "overlaps" in verify_partition(g, overlap).message
    non_clique = [v for v in range(6) if not g.has_edge(b[0][0], v) and v != b[0][0]][0]
    bad = CliquePartition(((b[0][0], non_clique),))
    check = verify_partition(g, bad)
    assert not check and "not a clique" in check.message and check.block == 0
    sub = CliquePartition(((b[0][0], b[0][1]),))
    assert "not maximal" in verify_partition(g, sub).message
    assert "outside" in verify_partition(g, CliquePartition(((0, 9),))).message


def test_z4_partitions():
    g = distant_graph(make_ring("Z4"))
    parts = enumerate_clique_partitions(g)
    assert len(parts) == 4 and all(len(p) == 2 for p in parts)
    assert all(verify_partition(g, p) for p in parts)


def test_m2_partition_count():
    parts = enumerate_clique_partitions(distant_graph(make_ring("M2(GF(2))")))
    assert len(parts) == 240


def test_partition_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_clique_partitions(distant_graph(make_ring("M2(GF(2))")), node_limit=50)


def test_no_partition():
    # a path on three vertices: maximum cliques are edges, which cannot tile 3 vertices
    assert find_clique_partition(Graph.from_edges(3, [(0, 1), (1, 2)])) is None


@pytest.mark.parametrize("sizes, blocks", [([3, 3], 3), ([3, 5], 5), ([3, 3, 3], 9),
                                           ([2, 4], 4), ([4, 3], 4)])
def test_product_partition_complete(sizes, blocks):
    factors = [complete_graph(s) for s in sizes]
    p = product_partition([find_clique_partition(f) for f in factors], sizes)
    assert len(p) == blocks
    assert verify_partition(tensor_product(factors), p)


def test_product_partition_multi_block():
    # G(Z4) has 2 blocks of 3, G(LT2(GF(2))) 6 blocks of 3: product has 2*6*3*3/3 = 36
    a, b = distant_graph(make_ring("Z4")), distant_graph(make_ring("LT2(GF(2))"))
    p = product_partition([find_clique_partition(a), find_clique_partition(b)], [a.n, b.n])
    assert len(p) == 36
    assert verify_partition(tensor_product([a, b]), p)


def test_product_partition_unequal_blocks():
    with pytest.raises(ValueError):
        product_partition([CliquePartition(((0, 1), (2,)))])


@pytest.mark.parametrize("spec, blocks", [("Z4", 2), ("Z8", 4), ("LT2(GF(2))", 6),
                                          ("LT2(GF(3))", 12), ("Z4xZ4", 12),
                                          ("Trunc(GF(4),2)", 4)])
def test_lift_partition(spec, blocks):
    R = make_ring(spec)
    phi = radical_projection(R)
    base_graph = distant_graph(phi.quotient)
    lifted = lift_partition(find_clique_partition(base_graph), phi.fibers(), base_graph)
    assert len(lifted) == blocks
    assert verify_partition(distant_graph(R), lifted)


def test_lift_rejects_bad_base():
    with pytest.raises(ValueError):
        lift_partition(CliquePartition(((0,),)), [[0, 1], [2, 3]])
    with pytest.raises(ValueError):
        lift_partition(CliquePartition(((0, 1),)), [[0, 1], [2]])


# -------------------------------------------------------------- exact cover

def _brute_covers(columns, rows):
    out = []
    for r in range(1, len(rows) + 1):
        for combo in combinations(range(len(rows)), r):
            cells = [c for i in combo for c in rows[i]]
            if sorted(cells) == sorted(columns):
                out.append(list(combo))
    return sorted(out)


def test_exact_cover_knuth_example():
    rows = [[2, 4, 5], [0, 3, 6], [1, 2, 5], [0, 3], [1, 6], [3, 4, 6]]
    assert list(exact_covers(range(7), rows)) == [[0, 3, 4]]


def test_exact_cover_random_against_brute_force():
    rng = random.Random(SEED + 2)
    for _ in range(40):
        cols = list(range(rng.randrange(1, 8)))
        rows = [sorted(rng.sample(cols, rng.randrange(1, len(cols) + 1)))
                for _ in range(rng.randrange(1, 10))]
        rows = [r for i, r in enumerate(rows) if r not in rows[:i]]
        assert sorted(exact_covers(cols, rows)) == _brute_covers(cols, rows)


def test_exact_cover_limit_budget_and_errors():
    rows = [[0], [1], [0, 1]]
    assert count_exact_covers([0, 1], rows) == 2
    assert len(list(exact_covers([0, 1], rows, limit=1))) == 1
    with pytest.raises(BudgetExceededError) as exc:
        list(exact_covers(range(12), [[i] for i in range(12)] * 2, node_budget=5))
    assert exc.value.nodes == 6
    with pytest.raises(ValueError):
        list(exact_covers([0], [[1]]))


# ------------------------------------------------------------- isomorphism

def test_isomorphism_random_relabelings():
    rng = random.Random(SEED + 3)
    for _ in range(25):
        g = random_graph(rng.randrange(2, 20), rng.random(), rng)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = Graph.from_edges(g.n, [(perm[i], perm[j]) for i, j in g.edges()])
        found = is_isomorphic(g, h)
        assert found is not None and verify_isomorphism(g, h, found)


def test_isomorphism_against_networkx():
    rng = random.Random(SEED + 4)
    for _ in range(60):
        n = rng.randrange(1, 8)
        g, h = random_graph(n, 0.5, rng), random_graph(n, 0.5, rng)
        assert (is_isomorphic(g, h) is not None) == nx.is_isomorphic(nxg(g), nxg(h))


def test_isomorphism_regular_hard_cases():
    # two 3-regular graphs on 6 vertices: K(3,3) and the prism
    k33 = Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                 (0, 3), (1, 4), (2, 5)])
    assert is_isomorphic(k33, prism) is None
    assert is_isomorphic(distant_graph(make_ring("Z4")), complete_multipartite(3, 2)) is not None


@pytest.mark.parametrize("a, b, iso", [
    ("Z4", "Trunc(GF(2),2)", True), ("LT2(GF(2))", "UT2(GF(2))", True),
    ("LT2(GF(3))", "UT2(GF(3))", True), ("Z8", "LT2(GF(2))", False),
    ("Z6", "GF(2)xGF(3)", True), ("Z9", "Trunc(GF(3),2)", True), ("Z8", "Trunc(GF(2),3)", True),
    ("Z4xZ4", "Z16", False), ("Z4xGF(2)", "LT2(GF(2))", True),
])
def test_isomorphism_criterion(a, b, iso):
    g, h = distant_graph(make_ring(a)), distant_graph(make_ring(b))
    assert (is_isomorphic(g, h) is not None) == iso
    if g.n == h.n and g.n <= 40:
        assert nx.is_isomorphic(nxg(g), nxg(h)) == iso


def test_verify_isomorphism_rejects():
    g = complete_graph(3)
    assert not verify_isomorphism(g, g, [0, 0, 1])
    assert not verify_isomorphism(g, g, None)
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert not verify_isomorphism(p3, p3, [1, 0, 2])
