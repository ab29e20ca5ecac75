"""Acceptance criteria 1-10, each under its runtime bound.

Run ``pytest tests/test_acceptance.py`` for one PASS/FAIL line per criterion
in the terminal summary.
"""

import random
from itertools import combinations

import pytest

from conftest import SEED, TRIALS
from ringline import (analyze_partition_pairs, classify_orbits, clique_number, complete_graph,
                      distant_graph, enumerate_max_cliques, enumerate_parallelisms,
                      enumerate_spreads, grassmann_distant_graph, is_isomorphic, lift_partition,
                      load_fixture, make_ring, maximal_cliques, point_to_subspace,
                      product_partition, projective_line, radical_projection, tensor_product,
                      verify_classification, verify_fixture, verify_partition)
from ringline.cliques import find_clique_partition
from ringline.graph import is_complete_multipartite
from ringline.grassmannian import Parallelism, grassmannian
from ringline.isomorphism import verify_isomorphism
from ringline.pline import act, is_distant, rows_generate_module
from ringline.ring import jacobson_radical, radical_by_maximal_ideals


@pytest.mark.criterion(1, "P(M2(2)) and G(2,4,2): 35 vertices, 16-regular, omega 5")
def test_criterion_01_m2_graph(cold, stopwatch):
    with stopwatch(1.0) as w:
        g = distant_graph(make_ring("M2(GF(2))"))
        h = grassmann_distant_graph(2, 2)
        assert g.n == h.n == 35
        assert g.regular_degree() == h.regular_degree() == 16 == 2 ** (2 * 2)
        assert clique_number(g) == clique_number(h) == 5
        sizes = {len(c) for c in maximal_cliques(g)} | {len(c) for c in maximal_cliques(h)}
        assert sizes == {5}
        # the two descriptions are the same graph under point -> row space
        G = grassmannian(2, 2)
        perm = [G.index[point_to_subspace(p)] for p in projective_line(make_ring("M2(GF(2))"))]
        assert verify_isomorphism(g, h, perm)
    w.check()


@pytest.mark.criterion(2, "240 parallelisms of V(4,2), 7 spreads each")
def test_criterion_02_parallelism_census(cold, stopwatch):
    with stopwatch(60.0) as w:
        pars = enumerate_parallelisms(2, 2)
    w.check()
    assert len(pars) == 240
    assert len(set(pars)) == 240
    assert all(len(p) == 7 for p in pars)


@pytest.mark.criterion(3, "two GL(4,2) orbits of 120; table1 and table2 in different orbits")
def test_criterion_03_orbits(cold, stopwatch):
    with stopwatch(120.0) as w:
        pars = enumerate_parallelisms(2, 2)
        orbits = classify_orbits(pars, 2, 2)
        v1 = verify_fixture("table1", 2, 2)
        v2 = verify_fixture("table2", 2, 2)
    w.check()
    assert orbits.group_order == 20160
    assert orbits.sizes() == [120, 120]
    assert v1.valid and v2.valid
    assert v1.orbit is not None and v2.orbit is not None
    assert v1.orbit != v2.orbit


@pytest.mark.criterion(4, "table1: one 4-clique per spread pair, 7 disjoint triples form PG(2,2)")
def test_criterion_04_pair_analysis(cold, stopwatch):
    with stopwatch(5.0) as w:
        fx = load_fixture("table1", 2, 2)
        report = analyze_partition_pairs(Parallelism(tuple(tuple(s) for s in fx.spreads)))
    w.check()
    assert len(report.pair_cliques) == 21
    assert all(size == 4 for size in report.pair_clique_size.values())
    assert all(len(c) == 1 for c in report.pair_cliques.values())
    assert len(report.triple_kinds) == 35
    assert report.kind_counts() == {"disjoint": 7, "common-vertex": 28}
    lines = [set(t) for t in report.lines]
    assert len(lines) == 7 and all(len(L) == 3 for L in lines)
    for a, b in combinations(range(7), 2):
        assert sum(1 for L in lines if {a, b} <= L) == 1
    assert report.is_fano


def _brute_force_spreads():
    """All 5-sets of pairwise disjoint 2-subspaces of F2^4 (as sets of nonzero vectors)."""
    planes = sorted({frozenset((a, b, a ^ b)) for a in range(1, 16) for b in range(a + 1, 16)},
                    key=sorted)
    assert len(planes) == 35
    masks = [sum(1 << v for v in P) for P in planes]
    out = []
    for combo in combinations(range(35), 5):
        acc = 0
        for i in combo:
            if acc & masks[i]:
                break
            acc |= masks[i]
        else:
            out.append(frozenset(planes[i] for i in combo))
    return set(out)


@pytest.mark.criterion(5, "56 spreads of V(4,2), equal to the maximum cliques")
def test_criterion_05_spreads(cold, stopwatch):
    with stopwatch(5.0) as w:
        spreads = enumerate_spreads(2, 2)
        omega, cliques = enumerate_max_cliques(grassmann_distant_graph(2, 2))
    w.check()
    assert len(spreads) == 56
    oracle = _brute_force_spreads()
    assert len(oracle) == 56
    as_sets = {frozenset(frozenset(X.vectors() - {0}) for X in s) for s in spreads}
    assert as_sets == oracle
    G = grassmannian(2, 2)
    assert omega == 5
    assert sorted(cliques) == sorted(G.indices(s.members) for s in spreads)


@pytest.mark.criterion(6, "radical lifting: LT2(GF(2)) 6 blocks, Z4 = K(2,2,2) with 2 blocks")
def test_criterion_06_radical_lifting(cold, stopwatch):
    with stopwatch(1.0) as w:
        R = make_ring("LT2(GF(2))")
        g = distant_graph(R)
        phi = radical_projection(R)
        fibers = phi.fibers()
        base_graph = distant_graph(phi.quotient)
        lifted = lift_partition(find_clique_partition(base_graph), fibers, base_graph)
        check = verify_partition(g, lifted)

        Z = make_ring("Z4")
        gz = distant_graph(Z)
        phz = radical_projection(Z)
        bz = distant_graph(phz.quotient)
        lz = lift_partition(find_clique_partition(bz), phz.fibers(), bz)
        check_z = verify_partition(gz, lz)
    w.check()
    assert g.n == 18 and g.regular_degree() == 8
    assert [len(f) for f in fibers] == [2] * 9
    assert check and len(lifted) == 6 and lifted.block_sizes == [3]
    assert gz.n == 6 and is_complete_multipartite(gz) == (3, 2)
    assert check_z and len(lz) == 2


@pytest.mark.criterion(7, "tensor partitions with 3, 5, 9 blocks; G(Z2) x G(Z3) = G(Z6)")
def test_criterion_07_tensor(cold, stopwatch):
    with stopwatch(1.0) as w:
        results = []
        for sizes in ([3, 3], [3, 5], [3, 3, 3]):
            factors = [complete_graph(s) for s in sizes]
            parts = [find_clique_partition(f) for f in factors]
            p = product_partition(parts, sizes)
            results.append((len(p), bool(verify_partition(tensor_product(factors), p))))
        prod_graph = tensor_product([distant_graph(make_ring("Z2")), distant_graph(make_ring("Z3"))])
        perm = is_isomorphic(prod_graph, distant_graph(make_ring("Z6")))
    w.check()
    assert results == [(3, True), (5, True), (9, True)]
    assert perm is not None
    assert verify_isomorphism(prod_graph, distant_graph(make_ring("Z6")), perm)


@pytest.mark.criterion(8, "isomorphism criterion spot checks")
def test_criterion_08_isomorphism(cold, stopwatch):
    with stopwatch(5.0) as w:
        a = is_isomorphic(distant_graph(make_ring("Z4")), distant_graph(make_ring("Trunc(GF(2),2)")))
        b = is_isomorphic(distant_graph(make_ring("LT2(GF(3))")),
                          distant_graph(make_ring("UT2(GF(3))")))
        c = is_isomorphic(distant_graph(make_ring("Z8")), distant_graph(make_ring("LT2(GF(2))")))
    w.check()
    assert a is not None
    assert b is not None
    assert c is None


@pytest.mark.criterion(9, "classification for p=2: 3, 5, 6 graphs with both order-32 findings")
def test_criterion_09_classification(cold, stopwatch):
    with stopwatch(120.0) as w:
        reports = {k: verify_classification(2, k) for k in (3, 4, 5)}
    w.check()
    assert reports[3].graph_count == 3 and reports[3].pairwise_non_isomorphic
    assert reports[4].graph_count == 5 and reports[4].pairwise_non_isomorphic
    assert reports[5].graph_count == 6 and reports[5].pairwise_non_isomorphic
    assert reports[3].findings == [] and reports[4].findings == []
    kinds = {(f.item, f.kind) for f in reports[5].findings}
    assert kinds == {("p^5 #2", "model-only"), ("p^5 #6", "stated-vs-computed")}
    item6 = next(f for f in reports[5].findings if f.item == "p^5 #6")
    assert "stated 9, computed 36" in item6.message


CORPUS = ["Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z9", "Z12", "GF(4)", "GF(8)", "GF(9)",
          "Trunc(GF(2),2)", "Trunc(GF(2),3)", "Trunc(GF(3),2)", "Trunc(GF(4),2)",
          "LT2(GF(2))", "UT2(GF(2))", "LT2(GF(3))", "M2(GF(2))", "Z2xZ2", "Z4xGF(2)",
          "Z4xZ4", "Z2xZ2xZ2", "GF(2)xTrunc(GF(4),2)", "Z16"]


def _random_invertible(R, rng):
    while True:
        a, b, c, d = (rng.randrange(R.size) for _ in range(4))
        if rows_generate_module(R, a, b, c, d):
            return ((a, b), (c, d))


def _nil_radical(R):
    """x with rx nilpotent for every r: the largest nil left ideal."""
    out = set()
    for x in range(R.size):
        ok = True
        for r in range(R.size):
            y, seen = R.mul(r, x), set()
            while y != R.zero and y not in seen:
                seen.add(y)
                y = R.mul(y, R.mul(r, x))
            if y != R.zero:
                ok = False
                break
        if ok:
            out.add(x)
    return frozenset(out)


@pytest.mark.criterion(10, "property suites, 100 seeded trials each")
def test_criterion_10_properties(cold, stopwatch):
    rng = random.Random(SEED)
    rings = {s: make_ring(s) for s in CORPUS}
    with stopwatch(60.0) as w:
        # degree = |R| and |P(R)| = |P(R/J)| |J|
        for _ in range(TRIALS):
            R = rings[rng.choice(CORPUS)]
            g = distant_graph(R)
            assert g.degree(rng.randrange(g.n)) == R.size, R.label
            phi = radical_projection(R)
            assert g.n == len(phi.base_points) * len(jacobson_radical(R)), R.label
        # distant iff images distant under the radical projection
        for _ in range(TRIALS):
            R = rings[rng.choice(CORPUS)]
            pts, phi = projective_line(R), radical_projection(R)
            p, s = rng.choice(pts), rng.choice(pts)
            assert is_distant(p, s) == is_distant(phi[p], phi[s]), R.label
        # GL2(R) preserves the distant relation
        for _ in range(TRIALS):
            R = rings[rng.choice(CORPUS)]
            gamma = _random_invertible(R, rng)
            pts = projective_line(R)
            p, s = rng.choice(pts), rng.choice(pts)
            assert is_distant(p, s) == is_distant(act(p, gamma), act(s, gamma)), R.label
        # submodule intersection agrees with the invertible-matrix test on small rings
        small = [s for s in CORPUS if rings[s].size <= 16]
        for _ in range(TRIALS):
            R = rings[rng.choice(small)]
            pts = projective_line(R)
            p, s = rng.choice(pts), rng.choice(pts)
            (a, b), (c, d) = p.canonical, s.canonical
            assert is_distant(p, s) == rows_generate_module(R, a, b, c, d), R.label
        # Jacobson radical against the maximal-left-ideal intersection
        atoms = ["Z2", "Z3", "Z4", "Z5", "Z8", "Z9", "GF(4)", "GF(8)", "Trunc(GF(2),2)",
                 "Trunc(GF(2),3)", "LT2(GF(2))", "UT2(GF(2))", "M2(GF(2))", "Z16", "Z7"]
        for _ in range(TRIALS):
            spec = rng.choice(atoms)
            while rng.random() < 0.5:
                other = rng.choice(atoms)
                if make_ring(spec).size * make_ring(other).size > 64:
                    break
                spec += "x" + other
            R = make_ring(spec)
            J = frozenset(jacobson_radical(R).members)
            assert J == radical_by_maximal_ideals(R), spec
            assert J == _nil_radical(R), spec
    w.check()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
