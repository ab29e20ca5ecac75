"""Finite simple graphs with bitset adjacency rows."""

from __future__ import annotations

from functools import reduce

import numpy as np


def _bits(mask: int):
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Undirected loopless graph on vertices ``0 .. n-1``.

    ``adj[i]`` is an int whose bit ``j`` is set when ``i`` and ``j`` are
    adjacent.  Graphs are immutable; equality compares adjacency and labels.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, adj, labels=None, check: bool = True):
        self.n = int(n)
        self.adj = tuple(int(r) for r in adj)
        self.labels = tuple(labels) if labels is not None else None
        if len(self.adj) != self.n:
            raise ValueError("need one adjacency row per vertex")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("need one label per vertex")
        if check:
            for i, row in enumerate(self.adj):
                if row >> i & 1:
                    raise ValueError(f"loop at vertex {i}")
                if row >> self.n:
                    raise ValueError(f"row {i} references a vertex >= n")
                for j in _bits(row):
                    if not self.adj[j] >> i & 1:
                        raise ValueError(f"edge {i}-{j} is not symmetric")

    @classmethod
    def from_edges(cls, n, edges, labels=None) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, adj, labels, check=False)

    @classmethod
    def from_matrix(cls, matrix, labels=None) -> "Graph":
        m = np.asarray(matrix, dtype=bool)
        if m.shape != (m.shape[0], m.shape[0]):
            raise ValueError("adjacency matrix must be square")
        if (m != m.T).any() or m.diagonal().any():
            raise ValueError("adjacency matrix must be symmetric with empty diagonal")
        adj = []
        for row in m:
            packed = np.packbits(row, bitorder="little").tobytes()
            adj.append(int.from_bytes(packed, "little"))
        return cls(m.shape[0], adj, labels, check=False)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.adj, self.labels) == (other.n, other.adj, other.labels)

    def __hash__(self):
        return hash((self.n, self.adj))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, i: int):
        return _bits(self.adj[i])

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def degrees(self):
        return [self.degree(i) for i in range(self.n)]

    def regular_degree(self):
        """The common degree if the graph is regular, else ``None``."""
        ds = set(self.degrees())
        return ds.pop() if len(ds) == 1 else None

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self):
        """Sorted list of edges ``(i, j)`` with ``i < j``."""
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i] >> (i + 1) << (i + 1))]

    def is_clique(self, vertices) -> bool:
        vs = list(vertices)
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all((self.adj[v] | 1 << v) & mask == mask for v in vs)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, [full ^ row ^ (1 << i) for i, row in enumerate(self.adj)],
                     self.labels, check=False)

    def induced(self, vertices) -> "Graph":
        """Subgraph induced on ``vertices`` (renumbered in the given order)."""
        vs = list(vertices)
        pos = {v: k for k, v in enumerate(vs)}
        adj = []
        for v in vs:
            row = 0
            for u in _bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            adj.append(row)
        labels = [self.labels[v] for v in vs] if self.labels else None
        return Graph(len(vs), adj, labels, check=False)

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        for i, row in enumerate(self.adj):
            m[i, _bits(row)] = True
        return m

    def relabel(self, labels) -> "Graph":
        return Graph(self.n, self.adj, labels, check=False)

    def components(self):
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(_bits(comp))
        return comps

    def eccentricity(self, s: int):
        """Largest BFS distance from ``s``; ``None`` if the graph is disconnected."""
        reach = frontier = 1 << s
        full = (1 << self.n) - 1
        dist = 0
        while reach != full:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~reach
            if not frontier:
                return None
            reach |= frontier
            dist += 1
        return dist

    def diameter(self):
        ecc = [self.eccentricity(v) for v in range(self.n)]
        return None if None in ecc else max(ecc, default=0)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << i) for i in range(n)], check=False)


def tensor_product(graphs) -> Graph:
    """Tensor (categorical) product; vertex ``(v1, ..., vk)`` is numbered row-major."""
    graphs = list(graphs)
    if not graphs or any(g.n == 0 for g in graphs):
        raise ValueError("tensor product needs nonempty factors")
    if len(graphs) == 1:
        return graphs[0]
    matrix = reduce(np.kron, [g.adjacency_matrix().astype(np.uint8) for g in graphs])
    labels = None
    if all(g.labels for g in graphs):
        labels = [""]
        for g in graphs:
            labels = [f"{a},{b}" if a else b for a in labels for b in g.labels]
        labels = [f"({x})" for x in labels]
    return Graph.from_matrix(matrix.astype(bool), labels)


def complete_multipartite(parts: int, part_size: int) -> Graph:
    """K_{s,...,s} with ``parts`` parts; part ``j`` holds vertices ``j*s .. j*s+s-1``."""
    n = parts * part_size
    full = (1 << n) - 1
    adj = []
    for v in range(n):
        j = v // part_size
        block = ((1 << part_size) - 1) << (j * part_size)
        adj.append(full & ~block)
    return Graph(n, adj, check=False)


def is_complete_multipartite(g: Graph):
    """``(part count, part size)`` if ``g`` is complete multipartite with equal parts.

    The parts are the connected components of the complement, each of which
    must itself be complete there.
    """
    if g.n == 0:
        return None
    h = g.complement()
    comps = h.components()
    sizes = {len(c) for c in comps}
    if len(sizes) != 1:
        return None
    if not all(h.is_clique(c) for c in comps):
        return None
    return len(comps), sizes.pop()
