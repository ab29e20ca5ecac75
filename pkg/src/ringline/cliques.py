"""Cliques and clique partitions of bitset graphs.

A clique partition here always means a partition of the vertex set into
vertex-disjoint maximum cliques, matching how the distant-graph results
are phrased (all maximal cliques of a distant graph are maximum).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_cover import exact_covers
from .graph import Graph, _bits

DEFAULT_NODE_LIMIT = 5_000_000


def _color_bound(g: Graph, cand: int) -> int:
    """Greedy coloring size of the candidate set (an upper bound on its clique number)."""
    colors = 0
    while cand:
        colors += 1
        avail = cand
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~g.adj[v] & ~(1 << v)
            cand &= ~(1 << v)
    return colors


def clique_number(g: Graph) -> int:
    """Size of a maximum clique, by branch and bound with a coloring bound."""
    best = 0

    def expand(size, cand):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _color_bound(g, cand) <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & g.adj[v])

    expand(0, (1 << g.n) - 1)
    return best


def cliques_of_size(g: Graph, k: int):
    """All cliques with exactly ``k`` vertices, as ascending tuples in lexicographic order."""
    out = []

    def expand(chosen, cand):
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        need = k - len(chosen)
        if cand.bit_count() < need or _color_bound(g, cand) < need:
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            chosen.append(v)
            expand(chosen, cand & g.adj[v])
            chosen.pop()
            if cand.bit_count() < need:
                return

    expand([], (1 << g.n) - 1)
    return out


def enumerate_max_cliques(g: Graph):
    """``(omega, cliques)``: the clique number and every maximum clique, sorted."""
    omega = clique_number(g)
    return omega, cliques_of_size(g, omega)


def maximal_cliques(g: Graph):
    """All maximal cliques (Bron-Kerbosch with Tomita pivoting), sorted."""
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(_bits(p | x), key=lambda u: (p & g.adj[u]).bit_count())
        for v in _bits(p & ~g.adj[pivot]):
            bk(r + [v], p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk([], (1 << g.n) - 1, 0)
    return sorted(out)


@dataclass(frozen=True)
class CliquePartition:
    """An unordered set of vertex blocks, stored canonically (sorted blocks, sorted tuple)."""

    blocks: tuple

    def __post_init__(self):
        canon = tuple(sorted(tuple(sorted(int(v) for v in b)) for b in self.blocks))
        object.__setattr__(self, "blocks", canon)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    @property
    def block_sizes(self):
        return sorted({len(b) for b in self.blocks})

    @property
    def vertex_count(self) -> int:
        return sum(len(b) for b in self.blocks)


@dataclass(frozen=True)
class PartitionCheck:
    valid: bool
    message: str = "ok"
    block: int | None = None

    def __bool__(self):
        return self.valid


def verify_partition(g: Graph, p: CliquePartition) -> PartitionCheck:
    """Check that ``p`` partitions ``g`` into vertex-disjoint maximal cliques.

    Never raises on bad input; the first violated block is reported.
    """
    seen = 0
    for k, block in enumerate(p.blocks):
        if not block:
            return PartitionCheck(False, f"block {k} is empty", k)
        mask = 0
        for v in block:
            if not 0 <= v < g.n:
                return PartitionCheck(False, f"block {k} has vertex {v} outside the graph", k)
            mask |= 1 << v
        if mask.bit_count() != len(block):
            return PartitionCheck(False, f"block {k} repeats a vertex", k)
        if seen & mask:
            v = _bits(seen & mask)[0]
            return PartitionCheck(False, f"block {k} overlaps an earlier block at vertex {v}", k)
        seen |= mask
        if not g.is_clique(block):
            bad = next((u, v) for u in block for v in block if u < v and not g.has_edge(u, v))
            return PartitionCheck(False, f"block {k} is not a clique: {bad[0]} and {bad[1]} "
                                         "are not adjacent", k)
        common = (1 << g.n) - 1
        for v in block:
            common &= g.adj[v]
        if common:
            v = _bits(common)[0]
            return PartitionCheck(False, f"block {k} is not maximal: vertex {v} extends it", k)
    if seen != (1 << g.n) - 1:
        v = _bits(((1 << g.n) - 1) & ~seen)[0]
        return PartitionCheck(False, f"vertex {v} is not covered")
    return PartitionCheck(True)


def partitions_into(g: Graph, cliques, limit=None, node_limit=DEFAULT_NODE_LIMIT):
    """Yield partitions of ``g`` into blocks drawn from ``cliques``."""
    cliques = list(cliques)
    for sol in exact_covers(range(g.n), cliques, limit=limit, node_budget=node_limit):
        yield CliquePartition(tuple(cliques[i] for i in sol))


def find_clique_partition(g: Graph, node_limit=DEFAULT_NODE_LIMIT):
    """A partition into maximum cliques, or ``None`` if the exhaustive search finds none."""
    _, cliques = enumerate_max_cliques(g)
    return next(partitions_into(g, cliques, limit=1, node_limit=node_limit), None)


def enumerate_clique_partitions(g: Graph, node_limit=DEFAULT_NODE_LIMIT):
    """Every partition of ``g`` into maximum cliques, in canonical order.

    Raises :class:`~ringline.errors.BudgetExceededError` past ``node_limit``
    search nodes.
    """
    _, cliques = enumerate_max_cliques(g)
    return sorted(set(partitions_into(g, cliques, node_limit=node_limit)),
                  key=lambda p: p.blocks)


def _pair_blocks(k1, k2):
    """Cyclic alignment of two cliques into ``max(s1, s2)`` rows of ``min(s1, s2)`` pairs."""
    s1, s2 = len(k1), len(k2)
    if s1 <= s2:
        return [[(k1[l], k2[(l + r) % s2]) for l in range(s1)] for r in range(s2)]
    return [[(k1[(l + r) % s1], k2[l]) for l in range(s2)] for r in range(s1)]


def product_partition(partitions, sizes=None) -> CliquePartition:
    """Partition of the tensor product built from one partition per factor.

    Factor ``i`` contributes ``m_i`` blocks of a common size ``s_i``; the
    result has ``prod(m_i) * prod(s_i) / min(s_i)`` blocks of size
    ``min(s_i)``.  Vertices are numbered row-major as in
    :func:`~ringline.graph.tensor_product`.  ``sizes`` gives each factor's
    vertex count (defaults to the number of vertices the partition covers).
    """
    partitions = list(partitions)
    if not partitions:
        raise ValueError("need at least one factor partition")
    for i, p in enumerate(partitions):
        if len(p.block_sizes) != 1:
            raise ValueError(f"factor {i} has blocks of unequal sizes {p.block_sizes}")
    sizes = list(sizes) if sizes is not None else [p.vertex_count for p in partitions]
    blocks = [list(b) for b in partitions[0].blocks]
    n_left = sizes[0]
    for p, n_right in zip(partitions[1:], sizes[1:]):
        combined = []
        for k1 in blocks:
            for k2 in p.blocks:
                for row in _pair_blocks(list(k1), list(k2)):
                    combined.append([u * n_right + v for u, v in row])
        blocks = combined
        n_left *= n_right
    return CliquePartition(tuple(tuple(b) for b in blocks))


def lift_partition(base: CliquePartition, fibers, base_graph: Graph | None = None) -> CliquePartition:
    """Lift a partition of G(R/J) to G(R) through the radical-projection fibers.

    ``fibers[j]`` lists the points of P(R) over base point ``j``.  Block
    ``k`` over a base block ``B`` takes the ``k``-th (canonically sorted)
    member of every fiber in ``B``, giving ``len(base) * |J|`` blocks.
    """
    fibers = [sorted(f) for f in fibers]
    sizes = {len(f) for f in fibers}
    if len(sizes) != 1:
        raise ValueError("fibers must all have the same size")
    if base_graph is not None:
        check = verify_partition(base_graph, base)
        if not check:
            raise ValueError(f"base is not a valid partition: {check.message}")
    else:
        covered = sorted(v for b in base.blocks for v in b)
        if covered != list(range(len(fibers))):
            raise ValueError("base blocks do not partition the fiber indices")
    j_size = sizes.pop()
    out = []
    for block in base.blocks:
        for k in range(j_size):
            out.append(tuple(fibers[j][k] for j in block))
    return CliquePartition(tuple(out))
