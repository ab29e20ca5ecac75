"""The Grassmannian G(n, 2n, q) as a model of P(M_n(q)).

Subspaces are held in reduced row-echelon form, spreads and parallelisms
are found by exact cover, and GL(2n, q) acts on everything through
permutations of the canonical subspace list.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations, product

from . import linalg
from .cliques import CliquePartition, cliques_of_size
from .errors import CapExceededError, RinglineError
from .exact_cover import exact_covers
from .graph import Graph
from .ring import FiniteRing, unit_mask

SUBSPACE_CAP = 100_000


def gaussian_binomial(top: int, bottom: int, q: int) -> int:
    """Number of ``bottom``-dimensional subspaces of a ``top``-dimensional space over F(q)."""
    if not 0 <= bottom <= top:
        return 0
    num = den = 1
    for i in range(bottom):
        num *= q ** top - q ** i
        den *= q ** bottom - q ** i
    return num // den


def gl_order(d: int, q: int) -> int:
    out = 1
    for i in range(d):
        out *= q ** d - q ** i
    return out


@dataclass(frozen=True, order=True)
class Subspace:
    """A subspace of V(ambient_dim, q) given by its reduced row-echelon basis."""

    basis: tuple
    q: int = dc_field(compare=False)
    ambient_dim: int = dc_field(compare=False)

    @classmethod
    def from_rows(cls, rows, q: int) -> "Subspace":
        rows = [tuple(int(x) for x in r) for r in rows]
        if not rows:
            raise ValueError("need at least one row")
        return cls(linalg.rref(rows, q), q, len(rows[0]))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def bitrows(self):
        """Basis rows bit-packed (F(2) only)."""
        if self.q != 2:
            raise ValueError("bit-packed rows exist only over F(2)")
        return tuple(linalg.pack(r) for r in self.basis)

    def vectors(self) -> frozenset:
        return linalg.span_codes(self.basis, self.q)

    def label(self) -> str:
        sep = "" if self.q <= 10 else ","
        return "/".join(sep.join(str(x) for x in r) for r in self.basis)

    def __repr__(self):
        return f"<{self.label()}>"

    def act(self, g) -> "Subspace":
        """Image under a matrix acting on row vectors from the right."""
        return Subspace.from_rows(linalg.mat_mul(self.basis, g, self.q), self.q)


def _same_space(X, Y):
    if X.q != Y.q or X.ambient_dim != Y.ambient_dim:
        raise ValueError(f"subspaces live in different spaces: V({X.ambient_dim},{X.q}) "
                         f"and V({Y.ambient_dim},{Y.q})")


def is_complementary(X: Subspace, Y: Subspace) -> bool:
    """True iff ``X + Y`` is the whole space and the sum is direct."""
    _same_space(X, Y)
    if X.dim + Y.dim != X.ambient_dim:
        return False
    return linalg.rank(X.basis + Y.basis, X.q) == X.ambient_dim


def is_adjacent(X: Subspace, Y: Subspace) -> bool:
    """Grassmann adjacency: ``dim(X + Y) = dim X + 1`` for equal-dimension ``X, Y``."""
    _same_space(X, Y)
    if X.dim != Y.dim:
        raise ValueError("adjacency needs subspaces of equal dimension")
    return linalg.rank(X.basis + Y.basis, X.q) == X.dim + 1


def _rref_matrices(n: int, d: int, q: int):
    """All n x d matrices in reduced row-echelon form of full rank n."""
    for pivots in combinations(range(d), n):
        free = [(i, j) for i in range(n) for j in range(pivots[i] + 1, d) if j not in pivots]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * d for _ in range(n)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(n: int, q: int, ambient_dim: int | None = None):
    """All n-dimensional subspaces of V(2n, q) (or of V(ambient_dim, q)), sorted."""
    d = 2 * n if ambient_dim is None else ambient_dim
    count = gaussian_binomial(d, n, q)
    if count > SUBSPACE_CAP:
        raise CapExceededError(f"G({n},{d},{q}) has {count} subspaces (cap {SUBSPACE_CAP})")
    return sorted(Subspace(b, q, d) for b in _rref_matrices(n, d, q))


@dataclass(frozen=True)
class Spread:
    """A set of n-subspaces covering every nonzero vector exactly once."""

    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class Parallelism:
    """A partition of all n-subspaces into spreads."""

    spreads: tuple

    def __post_init__(self):
        spreads = tuple(s if isinstance(s, Spread) else Spread(tuple(s)) for s in self.spreads)
        object.__setattr__(self, "spreads", tuple(sorted(spreads, key=lambda s: s.members)))

    def __len__(self):
        return len(self.spreads)

    def __iter__(self):
        return iter(self.spreads)


class Grassmannian:
    """Shared, immutable data for G(n, 2n, q): subspaces, vector sets, graph, spreads."""

    def __init__(self, n: int, q: int):
        self.n, self.q, self.dim = n, q, 2 * n
        self.subspaces = enumerate_subspaces(n, q)
        self.index = {X: i for i, X in enumerate(self.subspaces)}
        self.vector_sets = [X.vectors() for X in self.subspaces]
        self._cache = {}

    def __repr__(self):
        return f"Grassmannian(n={self.n}, q={self.q})"

    def __len__(self):
        return len(self.subspaces)

    def indices(self, members):
        return tuple(sorted(self.index[X] for X in members))

    @property
    def spread_size(self) -> int:
        return self.q ** self.n + 1

    def graph(self) -> Graph:
        """Distant graph: complementary subspaces are adjacent."""
        if "graph" not in self._cache:
            N = len(self.subspaces)
            masks = []
            for vs in self.vector_sets:
                m = 0
                for c in vs:
                    m |= 1 << c
                masks.append(m & ~1)
            adj = [0] * N
            for i in range(N):
                for j in range(i + 1, N):
                    if not masks[i] & masks[j]:
                        adj[i] |= 1 << j
                        adj[j] |= 1 << i
            self._cache["graph"] = Graph(N, adj, [X.label() for X in self.subspaces], check=False)
        return self._cache["graph"]

    def spread_indices(self, limit=None, node_budget=None):
        """Spreads as sorted index tuples, by exact cover of the nonzero vectors."""
        key = ("spreads", limit)
        if key not in self._cache:
            nonzero = range(1, self.q ** self.dim)
            rows = [sorted(c for c in vs if c) for vs in self.vector_sets]
            sols = exact_covers(nonzero, rows, limit=limit, node_budget=node_budget)
            self._cache[key] = sorted(tuple(s) for s in sols)
        return self._cache[key]

    def parallelism_indices(self, node_budget=None, limit=None):
        """Parallelisms as sorted tuples of indices into :meth:`spread_indices`."""
        key = ("parallelisms", limit)
        if key not in self._cache:
            spreads = self.spread_indices()
            sols = exact_covers(range(len(self.subspaces)), spreads, limit=limit,
                                node_budget=node_budget)
            self._cache[key] = sorted(tuple(s) for s in sols)
        return self._cache[key]

    def spread(self, idx) -> Spread:
        return Spread(tuple(self.subspaces[i] for i in idx))

    def parallelism_from_spread_indices(self, sol) -> Parallelism:
        spreads = self.spread_indices()
        return Parallelism(tuple(self.spread(spreads[k]) for k in sol))

    def subspace_permutation(self, g):
        """Permutation of the subspace list induced by the matrix ``g``."""
        return tuple(self.index[X.act(g)] for X in self.subspaces)


@lru_cache(maxsize=None)
def grassmannian(n: int, q: int) -> Grassmannian:
    return Grassmannian(n, q)


def grassmann_distant_graph(n: int, q: int) -> Graph:
    return grassmannian(n, q).graph()


def enumerate_spreads(n: int, q: int, limit=None, node_budget=None):
    """All spreads of V(2n, q), in canonical order."""
    G = grassmannian(n, q)
    return [G.spread(s) for s in G.spread_indices(limit=limit, node_budget=node_budget)]


def enumerate_parallelisms(n: int, q: int, node_budget=None, limit=None):
    """All parallelisms of V(2n, q), in canonical order.

    Full enumeration is meant for (n, q) = (2, 2); pass ``node_budget`` or
    ``limit`` for anything larger.
    """
    G = grassmannian(n, q)
    return [G.parallelism_from_spread_indices(s)
            for s in G.parallelism_indices(node_budget=node_budget, limit=limit)]


def is_spread(members, n: int, q: int) -> bool:
    """Members are n-subspaces of V(2n, q) covering each nonzero vector exactly once."""
    seen = set()
    total = 0
    for X in members:
        if X.q != q or X.ambient_dim != 2 * n or X.dim != n:
            return False
        vs = X.vectors() - {0}
        total += len(vs)
        seen |= vs
    return total == len(seen) == q ** (2 * n) - 1


def check_parallelism(spreads, n: int, q: int):
    """Validate a candidate parallelism given as a list of member lists.

    Returns ``(ok, message)``; the message names the first problem found.
    """
    G = grassmannian(n, q)
    seen = {}
    for k, members in enumerate(spreads):
        if len(set(members)) != len(members):
            return False, f"spread {k + 1} repeats a subspace"
        if not is_spread(members, n, q):
            return False, f"spread {k + 1} is not a spread"
        for X in members:
            if X in seen:
                return False, (f"subspace {X.label()} appears in spreads "
                               f"{seen[X] + 1} and {k + 1}")
            seen[X] = k
    missing = [X for X in G.subspaces if X not in seen]
    if missing:
        return False, f"{len(missing)} subspaces uncovered, first {missing[0].label()}"
    return True, "ok"


def partition_of_graph(p: Parallelism, n: int, q: int) -> CliquePartition:
    """The clique partition of the Grassmann distant graph that a parallelism is."""
    G = grassmannian(n, q)
    return CliquePartition(tuple(G.indices(s.members) for s in p.spreads))


# ------------------------------------------------------------ P(M_n(q))

def _field_order(R: FiniteRing):
    if R.kind not in ("GF", "Z") or int(unit_mask(R).sum()) != R.size - 1:
        return None
    return R.size


def point_to_subspace(point) -> Subspace:
    """Row space of ``[A | B]`` for a point ``M_n(q)(A, B)``."""
    R = point.ring
    q = _field_order(R.factors[0]) if R.kind == "M" and R.factors else None
    if q is None:
        raise RinglineError(f"{R.label} is not a full matrix ring over a field")
    A, B = (R.matrix_entries(x) for x in point.canonical)
    rows = [tuple(a) + tuple(b) for a, b in zip(A, B)]
    X = Subspace.from_rows(rows, q)
    if X.dim != len(rows):
        raise RinglineError(f"{point!r} does not span an {len(rows)}-dimensional subspace")
    return X


# ------------------------------------------------------------ pair analysis

@dataclass
class PairAnalysis:
    """Cross cliques between the spreads of one parallelism of G(2, 4, 2)-like spaces.

    ``pair_cliques[(i, j)]`` holds the largest cliques of the distant graph
    meeting both spreads ``i`` and ``j``; ``triple_kinds`` classifies the
    three pairwise cross cliques of each spread triple; ``lines`` are the
    triples whose cross cliques are pairwise disjoint.
    """

    pair_clique_size: dict
    pair_cliques: dict
    triple_kinds: dict
    lines: list
    is_fano: bool

    def kind_counts(self):
        out = {}
        for kind in self.triple_kinds.values():
            out[kind] = out.get(kind, 0) + 1
        return out


def is_projective_plane(points, lines) -> bool:
    """Every line has k+1 points, every two points share exactly one line, k^2+k+1 of each."""
    points = list(points)
    lines = [frozenset(L) for L in lines]
    if not lines or len(set(lines)) != len(lines):
        return False
    k = len(lines[0]) - 1
    if k < 2 or any(len(L) != k + 1 for L in lines):
        return False
    if len(points) != k * k + k + 1 or len(lines) != len(points):
        return False
    for a, b in combinations(points, 2):
        if sum(1 for L in lines if a in L and b in L) != 1:
            return False
    return True


def analyze_partition_pairs(p: Parallelism, n: int = 2, q: int = 2) -> PairAnalysis:
    ok, msg = check_parallelism([s.members for s in p.spreads], n, q)
    if not ok:
        raise ValueError(f"invalid parallelism: {msg}")
    G = grassmannian(n, q)
    graph = G.graph()
    blocks = [G.indices(s.members) for s in p.spreads]
    sizes, cliques = {}, {}
    for i, j in combinations(range(len(blocks)), 2):
        A, B = set(blocks[i]), set(blocks[j])
        union = sorted(A | B)
        sub = graph.induced(union)
        best, found = 0, []
        for k in range(2, len(union) + 1):
            mixed = [tuple(union[v] for v in c) for c in cliques_of_size(sub, k)]
            mixed = [c for c in mixed if not set(c) <= A and not set(c) <= B]
            if not mixed:
                break
            best, found = k, mixed
        sizes[(i, j)] = best
        cliques[(i, j)] = found
    kinds = {}
    for i, j, k in combinations(range(len(blocks)), 3):
        trio = [cliques[(i, j)], cliques[(i, k)], cliques[(j, k)]]
        if any(len(c) != 1 for c in trio):
            kinds[(i, j, k)] = "ambiguous"
            continue
        sets = [set(c[0]) for c in trio]
        meets = [len(a & b) for a, b in combinations(sets, 2)]
        if all(m == 0 for m in meets):
            kinds[(i, j, k)] = "disjoint"
        elif all(m == 1 for m in meets):
            kinds[(i, j, k)] = "common-vertex"
        else:
            kinds[(i, j, k)] = "other"
    lines = [t for t, kind in kinds.items() if kind == "disjoint"]
    return PairAnalysis(sizes, cliques, kinds, lines,
                        is_projective_plane(range(len(blocks)), lines))
