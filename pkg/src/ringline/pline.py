"""The projective line over a finite ring and its distant graph.

Pairs ``(a, b)`` of the free left module are encoded internally as the
integer ``a * |R| + b``; points are free cyclic submodules generated by
unimodular pairs and are identified by their full element set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .errors import CapExceededError, RingMismatchError
from .graph import Graph
from .ring import FiniteRing, jacobson_radical, quotient_ring

PLINE_CAP = 4096


@dataclass(frozen=True)
class CyclicSubmodule:
    """``R(a, b) = {(r*a, r*b) : r in R}`` stored as a set of pair codes."""

    ring: FiniteRing = field(repr=False, compare=False)
    generator: tuple
    codes: frozenset = field(repr=False)

    @property
    def free(self) -> bool:
        return len(self.codes) == self.ring.size

    @property
    def elements(self):
        N = self.ring.size
        return sorted(divmod(c, N) for c in self.codes)

    def __len__(self):
        return len(self.codes)


class ProjectivePoint:
    """A point of P(R): a free cyclic submodule with its least unimodular generator."""

    __slots__ = ("ring", "canonical", "submodule", "index")

    def __init__(self, ring, canonical, submodule, index=None):
        self.ring = ring
        self.canonical = canonical
        self.submodule = submodule
        self.index = index

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.ring is other.ring and self.submodule.codes == other.submodule.codes

    def __hash__(self):
        return hash(self.submodule.codes)

    def __repr__(self):
        a, b = self.canonical
        return f"R({self.ring.element_label(a)}, {self.ring.element_label(b)})"

    def label(self) -> str:
        a, b = self.canonical
        return f"({self.ring.element_label(a)},{self.ring.element_label(b)})"


def _orbit_codes(ring: FiniteRing, a: int, b: int) -> np.ndarray:
    allr = ring.elements()
    return np.asarray(ring.mul(allr, a)) * ring.size + np.asarray(ring.mul(allr, b))


def _right_ideal_masks(ring: FiniteRing) -> np.ndarray:
    """``masks[b, v]`` is True iff ``v`` lies in the right ideal ``bR``."""
    if "right_ideal_masks" not in ring._cache:
        N = ring.size
        allr = ring.elements()
        masks = np.zeros((N, N), dtype=bool)
        for b in range(N):
            masks[b, ring.mul(b, allr)] = True
        ring._cache["right_ideal_masks"] = masks
    return ring._cache["right_ideal_masks"]


def is_unimodular(ring: FiniteRing, a, b) -> bool:
    """True iff ``a*x + b*y = 1`` for some ``x, y``."""
    a, b = int(a), int(b)
    allr = ring.elements()
    in_bR = np.zeros(ring.size, dtype=bool)
    in_bR[ring.mul(b, allr)] = True
    return bool(in_bR[ring.sub(ring.one, ring.mul(a, allr))].any())


def unimodular_matrix(ring: FiniteRing) -> np.ndarray:
    """Boolean ``N x N`` matrix of unimodular pairs."""
    if "unimodular" not in ring._cache:
        if ring.size > PLINE_CAP:
            raise CapExceededError(f"projective line limited to rings of size {PLINE_CAP}")
        N = ring.size
        masks = _right_ideal_masks(ring)
        allr = ring.elements()
        out = np.zeros((N, N), dtype=bool)
        for a in range(N):
            need = ring.sub(ring.one, ring.mul(a, allr))
            out[a] = masks[:, need].any(axis=1)
        ring._cache["unimodular"] = out
    return ring._cache["unimodular"]


def cyclic_submodule(ring: FiniteRing, a, b) -> CyclicSubmodule:
    a, b = int(a), int(b)
    codes = frozenset(int(c) for c in _orbit_codes(ring, a, b))
    return CyclicSubmodule(ring, (a, b), codes)


def projective_line(ring: FiniteRing):
    """Points of P(R), sorted by canonical generator.

    Each unimodular pair lies in exactly one point, so pairs are scanned
    in code order and the first uncovered one starts a new point.
    """
    if "pline" in ring._cache:
        return ring._cache["pline"]
    N = ring.size
    unimod = unimodular_matrix(ring).ravel()
    owner = np.full(N * N, -1, dtype=np.int64)
    points = []
    for code in np.flatnonzero(unimod):
        if owner[code] >= 0:
            continue
        a, b = divmod(int(code), N)
        codes = _orbit_codes(ring, a, b)
        sub = CyclicSubmodule(ring, (a, b), frozenset(int(c) for c in codes))
        assert sub.free, f"unimodular pair {(a, b)} generates a non-free submodule"
        idx = len(points)
        points.append(ProjectivePoint(ring, (a, b), sub, idx))
        owner[codes[unimod[codes]]] = idx
    ring._cache["pline"] = points
    ring._cache["pair_owner"] = owner
    return points


def point_of(ring: FiniteRing, a, b) -> ProjectivePoint:
    """The point containing the unimodular pair ``(a, b)``."""
    pts = projective_line(ring)
    idx = int(ring._cache["pair_owner"][int(a) * ring.size + int(b)])
    if idx < 0:
        raise ValueError(f"({a}, {b}) is not unimodular in {ring.label}")
    return pts[idx]


def _same_ring(p, s):
    if p.ring is not s.ring:
        raise RingMismatchError(f"points over {p.ring.label} and {s.ring.label}")


def is_distant(p: ProjectivePoint, s: ProjectivePoint) -> bool:
    """True iff the two submodules meet only in ``(0, 0)``."""
    _same_ring(p, s)
    return len(p.submodule.codes & s.submodule.codes) == 1


def rows_generate_module(ring: FiniteRing, a, b, c, d) -> bool:
    """GL2 oracle: the rows ``(a, b)`` and ``(c, d)`` generate all of the module.

    For a finite ring this is equivalent to the 2x2 matrix being invertible.
    """
    allr = ring.elements()
    x = ring.add(ring.mul(allr, int(a))[:, None], ring.mul(allr, int(c))[None, :])
    y = ring.add(ring.mul(allr, int(b))[:, None], ring.mul(allr, int(d))[None, :])
    return len(np.unique(np.asarray(x) * ring.size + np.asarray(y))) == ring.size ** 2


def is_admissible(ring: FiniteRing, a, b) -> bool:
    """Oracle: ``(a, b)`` is the first row of some invertible 2x2 matrix."""
    N = ring.size
    return any(rows_generate_module(ring, a, b, c, d) for c in range(N) for d in range(N))


def distant_matrix(ring: FiniteRing) -> np.ndarray:
    """Boolean P x P matrix of the distant relation."""
    if "distant" in ring._cache:
        return ring._cache["distant"]
    pts = projective_line(ring)
    N = ring.size
    rows, cols = [], []
    for p in pts:
        nz = [c for c in p.submodule.codes if c]
        rows.extend([p.index] * len(nz))
        cols.extend(nz)
    m = sparse.csr_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)),
                          shape=(len(pts), N * N))
    shared = (m @ m.T).toarray()
    out = shared == 0
    ring._cache["distant"] = out
    return out


def distant_graph(ring: FiniteRing) -> Graph:
    """Graph on P(R) (canonical order) with edges between distant points."""
    if "distant_graph" not in ring._cache:
        pts = projective_line(ring)
        ring._cache["distant_graph"] = Graph.from_matrix(
            distant_matrix(ring), labels=[p.label() for p in pts])
    return ring._cache["distant_graph"]


def act(point: ProjectivePoint, gamma) -> ProjectivePoint:
    """Image of a point under ``gamma = ((g11, g12), (g21, g22))`` acting on the right."""
    R = point.ring
    (g11, g12), (g21, g22) = gamma
    a, b = point.canonical
    c = R.add(R.mul(a, g11), R.mul(b, g21))
    d = R.add(R.mul(a, g12), R.mul(b, g22))
    return point_of(R, c, d)


@dataclass
class RadicalProjection:
    """The map R(a, b) -> R/J(a+J, b+J) from P(R) onto P(R/J)."""

    ring: FiniteRing
    quotient: FiniteRing
    projection: np.ndarray = field(repr=False)
    image: tuple = field(repr=False)

    @property
    def points(self):
        return projective_line(self.ring)

    @property
    def base_points(self):
        return projective_line(self.quotient)

    def __getitem__(self, point: ProjectivePoint) -> ProjectivePoint:
        _same_ring(point, self.points[0])
        return self.base_points[self.image[point.index]]

    def fibers(self):
        """``fibers[j]``: sorted indices of points mapping to base point ``j``."""
        out = [[] for _ in self.base_points]
        for i, j in enumerate(self.image):
            out[j].append(i)
        return out


def radical_projection(ring: FiniteRing) -> RadicalProjection:
    if "radical_projection" in ring._cache:
        return ring._cache["radical_projection"]
    Q, proj = quotient_ring(ring, jacobson_radical(ring))
    projective_line(Q)
    image = tuple(point_of(Q, proj[p.canonical[0]], proj[p.canonical[1]]).index
                  for p in projective_line(ring))
    out = RadicalProjection(ring, Q, proj, image)
    ring._cache["radical_projection"] = out
    return out


def radically_parallel(p: ProjectivePoint, s: ProjectivePoint) -> bool:
    """True iff ``p`` and ``s`` have the same set of distant points."""
    _same_ring(p, s)
    d = distant_matrix(p.ring)
    return bool((d[p.index] == d[s.index]).all())
