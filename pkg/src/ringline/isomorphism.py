"""Graph isomorphism by color refinement plus individualization backtracking.

Both graphs are refined jointly as one disjoint union, so color names are
comparable between them.  Exact, but only intended for desk-scale graphs.
"""

from __future__ import annotations

from .graph import Graph

MAX_VERTICES = 500


def _refine(nbrs, colors):
    """Equitable refinement of ``colors`` (list of ints) over adjacency lists ``nbrs``."""
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(len(nbrs))]
        names = {s: k for k, s in enumerate(sorted(set(sigs)))}
        colors = [names[s] for s in sigs]
        if len(names) == count:
            return colors
        count = len(names)


def _balanced(colors, n):
    left, right = {}, {}
    for v, c in enumerate(colors):
        side = left if v < n else right
        side[c] = side.get(c, 0) + 1
    return left == right


def is_isomorphic(g: Graph, h: Graph):
    """Return a bijection ``perm`` (``perm[v]`` is the image of ``v``) or ``None``."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    n = g.n
    if n > MAX_VERTICES:
        raise ValueError(f"isomorphism test limited to {MAX_VERTICES} vertices")
    if n == 0:
        return []
    nbrs = [g.neighbors(v) for v in range(n)] + [[u + n for u in h.neighbors(v)] for v in range(n)]

    def search(colors):
        colors = _refine(nbrs, colors)
        if not _balanced(colors, n):
            return None
        classes = {}
        for v in range(n):
            classes.setdefault(colors[v], []).append(v)
        open_classes = [c for c, vs in classes.items() if len(vs) > 1]
        if not open_classes:
            where = {colors[v]: v - n for v in range(n, 2 * n)}
            perm = [where[colors[v]] for v in range(n)]
            return perm if _preserves(g, h, perm) else None
        target = min(open_classes, key=lambda c: (len(classes[c]), c))
        u = classes[target][0]
        fresh = max(colors) + 1
        for v in range(n, 2 * n):
            if colors[v] != target:
                continue
            trial = list(colors)
            trial[u] = trial[v] = fresh
            found = search(trial)
            if found is not None:
                return found
        return None

    return search(g.degrees() + h.degrees())


def _preserves(g: Graph, h: Graph, perm) -> bool:
    for v in range(g.n):
        image = 0
        for u in g.neighbors(v):
            image |= 1 << perm[u]
        if image != h.adj[perm[v]]:
            return False
    return True


def verify_isomorphism(g: Graph, h: Graph, perm) -> bool:
    """Edge-by-edge check that ``perm`` maps ``g`` onto ``h``."""
    if perm is None or g.n != h.n or sorted(perm) != list(range(g.n)):
        return False
    return _preserves(g, h, perm)
