"""Distant graphs of rings of order p..p^5, regenerated from representatives.

The graph of a finite ring depends (up to isomorphism) only on |R| and the
simple factors of R/J, so each classification item is realized by any
ring with matching data, decomposable stand-ins included.  An item with
no ring in the grammar here is emitted as its complete-multipartite model
and flagged ``model-only``.

Each item records two sets of numbers: ``expected`` (worked out from the
structure theory: vertex count, clique number, block count of the lifted
product partition) and ``stated`` (what the classification statement
prints).  Disagreements between stated, expected and computed values are
reported as findings rather than raised.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import prod

from .cliques import clique_number, find_clique_partition, lift_partition, verify_partition
from .graph import Graph, complete_multipartite
from .grassmannian import gaussian_binomial
from .isomorphism import is_isomorphic
from .pline import distant_graph, radical_projection
from .ring import FiniteRing, jacobson_radical, make_ring, radical_signature
from .ringexpr import is_prime

REPORT_VERSION = 1


@dataclass
class GraphInvariants:
    ring_order: int
    vertices: int
    degree: int
    omega: int
    partition_blocks: int | None
    rj_signature: tuple
    jacobson_size: int

    def matches(self, other: "GraphInvariants"):
        """Names of the fields on which the two disagree."""
        a, b = asdict(self), asdict(other)
        return [k for k in a if _norm(a[k]) != _norm(b[k])]


def _norm(v):
    if isinstance(v, (list, tuple)):
        return tuple(_norm(x) for x in v)
    return v


@dataclass(frozen=True)
class LocalModel:
    """Graph of a local ring with |R/J| = parts - 1 and |J| = part_size."""

    parts: int
    part_size: int

    def graph(self) -> Graph:
        return complete_multipartite(self.parts, self.part_size)


def local_model_graph(residue_order: int, radical_order: int) -> Graph:
    """Complete multipartite graph: ``residue_order + 1`` parts of ``radical_order`` vertices."""
    if residue_order < 1 or radical_order < 1:
        raise ValueError("orders must be positive")
    return complete_multipartite(residue_order + 1, radical_order)


# ------------------------------------------------------------ expectations

def line_size(n: int, q: int) -> int:
    """|P(M_n(q))|, the number of n-subspaces of a 2n-space."""
    return gaussian_binomial(2 * n, n, q)


def expected_invariants(order: int, signature, jsize: int, parallelism_known=True) -> GraphInvariants:
    """Invariants forced by |R|, the R/J factors and |J|.

    The block count is ``m_1..m_r s_1..s_r / s * |J|`` where factor
    ``M_n(q)`` contributes cliques of size ``s_i = q^n + 1`` and
    ``m_i = |P(M_n(q))| / s_i`` of them; that needs a partition of every
    factor graph, known here for n <= 2.
    """
    signature = tuple(sorted(signature))
    base = prod(line_size(n, q) for n, q in signature)
    sizes = [q ** n + 1 for n, q in signature]
    counts = [line_size(n, q) // s for (n, q), s in zip(signature, sizes)]
    known = parallelism_known and all(n <= 2 for n, _ in signature)
    blocks = prod(counts) * prod(sizes) // min(sizes) * jsize if known else None
    return GraphInvariants(order, base * jsize, order, min(sizes), blocks, signature, jsize)


@dataclass
class CatalogItem:
    label: str
    description: str
    spec: str | None
    model: LocalModel | None
    expected: GraphInvariants
    stated: dict = field(default_factory=dict)
    note: str = ""

    @property
    def model_only(self) -> bool:
        return self.spec is None

    def __iter__(self):
        # unpacks as (ring spec or model, expected invariants)
        yield self.spec if self.spec is not None else self.model
        yield self.expected


def _field(p, k):
    return f"GF({p}^{k})" if k > 1 else f"GF({p})"


def _local(p, k, jk, spec, label, stated=None, note=""):
    """Item for a local ring with |R| = p^k, |J| = p^jk."""
    residue = p ** (k - jk)
    exp = expected_invariants(p ** k, [(1, residue)], p ** jk)
    st = {"omega": residue + 1, "partition_blocks": p ** jk}
    st.update(stated or {})
    model = LocalModel(residue + 1, p ** jk)
    return CatalogItem(label, f"local, |J| = p^{jk}", spec, model if spec is None else None,
                       exp, st, note)


def representative_rings(p: int, k: int):
    """One :class:`CatalogItem` per graph in the classification for order ``p**k``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= k <= 5:
        raise ValueError(f"exponent {k} unsupported (1..5)")
    P = p
    items = []
    tag = f"p^{k}"

    def field_item(index, stated_vertices, note=""):
        return CatalogItem(f"{tag} #{index}", f"field F(p^{k})", _field(p, k), None,
                           expected_invariants(p ** k, [(1, p ** k)], 1),
                           {"vertices": stated_vertices}, note)

    if k == 1:
        items.append(field_item(1, P + 1))
    elif k == 2:
        items.append(field_item(1, P + 2, note="stated order p+2 of the complete graph; "
                                        "the field F(p^2) has p^2+1 points"))
        items.append(_local(p, 2, 1, f"Z{p ** 2}", f"{tag} #2"))
    elif k == 3:
        items.append(field_item(1, P ** 3 + 1))
        items.append(_local(p, 3, 2, f"Z{p ** 3}", f"{tag} #2"))
        items.append(CatalogItem(f"{tag} #3", "R/J = F(p) x F(p), |J| = p", f"LT2(GF({p}))",
                                 None, expected_invariants(p ** 3, [(1, p), (1, p)], p),
                                 {"omega": P + 1, "partition_blocks": P ** 2 + P}))
    elif k == 4:
        items.append(field_item(1, P ** 4 + 1))
        items.append(_local(p, 4, 2, f"Trunc(GF({p}^2),2)", f"{tag} #2"))
        items.append(_local(p, 4, 3, f"Z{p ** 4}", f"{tag} #3"))
        items.append(CatalogItem(f"{tag} #4", "R/J = F(p) x F(p), |J| = p^2",
                                 f"Z{p ** 2}xZ{p ** 2}", None,
                                 expected_invariants(p ** 4, [(1, p), (1, p)], p ** 2),
                                 {"omega": P + 1, "partition_blocks": P ** 3 + P ** 2}))
        items.append(CatalogItem(f"{tag} #5", "R = M_2(F(p))", f"M2(GF({p}))", None,
                                 expected_invariants(p ** 4, [(2, p)], 1),
                                 {"omega": P ** 2 + 1, "partition_blocks": P ** 2 + P + 1}))
    else:
        items.append(field_item(1, P ** 5 + 1))
        items.append(_local(p, 5, 3, None, f"{tag} #2",
                            note=f"a local ring has |J| a power of |R/J|; p^3 is not a power "
                                 f"of p^2, so no ring realizes this item (model graph only)"))
        items.append(_local(p, 5, 4, f"Z{p ** 5}", f"{tag} #3"))
        items.append(CatalogItem(f"{tag} #4", "R/J = F(p) x F(p), |J| = p^3",
                                 f"Z{p ** 2}xZ{p ** 3}", None,
                                 expected_invariants(p ** 5, [(1, p), (1, p)], p ** 3),
                                 {"omega": P + 1, "partition_blocks": P ** 4 + P ** 3}))
        items.append(CatalogItem(f"{tag} #5", "R/J = F(p) x F(p^2), |J| = p^2",
                                 f"GF({p}) x Trunc(GF({p}^2),2)", None,
                                 expected_invariants(p ** 5, [(1, p), (1, p ** 2)], p ** 2),
                                 {"omega": P + 1, "partition_blocks": P ** 4 + P ** 2}))
        items.append(CatalogItem(f"{tag} #6", "R/J = F(p) x F(p) x F(p), |J| = p^2",
                                 f"Z{p ** 2}xZ{p ** 2}xGF({p})", None,
                                 expected_invariants(p ** 5, [(1, p)] * 3, p ** 2),
                                 {"omega": P + 1, "partition_blocks": (P + 1) ** 2},
                                 note="the lifted product partition has (p+1)^2 * |J| blocks"))
    return items


# --------------------------------------------------------------- computing

def _ring(ring):
    return make_ring(ring) if isinstance(ring, str) else ring


def lifted_partition(ring: FiniteRing):
    """A maximum-clique partition of G(R), lifted from one of G(R/J); ``None`` if none found."""
    phi = radical_projection(ring)
    base_graph = distant_graph(phi.quotient)
    base = find_clique_partition(base_graph)
    if base is None:
        return None
    lifted = lift_partition(base, phi.fibers(), base_graph)
    check = verify_partition(distant_graph(ring), lifted)
    if not check:
        raise AssertionError(f"lifted partition failed: {check.message}")
    return lifted


def invariant_report(ring) -> GraphInvariants:
    """Invariants of G(R) computed from the ring itself."""
    R = _ring(ring)
    g = distant_graph(R)
    part = lifted_partition(R)
    return GraphInvariants(R.size, g.n, g.regular_degree(), clique_number(g),
                           None if part is None else len(part),
                           radical_signature(R), len(jacobson_radical(R)))


def model_invariants(model: LocalModel, ring_order: int) -> GraphInvariants:
    g = model.graph()
    part = find_clique_partition(g)
    residue = model.parts - 1
    return GraphInvariants(ring_order, g.n, g.regular_degree(), clique_number(g),
                           None if part is None else len(part),
                           ((1, residue),), model.part_size)


@dataclass
class Finding:
    item: str
    kind: str      # stated-vs-computed, expected-vs-computed, model-only, isomorphic-pair, ...
    message: str


@dataclass
class ClassificationReport:
    p: int
    k: int
    items: list
    computed: list
    graph_count: int
    pairwise_non_isomorphic: bool
    findings: list

    def to_dict(self):
        rows = []
        for item, inv in zip(self.items, self.computed):
            rows.append({"label": item.label, "description": item.description,
                         "spec": item.spec, "model_only": item.model_only,
                         "expected": asdict(item.expected), "stated": item.stated,
                         "computed": asdict(inv)})
        return {"version": REPORT_VERSION, "p": self.p, "k": self.k, "order": self.p ** self.k,
                "graph_count": self.graph_count,
                "pairwise_non_isomorphic": self.pairwise_non_isomorphic,
                "items": rows, "findings": [asdict(f) for f in self.findings]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        head = ["item", "representative", "|R/J| factors", "|J|", "vertices", "degree",
                "omega", "blocks"]
        body = []
        for item, inv in zip(self.items, self.computed):
            factors = " x ".join(f"M{n}({q})" if n > 1 else f"F({q})" for n, q in inv.rj_signature)
            rep = item.spec if item.spec else f"model K[{item.model.parts}x{item.model.part_size}]"
            body.append([item.label, rep, factors, str(inv.jacobson_size), str(inv.vertices),
                         str(inv.degree), str(inv.omega), str(inv.partition_blocks)])
        widths = [max(len(r[i]) for r in [head] + body) for i in range(len(head))]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        lines = [f"order {self.p}^{self.k} = {self.p ** self.k}: {self.graph_count} graphs, "
                 f"pairwise non-isomorphic: {'yes' if self.pairwise_non_isomorphic else 'no'}",
                 fmt.format(*head).rstrip()]
        lines += [fmt.format(*r).rstrip() for r in body]
        lines.append(f"findings: {len(self.findings)}")
        lines += [f"  [{f.kind}] {f.item}: {f.message}" for f in self.findings]
        return "\n".join(lines) + "\n"


def verify_classification(p: int, k: int) -> ClassificationReport:
    """Build every representative, compare invariants and test pairwise non-isomorphism."""
    items = representative_rings(p, k)
    graphs, computed, findings = [], [], []
    for item in items:
        if item.model_only:
            g = item.model.graph()
            inv = model_invariants(item.model, p ** k)
            findings.append(Finding(item.label, "model-only", item.note))
        else:
            R = make_ring(item.spec)
            g = distant_graph(R)
            inv = invariant_report(R)
            if item.model is None and len(inv.rj_signature) == 1 and inv.rj_signature[0][0] == 1 \
                    and inv.jacobson_size > 1:
                model = local_model_graph(inv.rj_signature[0][1], inv.jacobson_size)
                if is_isomorphic(g, model) is None:
                    findings.append(Finding(item.label, "local-model",
                                            "graph differs from the complete multipartite model"))
        graphs.append(g)
        computed.append(inv)
        for name in item.expected.matches(inv):
            findings.append(Finding(item.label, "expected-vs-computed",
                                    f"{name}: expected {getattr(item.expected, name)}, "
                                    f"computed {getattr(inv, name)}"))
        for name, value in sorted(item.stated.items()):
            got = getattr(inv, name)
            if got != value:
                msg = f"{name}: stated {value}, computed {got}"
                if item.note and not item.model_only:
                    msg += f" ({item.note})"
                findings.append(Finding(item.label, "stated-vs-computed", msg))
    distinct = True
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            if graphs[i].n == graphs[j].n and is_isomorphic(graphs[i], graphs[j]) is not None:
                distinct = False
                findings.append(Finding(f"{items[i].label} / {items[j].label}", "isomorphic-pair",
                                        "two items give isomorphic graphs"))
    return ClassificationReport(p, k, items, computed, len(items), distinct, findings)
