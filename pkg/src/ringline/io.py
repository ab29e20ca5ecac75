"""Graph serialization: graph6, Graphviz dot and a small JSON schema.

All writers are deterministic; ``graph6`` and ``json`` round-trip.
"""

from __future__ import annotations

import json

from .graph import Graph

JSON_VERSION = 1


def _g6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> bytes:
    """Standard graph6: size header, then the upper triangle column by column, 6 bits a byte."""
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6))
    return _g6_size(g.n) + body


def from_graph6(data) -> Graph:
    if isinstance(data, str):
        data = data.encode()
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data or any(not 63 <= c <= 126 for c in data):
        raise ValueError("not a graph6 string")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) < 4 or (data[1] == 126 and len(data) < 8):
        raise ValueError("truncated graph6 size header")
    elif len(data) > 1 and data[1] == 126:
        n, pos = _g6_int(data[2:8]), 8
    else:
        n, pos = _g6_int(data[1:4]), 4
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = [(c - 63) >> s & 1 for c in body for s in range(5, -1, -1)]
    edges, k = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def _g6_int(chunk) -> int:
    out = 0
    for c in chunk:
        out = out << 6 | (c - 63)
    return out


def to_dot(g: Graph, name: str = "G") -> bytes:
    lines = [f"graph {json.dumps(name)} {{"]
    labels = g.labels if g.labels is not None else [str(v) for v in range(g.n)]
    for v in range(g.n):
        lines.append(f"  {v} [label={json.dumps(labels[v])}];")
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def to_json(g: Graph) -> bytes:
    doc = {"version": JSON_VERSION, "n": g.n, "labels": list(g.labels) if g.labels is not None else None,
           "edges": [list(e) for e in g.edges()]}
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode()


def from_json(data) -> Graph:
    doc = json.loads(data)
    if doc.get("version") != JSON_VERSION:
        raise ValueError(f"unsupported graph document version {doc.get('version')!r}")
    return Graph.from_edges(doc["n"], [tuple(e) for e in doc["edges"]], labels=doc.get("labels"))


FORMATS = {"g6": to_graph6, "graph6": to_graph6, "dot": to_dot, "json": to_json}


def export_graph(g: Graph, fmt: str) -> bytes:
    try:
        writer = FORMATS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from g6, dot, json") from None
    return writer(g)
