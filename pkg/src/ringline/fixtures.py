"""Parallelism fixture documents.

Format: plain text.  ``#spread [name]`` opens a spread; each member is
then written as ``n`` consecutive lines of ``2n`` digits over ``0..q-1``
(basis rows, canonicalized on read).  Other ``#`` lines are comments and
blank lines are ignored.  Two fixtures ship with the package: ``table1``
and ``table2``, one partition of G(M2(2)) from each orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import BudgetExceededError, FixtureError
from .grassmannian import Parallelism, Subspace, analyze_partition_pairs, check_parallelism
from .orbits import classify_orbits, orbit_label

BUNDLED = ("table1", "table2")


@dataclass
class Fixture:
    names: list
    spreads: list  # list of lists of Subspace, in file order


def parse_fixture(text: str, n: int, q: int) -> Fixture:
    names, spreads = [], []
    pending = []  # (lineno, row) awaiting a full member
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#spread"):
            if pending:
                raise FixtureError(f"incomplete member ({len(pending)} of {n} rows)", pending[0][0])
            current = []
            spreads.append(current)
            names.append(line[len("#spread"):].strip() or str(len(spreads)))
            continue
        if line.startswith("#"):
            continue
        if current is None:
            raise FixtureError("basis row before the first #spread", lineno)
        if len(line) != 2 * n or any(not c.isdigit() or int(c) >= q for c in line):
            raise FixtureError(f"expected {2 * n} digits in 0..{q - 1}, got {line!r}", lineno)
        pending.append((lineno, tuple(int(c) for c in line)))
        if len(pending) == n:
            X = Subspace.from_rows([r for _, r in pending], q)
            if X.dim != n:
                raise FixtureError(f"rows do not span an {n}-dimensional subspace",
                                   pending[0][0])
            current.append(X)
            pending = []
    if pending:
        raise FixtureError(f"incomplete member ({len(pending)} of {n} rows)", pending[0][0])
    if not spreads:
        raise FixtureError("no #spread blocks found")
    return Fixture(names, spreads)


def bundled_text(name: str) -> str:
    if name not in BUNDLED:
        raise KeyError(f"no bundled fixture {name!r}; have {', '.join(BUNDLED)}")
    return resources.files("ringline").joinpath("data").joinpath(f"{name}.txt").read_text()


def load_fixture(source, n: int, q: int) -> Fixture:
    """Read a fixture from a path, or the bundled ``table1``/``table2`` by name."""
    path = Path(source)
    if not path.exists() and str(source) in BUNDLED:
        return parse_fixture(bundled_text(str(source)), n, q)
    return parse_fixture(path.read_text(), n, q)


@dataclass
class FixtureVerdict:
    valid: bool
    message: str
    spread_count: int
    pair_clique_sizes: dict = field(default_factory=dict)   # clique size -> number of pairs
    pair_clique_counts: dict = field(default_factory=dict)  # cliques per pair -> number of pairs
    triple_kinds: dict = field(default_factory=dict)
    fano: bool | None = None
    orbit: str | None = None
    orbit_sizes: list | None = None


def verify_fixture(source, n: int, q: int, fixture: Fixture | None = None,
                   node_budget: int = 2_000_000) -> FixtureVerdict:
    """Validate a fixture as a parallelism and locate it among the orbits."""
    fx = fixture or load_fixture(source, n, q)
    ok, msg = check_parallelism(fx.spreads, n, q)
    verdict = FixtureVerdict(ok, msg, len(fx.spreads))
    if not ok:
        return verdict
    par = Parallelism(tuple(tuple(s) for s in fx.spreads))
    report = analyze_partition_pairs(par, n, q)
    for size in report.pair_clique_size.values():
        verdict.pair_clique_sizes[size] = verdict.pair_clique_sizes.get(size, 0) + 1
    for cl in report.pair_cliques.values():
        verdict.pair_clique_counts[len(cl)] = verdict.pair_clique_counts.get(len(cl), 0) + 1
    verdict.triple_kinds = report.kind_counts()
    verdict.fano = report.is_fano
    from .grassmannian import enumerate_parallelisms
    try:
        everything = enumerate_parallelisms(n, q, node_budget=node_budget)
    except BudgetExceededError:
        return verdict
    orbits = classify_orbits(everything, n, q)
    verdict.orbit = orbit_label(par, orbits, everything)
    verdict.orbit_sizes = orbits.sizes()
    return verdict
