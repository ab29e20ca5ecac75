"""Knuth's Algorithm X over dict-of-sets columns.

Columns are chosen fewest-candidates-first (ties to the smallest column
key) and rows are tried in ascending index order, so the sequence of
solutions is deterministic and each unordered cover appears exactly once.
"""

from __future__ import annotations

from .errors import BudgetExceededError


class _Search:
    def __init__(self, columns, rows, node_budget):
        self.rows = [tuple(r) for r in rows]
        self.X = {c: set() for c in columns}
        for i, row in enumerate(self.rows):
            for c in row:
                if c not in self.X:
                    raise ValueError(f"row {i} uses unknown column {c!r}")
                self.X[c].add(i)
        self.budget = node_budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceededError(
                f"exact cover search exceeded {self.budget} nodes", nodes=self.nodes)

    def select(self, r):
        removed = []
        for j in self.rows[r]:
            for i in self.X[j]:
                for k in self.rows[i]:
                    if k != j:
                        self.X[k].discard(i)
            removed.append(self.X.pop(j))
        return removed

    def deselect(self, r, removed):
        for j in reversed(self.rows[r]):
            self.X[j] = removed.pop()
            for i in self.X[j]:
                for k in self.rows[i]:
                    if k != j:
                        self.X[k].add(i)

    def solve(self, partial):
        self.tick()
        if not self.X:
            yield sorted(partial)
            return
        c = min(self.X, key=lambda col: (len(self.X[col]), col))
        for r in sorted(self.X[c]):
            partial.append(r)
            removed = self.select(r)
            yield from self.solve(partial)
            self.deselect(r, removed)
            partial.pop()


def exact_covers(columns, rows, limit=None, node_budget=None):
    """Yield exact covers of ``columns`` by ``rows`` as sorted lists of row indices.

    ``limit`` stops after that many solutions; exceeding ``node_budget``
    search nodes raises :class:`~ringline.errors.BudgetExceededError`.
    """
    search = _Search(columns, rows, node_budget)
    count = 0
    for sol in search.solve([]):
        yield sol
        count += 1
        if limit is not None and count >= limit:
            return


def count_exact_covers(columns, rows, node_budget=None) -> int:
    return sum(1 for _ in exact_covers(columns, rows, node_budget=node_budget))
