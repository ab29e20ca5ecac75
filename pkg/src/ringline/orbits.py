"""GL(2n, q) acting on subspaces, spreads and parallelisms.

The group is generated by an elementary transvection and a Singer cycle
(companion matrix of a primitive polynomial).  Generation is confirmed by
closing the generators' permutation action on all vectors and comparing
with the order formula; orbits are then traced with the generators alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from string import ascii_uppercase

from . import linalg
from .errors import GroupGenerationError
from .grassmannian import Parallelism, gl_order, grassmannian


def _prime_factors(m: int):
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def companion_matrix(coeffs, q: int):
    """Matrix of multiplication by x on F(q)[x]/(f), ``f = x^d + sum coeffs[i] x^i``."""
    F = linalg.field(q)
    d = len(coeffs)
    rows = [tuple(int(j == i + 1) for j in range(d)) for i in range(d - 1)]
    rows.append(tuple(F.neg[c] for c in coeffs))
    return tuple(rows)


def singer_cycle(d: int, q: int):
    """Companion matrix of the least primitive polynomial of degree ``d``; order q^d - 1."""
    order = q ** d - 1
    ident = linalg.identity(d)
    for coeffs in product(range(q), repeat=d):
        coeffs = coeffs[::-1]
        if coeffs[0] == 0:
            continue
        C = companion_matrix(coeffs, q)
        if linalg.mat_pow(C, order, q) != ident:
            continue
        if all(linalg.mat_pow(C, order // r, q) != ident for r in _prime_factors(order)):
            return C
    raise GroupGenerationError(f"no primitive polynomial of degree {d} over F({q})")


def transvection(d: int):
    """``I + E_{0,1}``."""
    return tuple(tuple(int(i == j or (i, j) == (0, 1)) for j in range(d)) for i in range(d))


def standard_generators(d: int, q: int):
    return [transvection(d), singer_cycle(d, q)]


def vector_permutation(g, q: int):
    """Permutation of vector codes induced by ``v -> v g``."""
    d = len(g)
    return tuple(linalg.vector_code(linalg.mat_mul((v,), g, q)[0], q)
                 for v in linalg.all_vectors(d, q))


def group_closure(perms, max_size=None):
    """All products of the given permutations (tuples); BFS over right multiplication."""
    ident = tuple(range(len(perms[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in perms:
                c = tuple(g[x] for x in a)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if max_size is not None and len(seen) > max_size:
                        return seen
        frontier = nxt
    return seen


def verify_generation(gens, d: int, q: int) -> int:
    """Order of the generated group; raises if it is not all of GL(d, q)."""
    expected = gl_order(d, q)
    group = group_closure([vector_permutation(g, q) for g in gens], max_size=expected)
    if len(group) != expected:
        raise GroupGenerationError(
            f"generators give a group of order {len(group)}, expected |GL({d},{q})| = {expected}")
    return len(group)


@dataclass
class OrbitPartition:
    """Orbits of a list of parallelisms, as sorted index lists ordered by least member."""

    orbits: list
    group_order: int

    @property
    def labels(self):
        return [ascii_uppercase[k] if k < 26 else f"O{k}" for k in range(len(self.orbits))]

    def label_of(self, index: int) -> str:
        for lab, orb in zip(self.labels, self.orbits):
            if index in orb:
                return lab
        raise KeyError(index)

    def sizes(self):
        return [len(o) for o in self.orbits]


def classify_orbits(parallelisms, n: int, q: int, generators=None) -> OrbitPartition:
    """Split ``parallelisms`` into orbits of the linear group GL(2n, q)."""
    d = 2 * n
    gens = generators or standard_generators(d, q)
    order = verify_generation(gens, d, q)
    G = grassmannian(n, q)
    perms = [G.subspace_permutation(g) for g in gens]
    keys = [frozenset(G.indices(s.members) for s in p.spreads) for p in parallelisms]
    where = {k: i for i, k in enumerate(keys)}
    seen = [False] * len(keys)
    orbits = []
    for start in range(len(keys)):
        if seen[start]:
            continue
        seen[start] = True
        orbit, frontier = [start], [start]
        while frontier:
            nxt = []
            for i in frontier:
                for perm in perms:
                    image = frozenset(tuple(sorted(perm[x] for x in block)) for block in keys[i])
                    j = where.get(image)
                    if j is None:
                        raise ValueError("parallelism list is not closed under the group action")
                    if not seen[j]:
                        seen[j] = True
                        orbit.append(j)
                        nxt.append(j)
            frontier = nxt
        orbits.append(sorted(orbit))
    return OrbitPartition(orbits, order)


def orbit_label(p: Parallelism, partition: OrbitPartition, parallelisms) -> str:
    """Label of the orbit containing ``p`` (compared as a set of spreads)."""
    for i, other in enumerate(parallelisms):
        if other == p:
            return partition.label_of(i)
    raise KeyError("parallelism not in the classified list")
