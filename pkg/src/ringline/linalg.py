"""Row reduction and matrix products over small finite fields.

Vectors and matrix rows are tuples of field-element indices (the element
order of ``make_ring("GF(q)")``).  Over F(2) the hot paths run on
bit-packed rows, first coordinate in the most significant bit.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import UnsupportedRingError
from .ring import inverse, make_ring
from .ringexpr import prime_power


class Field:
    """Arithmetic tables of GF(q) as plain lists (faster than numpy for scalars)."""

    def __init__(self, q: int):
        if prime_power(q) is None:
            raise UnsupportedRingError(f"{q} is not a prime power")
        R = make_ring(f"GF({q})")
        self.q = q
        self.ring = R
        self.add = R.add_table.tolist()
        self.mul = R.mul_table.tolist()
        self.neg = [int(R.neg(a)) for a in range(q)]
        self.inv = [0] + [inverse(R, a) for a in range(1, q)]

    def __repr__(self):
        return f"Field({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    return Field(q)


def pack(row) -> int:
    """Bit-pack an F(2) row, first entry most significant."""
    out = 0
    for x in row:
        out = out << 1 | x
    return out


def unpack(bits: int, width: int):
    return tuple(bits >> (width - 1 - i) & 1 for i in range(width))


def _rref_bits(rows, width):
    rows = list(rows)
    out = []
    for col in range(width - 1, -1, -1):
        bit = 1 << col
        pivot = next((r for r in rows if r & bit), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        rows = [r ^ pivot if r & bit else r for r in rows]
        out = [r ^ pivot if r & bit else r for r in out]
        out.append(pivot)
    return out


def rref(rows, q: int):
    """Reduced row-echelon form with zero rows dropped, as a tuple of row tuples."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return ()
    width = len(rows[0])
    if q == 2:
        return tuple(unpack(r, width) for r in _rref_bits([pack(r) for r in rows], width))
    F = field(q)
    work = [list(r) for r in rows]
    out = []
    for col in range(width):
        pivot = next((r for r in work if r[col]), None)
        if pivot is None:
            continue
        work.remove(pivot)
        s = F.inv[pivot[col]]
        pivot = [F.mul[s][x] for x in pivot]

        def eliminate(r):
            c = r[col]
            if not c:
                return r
            nc = F.neg[c]
            return [F.add[x][F.mul[nc][y]] for x, y in zip(r, pivot)]

        work = [eliminate(r) for r in work]
        out = [eliminate(r) for r in out]
        out.append(pivot)
    return tuple(tuple(r) for r in out)


def rank(rows, q: int) -> int:
    rows = list(rows)
    if q == 2 and rows:
        return len(_rref_bits([pack(r) for r in rows], len(rows[0])))
    return len(rref(rows, q))


def mat_mul(A, B, q: int):
    """Product of matrices given as sequences of row tuples."""
    F = field(q)
    cols = list(zip(*B))
    out = []
    for row in A:
        new = []
        for col in cols:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = F.add[acc][F.mul[x][y]]
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def identity(d: int):
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def mat_pow(A, e: int, q: int):
    result = identity(len(A))
    base = A
    while e:
        if e & 1:
            result = mat_mul(result, base, q)
        base = mat_mul(base, base, q)
        e >>= 1
    return result


def vector_code(v, q: int) -> int:
    """Integer code of a vector; code order is lexicographic order."""
    out = 0
    for x in v:
        out = out * q + x
    return out


def span_codes(rows, q: int) -> frozenset:
    """Codes of every vector in the row space (including zero)."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return frozenset([0])
    F = field(q)
    width = len(rows[0])
    out = set()
    for coeffs in product(range(q), repeat=len(rows)):
        v = [0] * width
        for c, r in zip(coeffs, rows):
            if c:
                v = [F.add[x][F.mul[c][y]] for x, y in zip(v, r)]
        out.add(vector_code(v, q))
    return frozenset(out)


def all_vectors(width: int, q: int):
    return product(range(q), repeat=width)
