"""Finite associative rings with unity on a dense index space.

Every ring has elements ``0 .. size-1``.  Arithmetic is vectorized: the
operations accept ints or integer numpy arrays (broadcast together) and
return the same shape.  Small rings (``size <= TABLE_MAX``) materialize
Cayley tables; larger ones evaluate structured arithmetic on demand.

Element order is fixed by construction and everything downstream
(canonical generators, vertex numbering) depends on it:

* ``Zn`` and ``GF(p)``: residues in natural order.
* ``GF(p^k)``: index ``sum c_i p^i`` for the polynomial ``sum c_i x^i``
  modulo the least monic irreducible of degree ``k``.
* products: lexicographic by factor, first factor most significant.
* ``M``/``LT``/``UT``: row-major over the stored entries, first entry most
  significant.
* ``Trunc(S, k)``: coefficients ``(c_0, ..., c_{k-1})``, ``c_0`` most
  significant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import ringexpr
from .errors import CapExceededError, RinglineError

TABLE_MAX = 256
DEFAULT_CAP = 65536


def _as_array(x):
    return np.asarray(x, dtype=np.int64)


def _scalar_or_array(x, like):
    if np.ndim(like) == 0:
        return int(x)
    return x


class FiniteRing:
    """A finite associative ring with ``1 != 0``.

    Instances are immutable after construction.  Equality is identity;
    two separately built copies of ``Z4`` are different objects.
    """

    def __init__(self, size, add, mul, neg, one, label, kind="custom",
                 params=(), factors=(), zero=0, labeler=None):
        self.size = int(size)
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.kind = kind
        self.params = params
        self.factors = tuple(factors)
        self._labeler = labeler
        self._cache = {}
        self._add_fn = add
        self._mul_fn = mul
        self._neg = _as_array(neg(np.arange(self.size)))
        if self.size <= TABLE_MAX:
            add_t, mul_t = self.add_table, self.mul_table
            self._add_fn = lambda a, b: add_t[a, b]
            self._mul_fn = lambda a, b: mul_t[a, b]

    def __repr__(self):
        return f"FiniteRing({self.label!r}, size={self.size})"

    def __len__(self):
        return self.size

    def __getitem__(self, i) -> "RingElement":
        return RingElement(self, int(i))

    def elements(self):
        return np.arange(self.size)

    def add(self, a, b):
        a, b = np.broadcast_arrays(_as_array(a), _as_array(b))
        return _scalar_or_array(self._add_fn(a, b), a)

    def mul(self, a, b):
        a, b = np.broadcast_arrays(_as_array(a), _as_array(b))
        return _scalar_or_array(self._mul_fn(a, b), a)

    def neg(self, a):
        a = _as_array(a)
        return _scalar_or_array(self._neg[a], a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @cached_property
    def add_table(self) -> np.ndarray:
        return self._table(self._add_fn)

    @cached_property
    def mul_table(self) -> np.ndarray:
        return self._table(self._mul_fn)

    def _table(self, fn):
        if self.size > 4096:
            raise CapExceededError(f"refusing to tabulate a ring of size {self.size}")
        a, b = np.meshgrid(np.arange(self.size), np.arange(self.size), indexing="ij")
        return _as_array(fn(a, b))

    def element_label(self, i: int) -> str:
        i = int(i)
        if self._labeler is None:
            return str(i)
        return self._labeler(i)

    # matrix rings over a base ring

    @property
    def is_matrix_ring(self) -> bool:
        return self.kind in ("M", "LT", "UT")

    def matrix_entries(self, i):
        """Entries of element ``i`` of a matrix ring, as nested lists of base indices."""
        if not self.is_matrix_ring:
            raise RinglineError(f"{self.label} is not a matrix ring")
        return self._cache["matrix_decode"](i)

    def encode_matrix(self, rows) -> int:
        """Index of the matrix whose entries (base indices) are ``rows``."""
        if not self.is_matrix_ring:
            raise RinglineError(f"{self.label} is not a matrix ring")
        return self._cache["matrix_encode"](rows)


@dataclass(frozen=True)
class RingElement:
    """An element of a specific ring, with Python arithmetic operators."""

    ring: FiniteRing
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.size:
            raise ValueError(f"index {self.index} out of range for {self.ring.label}")

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError("elements of different rings")
            return other.index
        return int(other)

    def __add__(self, other):
        return RingElement(self.ring, self.ring.add(self.index, self._other(other)))

    def __sub__(self, other):
        return RingElement(self.ring, self.ring.sub(self.index, self._other(other)))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring.mul(self.index, self._other(other)))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.index))

    def __int__(self):
        return self.index

    __index__ = __int__

    def __repr__(self):
        return f"{self.ring.label}[{self.ring.element_label(self.index)}]"


@dataclass(frozen=True)
class Ideal:
    """A subset of a ring, intended to be a two-sided ideal."""

    ring: FiniteRing
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return int(x) in self.members

    def sorted_members(self):
        return np.array(sorted(self.members), dtype=np.int64)

    def is_left_ideal(self) -> bool:
        return self._closed() and _absorbs(self.ring, self.sorted_members(), left=True)

    def is_two_sided(self) -> bool:
        m = self.sorted_members()
        return (self._closed() and _absorbs(self.ring, m, left=True)
                and _absorbs(self.ring, m, left=False))

    def _closed(self) -> bool:
        R, m = self.ring, self.sorted_members()
        if R.zero not in self.members:
            return False
        mask = np.zeros(R.size, dtype=bool)
        mask[m] = True
        if not mask[R.neg(m)].all():
            return False
        return all(mask[R.add(x, m)].all() for x in m)


def _absorbs(R, m, left):
    mask = np.zeros(R.size, dtype=bool)
    mask[m] = True
    allr = R.elements()
    for x in m:
        prod = R.mul(allr, x) if left else R.mul(x, allr)
        if not mask[prod].all():
            return False
    return True


# ---------------------------------------------------------------- builders

def _digits(i, base, count):
    """Digits of ``i`` in ``base``, most significant first, along a new last axis."""
    powers = base ** np.arange(count - 1, -1, -1, dtype=np.int64)
    return (_as_array(i)[..., None] // powers) % base


def _undigits(d, base):
    d = _as_array(d)
    count = d.shape[-1]
    powers = base ** np.arange(count - 1, -1, -1, dtype=np.int64)
    return (d * powers).sum(axis=-1)


def _zmod(n: int, label=None, kind="Z") -> FiniteRing:
    return FiniteRing(
        n,
        add=lambda a, b: (a + b) % n,
        mul=lambda a, b: (a * b) % n,
        neg=lambda a: (-a) % n,
        one=1 % n,
        label=label or f"Z{n}",
        kind=kind,
        params=(n,) if kind == "Z" else (n, 1),
    )


def _poly_mulmod(u, v, f, p):
    """Product of coefficient lists (low degree first) modulo monic ``f``."""
    k = len(f) - 1
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] = (out[i + j] + a * b) % p
    for d in range(len(out) - 1, k - 1, -1):
        c = out[d]
        if c:
            for j in range(k + 1):
                out[d - k + j] = (out[d - k + j] - c * f[j]) % p
    return (out + [0] * k)[:k]


def _poly_rem(u, f, p):
    """Remainder of ``u`` by monic ``f`` (coefficient lists, low degree first)."""
    u = list(u)
    k = len(f) - 1
    for d in range(len(u) - 1, k - 1, -1):
        c = u[d]
        if c:
            for j in range(k + 1):
                u[d - k + j] = (u[d - k + j] - c * f[j]) % p
    return u[:k] if k else []


def _monic_polys(p, degree):
    """Monic polynomials of a given degree, ordered by ``sum c_i p^i``."""
    for code in range(p ** degree):
        coeffs = [(code // p ** i) % p for i in range(degree)]
        yield coeffs + [1]


def least_irreducible(p: int, k: int):
    """Least monic irreducible polynomial of degree ``k`` over ``F(p)``.

    Polynomials are compared by ``sum c_i p^i`` over the non-leading
    coefficients; the result is a coefficient list, low degree first.
    """
    if k == 1:
        return [0, 1]
    small = {d: [] for d in range(1, k // 2 + 1)}
    for d in small:
        for g in _monic_polys(p, d):
            if all(any(_poly_rem(g, h, p)) for e in range(1, d // 2 + 1) for h in small[e]):
                small[d].append(g)
    for f in _monic_polys(p, k):
        if all(any(_poly_rem(f, h, p)) for d in small for h in small[d]):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _galois(p: int, k: int) -> FiniteRing:
    if k == 1:
        return _zmod(p, label=f"GF({p})", kind="GF")
    q = p ** k
    f = least_irreducible(p, k)

    def vec(i):
        return [(i // p ** j) % p for j in range(k)]

    def idx(c):
        return sum(int(x) * p ** j for j, x in enumerate(c))

    exp = None
    # x first; it is primitive whenever f is
    for g in [p] + [c for c in range(2, q) if c != p]:
        gv = vec(g)
        powers = [1]
        cur = [1] + [0] * (k - 1)
        while True:
            cur = _poly_mulmod(cur, gv, f, p)
            c = idx(cur)
            if c == 1:
                break
            powers.append(c)
        if len(powers) == q - 1:
            exp = np.array(powers, dtype=np.int64)
            break
    log = np.zeros(q, dtype=np.int64)
    log[exp] = np.arange(q - 1)
    weights = p ** np.arange(k - 1, -1, -1, dtype=np.int64)  # _digits order is msd first

    def add(a, b):
        da = _digits(a, p, k)
        db = _digits(b, p, k)
        return ((da + db) % p * weights).sum(axis=-1)

    def mul(a, b):
        nz = (a != 0) & (b != 0)
        return np.where(nz, exp[(log[a] + log[b]) % (q - 1)], 0)

    def neg(a):
        return ((-_digits(a, p, k)) % p * weights).sum(axis=-1)

    def labeler(i):
        c = vec(i)
        terms = []
        for j in range(k - 1, -1, -1):
            if c[j]:
                mon = "" if j == 0 else ("a" if j == 1 else f"a^{j}")
                terms.append((str(c[j]) if c[j] != 1 or j == 0 else "") + mon)
        return "+".join(terms) or "0"

    ring = FiniteRing(q, add=add, mul=mul, neg=neg, one=1, label=f"GF({q})",
                      kind="GF", params=(p, k), labeler=labeler)
    ring._cache["modulus"] = tuple(f)
    return ring


def _product(factors) -> FiniteRing:
    sizes = [R.size for R in factors]
    strides = [math.prod(sizes[i + 1:]) for i in range(len(sizes))]
    total = math.prod(sizes)

    def split(a):
        return [(a // s) % n for s, n in zip(strides, sizes)]

    def join(parts):
        out = 0
        for part, s in zip(parts, strides):
            out = out + part * s
        return out

    def add(a, b):
        return join([R.add(x, y) for R, x, y in zip(factors, split(a), split(b))])

    def mul(a, b):
        return join([R.mul(x, y) for R, x, y in zip(factors, split(a), split(b))])

    def neg(a):
        return join([R.neg(x) for R, x in zip(factors, split(a))])

    def labeler(i):
        parts = [int(x) for x in split(i)]
        return "(" + ",".join(R.element_label(x) for R, x in zip(factors, parts)) + ")"

    label = "x".join(_wrap_label(R) for R in factors)
    return FiniteRing(total, add=add, mul=mul, neg=neg,
                      one=join([R.one for R in factors]), label=label,
                      kind="product", factors=factors, labeler=labeler)


def _wrap_label(R):
    return f"({R.label})" if R.kind == "quotient" else R.label


def _matrix(n: int, base: FiniteRing, shape: str) -> FiniteRing:
    if shape == "M":
        positions = [(i, j) for i in range(n) for j in range(n)]
    elif shape == "LT":
        positions = [(i, j) for i in range(n) for j in range(n) if i >= j]
    else:
        positions = [(i, j) for i in range(n) for j in range(n) if i <= j]
    m = len(positions)
    s = base.size
    pos_index = {pos: t for t, pos in enumerate(positions)}

    def to_full(a):
        d = _digits(a, s, m)
        full = np.full(d.shape[:-1] + (n, n), base.zero, dtype=np.int64)
        for t, (i, j) in enumerate(positions):
            full[..., i, j] = d[..., t]
        return full

    def from_full(full):
        d = np.stack([full[..., i, j] for (i, j) in positions], axis=-1)
        return _undigits(d, s)

    def add(a, b):
        return _undigits(base.add(_digits(a, s, m), _digits(b, s, m)), s)

    def neg(a):
        return _undigits(base.neg(_digits(a, s, m)), s)

    def mul(a, b):
        A, B = to_full(a), to_full(b)
        C = np.empty_like(A)
        for i in range(n):
            for j in range(n):
                acc = base.mul(A[..., i, 0], B[..., 0, j])
                for k in range(1, n):
                    acc = base.add(acc, base.mul(A[..., i, k], B[..., k, j]))
                C[..., i, j] = acc
        return from_full(C)

    ident = np.full((n, n), base.zero, dtype=np.int64)
    for i in range(n):
        ident[i, i] = base.one
    one = int(from_full(ident))

    def decode(i):
        full = to_full(int(i))
        return [[int(full[r, c]) for c in range(n)] for r in range(n)]

    def encode(rows):
        for r in range(n):
            for c in range(n):
                if (r, c) not in pos_index and rows[r][c] != base.zero:
                    raise ValueError(f"entry ({r},{c}) must be zero in {shape}{n}")
        return int(from_full(np.array(rows, dtype=np.int64)))

    def labeler(i):
        rows = decode(i)
        return "[" + ";".join(",".join(base.element_label(x) for x in row) for row in rows) + "]"

    ring = FiniteRing(s ** m, add=add, mul=mul, neg=neg, one=one,
                      label=f"{shape}{n}({base.label})", kind=shape, params=(n,),
                      factors=(base,), labeler=labeler)
    ring._cache["matrix_decode"] = decode
    ring._cache["matrix_encode"] = encode
    return ring


def _trunc(base: FiniteRing, k: int) -> FiniteRing:
    s = base.size

    def add(a, b):
        return _undigits(base.add(_digits(a, s, k), _digits(b, s, k)), s)

    def neg(a):
        return _undigits(base.neg(_digits(a, s, k)), s)

    def mul(a, b):
        A, B = _digits(a, s, k), _digits(b, s, k)
        C = np.empty_like(A)
        for d in range(k):
            acc = base.mul(A[..., 0], B[..., d])
            for i in range(1, d + 1):
                acc = base.add(acc, base.mul(A[..., i], B[..., d - i]))
            C[..., d] = acc
        return _undigits(C, s)

    one_digits = np.full(k, base.zero, dtype=np.int64)
    one_digits[0] = base.one

    def labeler(i):
        d = [int(x) for x in _digits(i, s, k)]
        terms = []
        for j, c in enumerate(d):
            if c != base.zero:
                coef = base.element_label(c)
                if j == 0:
                    terms.append(coef)
                else:
                    mon = "x" if j == 1 else f"x^{j}"
                    terms.append(mon if c == base.one else f"{coef}{mon}")
        return "+".join(terms) or base.element_label(base.zero)

    return FiniteRing(s ** k, add=add, mul=mul, neg=neg, one=int(_undigits(one_digits, s)),
                      label=f"Trunc({base.label},{k})", kind="Trunc", params=(k,),
                      factors=(base,), labeler=labeler)


def _build(node) -> FiniteRing:
    tag = node[0]
    if tag == "Z":
        return _zmod(node[1])
    if tag == "GF":
        return _galois(node[1], node[2])
    if tag in ("M", "LT", "UT"):
        return _matrix(node[1], _build(node[2]), tag)
    if tag == "Trunc":
        return _trunc(_build(node[1]), node[2])
    return _product([_build(t) for t in node[1]])


def _check_caps(node, cap):
    size = ringexpr.ast_size(node)
    if size > cap:
        raise CapExceededError(f"{ringexpr.normalize(node)} has {size} elements (cap {cap})")
    for child in node[1:]:
        if isinstance(child, tuple) and child and isinstance(child[0], str):
            _check_caps(child, cap)
        elif isinstance(child, tuple):
            for t in child:
                _check_caps(t, cap)


def make_ring(spec: str, cap: int = DEFAULT_CAP) -> FiniteRing:
    """Build the ring described by a ring expression such as ``"LT2(GF(3))"``.

    Raises :class:`~ringline.errors.RingSpecError` on malformed input,
    :class:`~ringline.errors.UnsupportedRingError` for rings outside the
    grammar's reach, and :class:`~ringline.errors.CapExceededError` when the
    ring (or any subexpression) is larger than ``cap``.
    """
    node = ringexpr.parse(spec)
    _check_caps(node, cap)
    ring = _build(node)
    ring.label = ringexpr.normalize(node)
    return ring


# ------------------------------------------------------------- structure

def unit_mask(ring: FiniteRing) -> np.ndarray:
    """Boolean mask over elements: True where the element is a unit."""
    if "unit_mask" in ring._cache:
        return ring._cache["unit_mask"]
    R = ring
    allr = R.elements()
    mask = np.zeros(R.size, dtype=bool)
    inverse = np.full(R.size, -1, dtype=np.int64)
    for a in range(R.size):
        if mask[a]:
            continue
        hits = np.flatnonzero(R.mul(allr, a) == R.one)
        if hits.size:
            x = int(hits[0])
            # finite rings are Dedekind-finite: a left inverse is two-sided
            assert R.mul(a, x) == R.one, f"{R.label}: one-sided inverse for {a}"
            mask[a] = mask[x] = True
            inverse[a], inverse[x] = x, a
    ring._cache["unit_mask"] = mask
    ring._cache["inverse"] = inverse
    return mask


def units(ring: FiniteRing) -> frozenset:
    """The set of units (elements with a two-sided inverse)."""
    return frozenset(RingElement(ring, int(i)) for i in np.flatnonzero(unit_mask(ring)))


def inverse(ring: FiniteRing, a: int) -> int:
    """Multiplicative inverse of a unit ``a``."""
    unit_mask(ring)
    inv = int(ring._cache["inverse"][int(a)])
    if inv < 0:
        raise ValueError(f"{ring.element_label(a)} is not a unit of {ring.label}")
    return inv


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """J(R) = {x : 1 - r*x is a unit for every r}."""
    if "radical" in ring._cache:
        return ring._cache["radical"]
    R = ring
    umask = unit_mask(R)
    allr = R.elements()
    members = []
    for x in np.flatnonzero(~umask):
        if umask[R.sub(R.one, R.mul(allr, int(x)))].all():
            members.append(int(x))
    J = Ideal(R, frozenset(members))
    ring._cache["radical"] = J
    return J


def quotient_ring(ring: FiniteRing, ideal: Ideal):
    """Return ``(R/I, projection)`` where ``projection[a]`` is the coset of ``a``.

    Cosets are numbered by their least element, so the zero coset is 0.
    """
    if ideal.ring is not ring:
        raise ValueError("ideal belongs to a different ring")
    if not ideal.is_two_sided():
        raise ValueError(f"not a two-sided ideal of {ring.label}")
    R = ring
    members = ideal.sorted_members()
    proj = np.full(R.size, -1, dtype=np.int64)
    reps = []
    for a in range(R.size):
        if proj[a] < 0:
            proj[R.add(a, members)] = len(reps)
            reps.append(a)
    reps = np.array(reps, dtype=np.int64)

    if len(members) == 1:
        label = ring.label
    else:
        label = f"{ring.label}/J" if ideal == jacobson_radical(ring) else f"{ring.label}/I"

    Q = FiniteRing(
        len(reps),
        add=lambda a, b: proj[R.add(reps[a], reps[b])],
        mul=lambda a, b: proj[R.mul(reps[a], reps[b])],
        neg=lambda a: proj[R.neg(reps[a])],
        one=int(proj[R.one]),
        zero=int(proj[R.zero]),
        label=label,
        kind="quotient",
        factors=(ring,),
        labeler=lambda i: R.element_label(int(reps[i])) + ("" if len(members) == 1 else "+I"),
    )
    Q._cache["representatives"] = reps
    return Q, proj


def center(ring: FiniteRing) -> np.ndarray:
    allr = ring.elements()
    return np.array([z for z in range(ring.size)
                     if (ring.mul(z, allr) == ring.mul(allr, z)).all()], dtype=np.int64)


def simple_factors(ring: FiniteRing):
    """Wedderburn signature of a semisimple ring: sorted ``(n, q)`` for each M_n(F(q)).

    Uses the primitive central idempotents ``e``: ``eR`` is the simple
    factor, its center ``eZ(R)`` is ``F(q)`` and ``|eR| = q**(n*n)``.
    """
    if len(jacobson_radical(ring)) != 1:
        raise ValueError(f"{ring.label} is not semisimple")
    R = ring
    Z = center(R)
    idem = [int(e) for e in Z if R.mul(e, e) == e and e != R.zero]
    primitive = [e for e in idem
                 if not any(f != e and R.mul(e, f) == f for f in idem)]
    allr = R.elements()
    out = []
    for e in primitive:
        size = len(np.unique(R.mul(e, allr)))
        q = len(np.unique(R.mul(e, Z)))
        n2 = round(math.log(size, q))
        n = math.isqrt(n2)
        if q ** (n * n) != size:
            raise RinglineError(f"unexpected simple factor of size {size} over F({q})")
        out.append((n, q))
    return tuple(sorted(out))


def radical_signature(ring: FiniteRing):
    """``simple_factors`` of R/J."""
    Q, _ = quotient_ring(ring, jacobson_radical(ring))
    return simple_factors(Q)


# --------------------------------------------------------------- oracles

def left_ideals(ring: FiniteRing, max_size: int = 64):
    """All left ideals, as frozensets, by closing principal ideals under sums."""
    if ring.size > max_size:
        raise CapExceededError(f"left-ideal enumeration limited to size {max_size}")
    R = ring
    allr = R.elements()
    principal = {frozenset(int(v) for v in R.mul(allr, x)) for x in range(R.size)}
    found = set(principal)
    frontier = list(found)
    while frontier:
        nxt = []
        for I in frontier:
            Ia = np.array(sorted(I), dtype=np.int64)
            for P in principal:
                Pa = np.array(sorted(P), dtype=np.int64)
                S = frozenset(int(v) for v in np.unique(R.add(Ia[:, None], Pa[None, :])))
                if S not in found:
                    found.add(S)
                    nxt.append(S)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def maximal_left_ideals(ring: FiniteRing, max_size: int = 64):
    ideals = [I for I in left_ideals(ring, max_size) if len(I) < ring.size]
    return [I for I in ideals if not any(I < K for K in ideals)]


def radical_by_maximal_ideals(ring: FiniteRing, max_size: int = 64) -> frozenset:
    """Jacobson radical as the literal intersection of maximal left ideals."""
    return frozenset.intersection(*maximal_left_ideals(ring, max_size))


def ring_axiom_violations(ring: FiniteRing, exhaustive_max: int = 64,
                          samples: int = 20000, rng=None):
    """Check the ring axioms; returns a list of human-readable violations.

    Rings up to ``exhaustive_max`` elements are checked on all triples;
    larger rings on ``samples`` random triples.
    """
    R = ring
    problems = []
    if R.one == R.zero:
        problems.append("one equals zero")
    allr = R.elements()
    if not (R.add(allr, R.zero) == allr).all():
        problems.append("zero is not an additive identity")
    if not (R.add(allr, R.neg(allr)) == R.zero).all():
        problems.append("neg is not an additive inverse")
    if not ((R.mul(allr, R.one) == allr).all() and (R.mul(R.one, allr) == allr).all()):
        problems.append("one is not a two-sided identity")
    if R.size <= exhaustive_max:
        a, b, c = (x.ravel() for x in np.indices((R.size,) * 3))
    else:
        rng = rng or np.random.default_rng(0)
        a, b, c = rng.integers(0, R.size, size=(3, samples))
    checks = {
        "add not commutative": R.add(a, b) == R.add(b, a),
        "add not associative": R.add(R.add(a, b), c) == R.add(a, R.add(b, c)),
        "mul not associative": R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)),
        "left distributivity fails": R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)),
        "right distributivity fails": R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c)),
    }
    problems.extend(k for k, ok in checks.items() if not np.all(ok))
    return problems
