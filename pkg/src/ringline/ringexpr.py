"""Parser for the ASCII ring-expression grammar.

::

    expr  := term ('x' term)*
    term  := 'Z' INT
           | 'GF(' INT ['^' INT] ')'
           | ('M' | 'LT' | 'UT') INT '(' expr ')'
           | 'Trunc(' expr ',' INT ')'
           | '(' expr ')'

Whitespace is ignored.  The parser produces a small tuple AST that
:mod:`ringline.ring` turns into a :class:`~ringline.ring.FiniteRing`.
"""

from __future__ import annotations

from .errors import RingSpecError, UnsupportedRingError

# AST node shapes:
#   ("Z", n)  ("GF", p, k)  ("M"|"LT"|"UT", n, sub)  ("Trunc", sub, k)
#   ("prod", (sub, sub, ...))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int):
    """Return ``(p, k)`` with ``q == p**k`` and ``p`` prime, or ``None``."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 else None


class _Parser:
    def __init__(self, text: str):
        self.original = text
        self.s = "".join(text.split())
        self.i = 0

    def error(self, msg, pos=None, cls=RingSpecError):
        raise cls(msg, self.s, self.i if pos is None else pos)

    def peek(self, lit: str) -> bool:
        return self.s.startswith(lit, self.i)

    def expect(self, lit: str):
        if not self.peek(lit):
            found = self.s[self.i:self.i + 1] or "end of input"
            self.error(f"expected {lit!r}, found {found!r}")
        self.i += len(lit)

    def integer(self) -> int:
        j = self.i
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        if j == self.i:
            found = self.s[self.i:self.i + 1] or "end of input"
            self.error(f"expected an integer, found {found!r}")
        value = int(self.s[self.i:j])
        self.i = j
        return value

    def parse(self):
        if not self.s:
            self.error("empty ring expression", pos=0)
        node = self.expr()
        if self.i != len(self.s):
            self.error(f"unexpected token {self.s[self.i]!r}")
        return node

    def expr(self):
        terms = [self.term()]
        while self.peek("x"):
            self.i += 1
            terms.append(self.term())
        if len(terms) == 1:
            return terms[0]
        flat = []
        for t in terms:
            flat.extend(t[1] if t[0] == "prod" else [t])
        return ("prod", tuple(flat))

    def term(self):
        start = self.i
        if self.peek("Trunc("):
            self.i += len("Trunc(")
            sub = self.expr()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            if k < 1:
                self.error("truncation degree must be at least 1", pos=start)
            return ("Trunc", sub, k)
        if self.peek("GF("):
            self.i += len("GF(")
            base = self.integer()
            exp = 1
            if self.peek("^"):
                self.i += 1
                exp = self.integer()
                if not is_prime(base):
                    self.error(f"GF({base}^{exp}): base {base} is not prime",
                               pos=start, cls=UnsupportedRingError)
                if exp < 1:
                    self.error("field degree must be at least 1", pos=start)
                p, k = base, exp
            else:
                pk = prime_power(base)
                if pk is None:
                    self.error(f"GF({base}): {base} is not a prime power", pos=start)
                p, k = pk
            self.expect(")")
            return ("GF", p, k)
        for head in ("LT", "UT", "M"):
            if self.peek(head):
                self.i += len(head)
                n = self.integer()
                if n < 1:
                    self.error("matrix size must be at least 1", pos=start)
                self.expect("(")
                sub = self.expr()
                self.expect(")")
                return (head, n, sub)
        if self.peek("Z"):
            self.i += 1
            n = self.integer()
            if n < 2:
                self.error(f"Z{n} has no unity distinct from zero", pos=start,
                           cls=UnsupportedRingError)
            return ("Z", n)
        if self.peek("("):
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        found = self.s[self.i:self.i + 1] or "end of input"
        self.error(f"unexpected token {found!r}")


def parse(text: str):
    """Parse ``text`` into an AST tuple; raises :class:`RingSpecError`."""
    return _Parser(text).parse()


def normalize(node) -> str:
    """Canonical string for an AST (inverse of :func:`parse` up to whitespace)."""
    tag = node[0]
    if tag == "Z":
        return f"Z{node[1]}"
    if tag == "GF":
        return f"GF({node[1] ** node[2]})"
    if tag in ("M", "LT", "UT"):
        return f"{tag}{node[1]}({normalize(node[2])})"
    if tag == "Trunc":
        return f"Trunc({normalize(node[1])},{node[2]})"
    return "x".join(normalize(t) for t in node[1])


def ast_size(node) -> int:
    """Number of elements of the ring an AST describes."""
    tag = node[0]
    if tag == "Z":
        return node[1]
    if tag == "GF":
        return node[1] ** node[2]
    if tag == "M":
        return ast_size(node[2]) ** (node[1] * node[1])
    if tag in ("LT", "UT"):
        n = node[1]
        return ast_size(node[2]) ** (n * (n + 1) // 2)
    if tag == "Trunc":
        return ast_size(node[1]) ** node[2]
    size = 1
    for t in node[1]:
        size *= ast_size(t)
    return size
