"""Sparse multivariate polynomials with exact coefficients.

Coefficient domains are the prime fields F_p, the rationals and (for the
generic lemma computations) the integers.  A polynomial is an immutable map
from exponent tuples to nonzero coefficients; the monomial order is
degree-reverse-lexicographic in the listed variable order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple  # exponent vector, one entry per ring variable

MAX_EXPONENT = 1 << 16


class PolySyntaxError(ValueError):
    """Raised by :func:`parse_poly` on malformed input."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- coefficient domains ----------------------------------------------------


@dataclass(frozen=True)
class PrimeField:
    """The field F_p; elements are ints in ``range(p)``."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")

    is_field = True

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"F{self.p}"

    def __call__(self, value) -> int:
        if type(value) is int:
            return value % self.p
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in " + self.name)
        return pow(a, -1, self.p)

    def fmt(self, c) -> str:
        return str(c)

    def elements(self):
        return range(self.p)


@dataclass(frozen=True)
class RationalField:
    """The field Q; elements are ints or reduced Fractions (ints when integral)."""

    is_field = True
    characteristic = 0
    name = "Q"

    def __call__(self, value):
        if type(value) is int:
            return value
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, int):
            return int(value)
        return self(Fraction(value))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return self(Fraction(1) / a)

    def fmt(self, c) -> str:
        return str(c)


@dataclass(frozen=True)
class IntegerRing:
    """The ring ZZ.  Only units (+1, -1) are invertible."""

    is_field = False
    characteristic = 0
    name = "ZZ"

    def __call__(self, value) -> int:
        if type(value) is int:
            return value
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return value.numerator
        return int(value)

    def inv(self, a: int) -> int:
        if a not in (1, -1):
            raise ZeroDivisionError(f"{a} is not a unit in ZZ")
        return a

    def fmt(self, c) -> str:
        return str(c)


QQ = RationalField()
ZZ = IntegerRing()
GF2 = PrimeField(2)

Domain = Union[PrimeField, RationalField, IntegerRing]


def field_from_name(name: str) -> Domain:
    """``"Q"`` -> QQ, ``"ZZ"`` -> ZZ, ``"F<p>"`` -> PrimeField(p)."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name in ("Z", "ZZ"):
        return ZZ
    m = re.fullmatch(r"(?:F|GF)(\d+)", name)
    if not m:
        raise ValueError(f"unknown field {name!r}; expected 'Q' or 'F<prime>'")
    return PrimeField(int(m.group(1)))


# -- rings ------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Ring:
    """Polynomial ring ``field[variables]`` with degrevlex order."""

    field: Domain
    variables: tuple

    def __init__(self, field: Domain, variables: Iterable[str]):
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise ValueError(f"repeated variable names in {names}")
        for v in names:
            if not _IDENT.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "variables", names)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {(0,) * self.nvars: c} if c != 0 else {})

    def gen(self, v: Union[int, str]) -> "Poly":
        """The variable ``v`` given by name or 1-based index."""
        i = self.variables.index(v) if isinstance(v, str) else v - 1
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {v} out of range")
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field(1)})

    def gens(self) -> list:
        return [self.gen(i + 1) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff=1) -> "Poly":
        return Poly(self, {tuple(exps): coeff})

    def __call__(self, value) -> "Poly":
        if isinstance(value, Poly):
            if value.ring != self:
                raise ValueError("polynomial belongs to a different ring")
            return value
        if isinstance(value, str):
            return parse_poly(value, self)
        return self.const(value)

    def parse(self, text: str) -> "Poly":
        return parse_poly(text, self)

    def __repr__(self):
        return f"{self.field.name}[{','.join(self.variables)}]"


def degrevlex_key(exps: Monomial):
    """Sort key; a larger key means a larger monomial in degrevlex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


# -- polynomials ------------------------------------------------------------


class Poly:
    """Immutable sparse polynomial; ``terms`` never stores a zero coefficient."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, object]):
        f = ring.field
        clean = {}
        for e, c in terms.items():
            c = f(c)
            if c != 0:
                if len(e) != ring.nvars:
                    raise ValueError(f"monomial {e} has wrong length for {ring}")
                clean[tuple(e)] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Poly":
        # terms already reduced and zero-free
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), self.ring.field(0))

    def constant_term(self):
        return self.coefficient((0,) * self.ring.nvars)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def sorted_terms(self) -> list:
        """Terms in descending degrevlex order."""
        return sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)

    # arithmetic
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = f(out.get(e, 0) + c)
            if s != 0:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Poly._raw(self.ring, {e: f(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        clean = {}
        for e, c in out.items():
            c = f(c)
            if c != 0:
                clean[e] = c
        return Poly._raw(self.ring, clean)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c) -> "Poly":
        f = self.ring.field
        c = f(c)
        if c == 0:
            return self.ring.zero
        out = {}
        for e, a in self.terms.items():
            v = f(a * c)
            if v != 0:
                out[e] = v
        return Poly._raw(self.ring, out)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, d: "Poly") -> "Poly":
        """Quotient ``self / d``; raises ArithmeticError if d does not divide."""
        d = self._coerce(d)
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.ring.field
        lm, lc = d.leading_term()
        q: dict = {}
        r = self
        while r:
            rm, rc = r.leading_term()
            if any(a < b for a, b in zip(rm, lm)):
                raise ArithmeticError("inexact polynomial division")
            if f.is_field:
                c = f(rc * f.inv(lc))
            else:
                if rc % lc:
                    raise ArithmeticError("inexact polynomial division")
                c = rc // lc
            m = tuple(a - b for a, b in zip(rm, lm))
            q[m] = c
            r = r - Poly._raw(self.ring, {m: c}) * d
        return Poly._raw(self.ring, q)

    def leading_term(self):
        """``(monomial, coefficient)`` of the degrevlex-largest term."""
        if not self.terms:
            raise ValueError("leading term of the zero polynomial")
        e = max(self.terms, key=degrevlex_key)
        return e, self.terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def linear_coefficient(self, index: int):
        """Coefficient of the ``index``-th variable (1-based) in the linear part."""
        n = self.ring.nvars
        if not 1 <= index <= n:
            raise IndexError(f"variable index {index} out of range 1..{n}")
        e = [0] * n
        e[index - 1] = 1
        return self.coefficient(e)

    def evaluate(self, point: Sequence, field: Domain = None):
        """Evaluate at ``point`` (one value per variable), reducing into ``field``."""
        f = field or self.ring.field
        if len(point) != self.ring.nvars:
            raise ValueError("point has the wrong number of coordinates")
        pt = [f(v) for v in point]
        total = 0
        for e, c in self.terms.items():
            term = f(c)
            for v, k in zip(pt, e):
                if k:
                    term = term * v**k
            total = f(total + term)
        return f(total)

    def change_ring(self, ring: Ring) -> "Poly":
        """Reinterpret the coefficients in ``ring`` (same number of variables)."""
        if ring.nvars != self.ring.nvars:
            raise ValueError("target ring has a different number of variables")
        return Poly(ring, self.terms)

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def sort_key(self):
        """Total order on polynomials: compare term lists in descending order."""
        return tuple((degrevlex_key(e), _coeff_key(c)) for e, c in self.sorted_terms())

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, {self.ring!r})"


def _coeff_key(c):
    return (Fraction(c).numerator, Fraction(c).denominator)


def constant_term(p: Poly):
    return p.constant_term()


def linear_coefficient(p: Poly, index: int):
    return p.linear_coefficient(index)


def leading_term(p: Poly):
    return p.leading_term()


# -- printing ---------------------------------------------------------------


def _monomial_str(ring: Ring, exps: Monomial) -> str:
    parts = []
    for v, k in zip(ring.variables, exps):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical text: descending degrevlex, ``*`` between factors, ``^`` powers."""
    if not p.terms:
        return "0"
    out = []
    for n, (e, c) in enumerate(p.sorted_terms()):
        neg = (not isinstance(p.ring.field, PrimeField)) and c < 0
        mag = -c if neg else c
        mono = _monomial_str(p.ring, e)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if n == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = ("int", "name", "op")[m.lastindex - 1]
        tokens.append((kind, m.group(0), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    # expr  := term (('+'|'-') term)*
    # term  := unary (('*'|'/') unary)*
    # unary := ('-'|'+') unary | power
    # power := atom ('^' INT)?
    # atom  := INT | NAME | '(' expr ')'

    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return PolySyntaxError(msg, tok[2], self.text)

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected token {tok[1]!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op_tok = self.take()
            q = self.unary()
            if op_tok[1] == "*":
                p = p * q
            else:
                if not q.is_constant() or not q:
                    raise self.error("division only by a nonzero constant", op_tok)
                p = p.scale(self.ring.field.inv(q.constant_term()))
        return p

    def unary(self) -> Poly:
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("exponent must be a nonnegative integer literal", tok)
            k = int(tok[1])
            if k > MAX_EXPONENT:
                raise self.error(f"exponent {k} exceeds {MAX_EXPONENT}", tok)
            return base**k
        return base

    def atom(self) -> Poly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return self.ring.const(int(val))
        if kind == "name":
            if val not in self.ring.variables:
                raise self.error(f"unknown variable {val!r}", tok)
            return self.ring.gen(val)
        if tok[:2] == ("op", "("):
            p = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.error("expected ')'", close)
            return p
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected token {val!r}", tok)


def parse_poly(text: str, ring: Ring) -> Poly:
    """Parse ``text`` into a canonical polynomial of ``ring``.

    Integer literals, variable names, ``+ - * ^``, parentheses and unary
    minus are accepted; ``/`` is allowed by a nonzero constant only.
    Juxtaposition is not multiplication (``2x`` is a syntax error).
    """
    return _Parser(text, ring).parse()
