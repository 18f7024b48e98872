"""Polynomial rings over Q with exact sparse arithmetic.

Polynomials are stored as dictionaries mapping exponent tuples to nonzero
Fractions; storage is order-agnostic, monomial orders only enter when
printing or running division-type algorithms.  The text format accepted by
``Ring.parse`` (and produced by ``Polynomial.__str__``) is the one exchange
format used everywhere: identifiers for variables, ``+ - * ^``, integer and
``a/b`` rational literals.  Multiplication is always explicit (``2*x``, not
``2x``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InputError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[-+*^()/]))"
)


class Ring:
    """An ordered tuple of variable names; the ambient polynomial ring."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for nm in names:
            if not _NAME_RE.match(nm):
                raise InputError(f"bad variable name {nm!r}")
        if len(set(names)) != len(names):
            raise InputError("duplicate variable names")
        self.names = names
        self._index = {nm: i for i, nm in enumerate(names)}

    @property
    def arity(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.arity: c})

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.arity
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.arity))

    def extend(self, extra: Iterable[str], front: bool = False) -> "Ring":
        """A ring with additional variables appended (or prepended)."""
        extra = tuple(extra)
        clash = set(extra) & set(self.names)
        if clash:
            raise InputError(f"variable names already in ring: {sorted(clash)}")
        return Ring(extra + self.names if front else self.names + extra)

    def from_terms(self, terms: Mapping[tuple, Fraction]) -> "Polynomial":
        return Polynomial(self, terms)

    def parse(self, text: str) -> "Polynomial":
        return _parse_poly(self, text)

    def parse_point(self, text: str) -> "AffinePoint":
        parts = [t.strip() for t in text.split(",")]
        if parts == [""]:
            parts = []
        if len(parts) != self.arity:
            raise InputError(
                f"point has {len(parts)} coordinates, ring has {self.arity}"
            )
        return AffinePoint(self, tuple(parse_rational(t) for t in parts))


def parse_rational(text: str) -> Fraction:
    """Parse an integer or a/b literal (signs allowed)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational literal {text!r}") from exc


class AffinePoint:
    """A rational point of the ambient affine space."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: Ring, coords: Iterable):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != ring.arity:
            raise InputError("point arity does not match ring")
        self.ring = ring
        self.coords = coords

    def is_origin(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, AffinePoint)
            and self.ring == other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.ring, self.coords))

    def __repr__(self):
        return f"AffinePoint({', '.join(str(c) for c in self.coords)})"

    def __str__(self):
        return ", ".join(str(c) for c in self.coords)

    def negate(self) -> "AffinePoint":
        return AffinePoint(self.ring, tuple(-c for c in self.coords))


def _grevlex_desc_key(exp: tuple) -> tuple:
    # canonical display order; larger key = earlier term
    return (sum(exp), tuple(-e for e in reversed(exp)))


class Polynomial:
    """Sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple, Fraction]):
        clean = {}
        for exp, c in terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            if len(exp) != ring.arity or any(e < 0 for e in exp):
                raise InputError(f"bad exponent tuple {exp!r}")
            clean[tuple(exp)] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.arity, Fraction(0))

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def variables(self) -> set[int]:
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return used

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(sorted(self.terms.items()))))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise InputError("polynomials from different rings")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        raise InputError(f"cannot combine polynomial with {type(other).__name__}")

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.ring, {e: cc * c for e, cc in self.terms.items()})

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: Mapping[int, "Polynomial"], target: Ring = None) -> "Polynomial":
        """Replace variables by polynomials.

        ``bindings`` maps variable indices of this ring to polynomials of the
        target ring (default: this ring).  Unbound variables must exist in the
        target ring under the same name.
        """
        tgt = target or self.ring
        cache: dict[tuple[int, int], Polynomial] = {}
        images: dict[int, Polynomial] = {}

        def image(i: int) -> Polynomial:
            if i not in images:
                if i in bindings:
                    img = bindings[i]
                    if img.ring != tgt:
                        raise InputError("binding lands in the wrong ring")
                else:
                    try:
                        j = tgt._index[self.ring.names[i]]
                    except KeyError:
                        raise InputError(
                            f"variable {self.ring.names[i]} missing from target ring"
                        ) from None
                    img = tgt.var(j)
                images[i] = img
            return images[i]

        def power(i: int, k: int) -> Polynomial:
            key = (i, k)
            if key not in cache:
                cache[key] = image(i) ** k
            return cache[key]

        out = tgt.zero()
        for exp, c in self.terms.items():
            term = tgt.constant(c)
            for i, k in enumerate(exp):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def translate(self, point: AffinePoint) -> "Polynomial":
        """p(z + x): move the point x to the origin."""
        if point.ring != self.ring:
            raise InputError("point from a different ring")
        if point.is_origin():
            return self
        bindings = {
            i: self.ring.var(i) + self.ring.constant(c)
            for i, c in enumerate(point.coords)
            if c != 0
        }
        return self.substitute(bindings)

    # -- text --------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=_grevlex_desc_key, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"{self.ring.names[i]}^{k}" if k > 1 else self.ring.names[i]
                for i, k in enumerate(exp)
                if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"


# -- parser -----------------------------------------------------------------


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise InputError(f"unexpected character {text[pos:].strip()[0]!r}")
            break
        if m.group("name"):
            tokens.append(("name", m.group("name")))
        elif m.group("int"):
            tokens.append(("int", m.group("int")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive descent over: expr := term (+|- term)*, term := factor (* factor)*,
    factor := atom (^ INT)?, atom := NAME | NUMBER | ( expr ) | - atom."""

    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise InputError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise InputError("empty polynomial")
        p = self.expr()
        if self.pos != len(self.tokens):
            kind, val = self.peek()
            raise InputError(
                f"trailing {val!r} in {self.text!r} (use explicit '*')"
            )
        return p

    def expr(self) -> Polynomial:
        kind, val = self.peek()
        if (kind, val) == ("op", "-"):
            self.take()
            p = -self.term()
        else:
            p = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        p = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise InputError("exponent must be a nonnegative integer")
            p = p ** int(val)
        return p

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "name":
            try:
                return self.ring.var(self.ring._index[val])
            except KeyError:
                raise InputError(f"unknown variable {val!r}") from None
        if kind == "int":
            num = int(val)
            if self.peek() == ("op", "/"):
                self.take()
                kind2, val2 = self.take()
                if kind2 != "int":
                    raise InputError("denominator must be an integer")
                return self.ring.constant(Fraction(num, int(val2)))
            return self.ring.constant(num)
        if (kind, val) == ("op", "("):
            p = self.expr()
            self.expect_op(")")
            return p
        if (kind, val) == ("op", "-"):
            return -self.atom()
        raise InputError(f"unexpected token in {self.text!r}")


def _parse_poly(ring: Ring, text: str) -> Polynomial:
    return _Parser(ring, text).parse()
