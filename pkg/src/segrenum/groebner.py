"""Groebner bases and ideal arithmetic over Q.

Buchberger with the normal selection strategy (smallest S-pair lcm first)
and both classical pair criteria; all reductions run fraction-free over int
through the kernel backends, with content removed as coefficients grow.
Reduced bases are monic and sorted by decreasing lead, so equal ideals have
equal bases under a fixed order; the grevlex basis is the canonical one used
for equality tests and printed reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import kernel
from .errors import InputError
from .orders import GREVLEX, MonomialOrder, block_order
from .ring import AffinePoint, Polynomial, Ring


def _to_int_terms(p: Polynomial) -> tuple[dict, Fraction]:
    """Split p as scale * primitive-int-dict (scale Fraction, dict content 1)."""
    if not p.terms:
        return {}, Fraction(1)
    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    q = {e: int(c * den) for e, c in p.terms.items()}
    g = 0
    for v in q.values():
        g = gcd(g, v)
    if g > 1:
        q = {e: v // g for e, v in q.items()}
        return q, Fraction(g, den)
    return q, Fraction(1, den)


def _zpoly(p: Polynomial) -> dict:
    return _to_int_terms(p)[0]


def _from_int_terms(ring: Ring, z: dict, scale=Fraction(1)) -> Polynomial:
    return Polynomial(ring, {e: scale * c for e, c in z.items()})


def _sign_fix(z: dict, order: MonomialOrder) -> dict:
    """Flip signs so the leading coefficient is positive."""
    if not z:
        return z
    le = max(z, key=order.key)
    if z[le] < 0:
        return {e: -c for e, c in z.items()}
    return z


def _det_key(z: dict, order: MonomialOrder):
    return (order.key(max(z, key=order.key)), len(z), sorted(z.items()))


def _reduced_groebner(zgens: list[dict], order: MonomialOrder) -> list[dict]:
    """Reduced Groebner basis of primitive int term dicts, leads positive,
    sorted by decreasing lead."""
    K = kernel.get()
    code, block = order.code, order.block
    G = [K.make_primitive(dict(z)) for z in zgens if z]
    G.sort(key=lambda z: _det_key(z, order))
    basis = []  # (lead_exp, lead_coeff, dict) parallel to G
    for z in G:
        le = K.lead_exp(z, code, block)
        basis.append((le, z[le], z))

    pairs = set()
    done = set()
    for i, j in itertools.combinations(range(len(G)), 2):
        pairs.add((i, j))

    def lcm_of(i, j):
        return K.exp_lcm(basis[i][0], basis[j][0])

    while pairs:
        i, j = min(pairs, key=lambda ij: (order.key(lcm_of(*ij)), ij))
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = basis[i][0], basis[j][0]
        L = K.exp_lcm(li, lj)
        if L == K.exp_add(li, lj):  # coprime leads: S-poly reduces to zero
            continue
        chain = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if K.exp_div(L, basis[k][0]):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    chain = True
                    break
        if chain:
            continue
        s = K.spoly(G[i], li, basis[i][1], G[j], lj, basis[j][1], code, block)
        if not s:
            continue
        r, _, _ = K.reduce_full(s, basis, code, block)
        if not r:
            continue
        r = K.make_primitive(r)
        t = len(G)
        G.append(r)
        le = K.lead_exp(r, code, block)
        basis.append((le, r[le], r))
        for i2 in range(t):
            pairs.add((i2, t))

    # minimalize: keep only elements whose lead no other kept lead divides
    idx = sorted(range(len(G)), key=lambda i: order.key(basis[i][0]))
    kept = []
    for i in idx:
        if not any(K.exp_div(basis[i][0], basis[k][0]) for k in kept):
            kept.append(i)
    # tail-reduce each kept element against the others
    out = []
    for i in kept:
        others = [basis[k] for k in kept if k != i]
        if others:
            r, _, _ = K.reduce_full(G[i], others, code, block)
        else:
            r = G[i]
        out.append(_sign_fix(K.make_primitive(dict(r)), order))
    out.sort(key=lambda z: order.key(K.lead_exp(z, code, block)), reverse=True)
    return out


def normal_form(p: Polynomial, gens, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of p on division by the given polynomials (exact, Fraction).

    Canonical (depends only on the ideal) when gens is a Groebner basis for
    the order; otherwise some remainder under the fixed reduction strategy.
    """
    K = kernel.get()
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return p
    code, block = order.code, order.block
    basis = []
    for g in gens:
        z = _zpoly(g)
        le = K.lead_exp(z, code, block)
        basis.append((le, z[le], z))
    z, scale = _to_int_terms(p)
    if not z:
        return p.ring.zero()
    r, mn, md = K.reduce_full(z, basis, code, block)
    return _from_int_terms(p.ring, r, scale * Fraction(md, mn))


def exact_div(p: Polynomial, g: Polynomial) -> Polynomial:
    """p / g when g divides p exactly; InputError otherwise."""
    if g.is_zero():
        raise InputError("division by the zero polynomial")
    key = GREVLEX.key
    glead = max(g.terms, key=key)
    gc = g.terms[glead]
    rem = p
    q: dict = {}
    while rem.terms:
        e = max(rem.terms, key=key)
        de = tuple(a - b for a, b in zip(e, glead))
        if any(x < 0 for x in de):
            raise InputError("inexact polynomial division")
        c = rem.terms[e] / gc
        q[de] = c
        rem = rem - Polynomial(p.ring, {de: c}) * g
    return Polynomial(p.ring, q)


class Ideal:
    """A finitely generated ideal with cached reduced Groebner bases."""

    __slots__ = ("ring", "gens", "_gb", "_hilbert")

    def __init__(self, ring: Ring, gens):
        gens = tuple(g if isinstance(g, Polynomial) else ring.parse(g) for g in gens)
        for g in gens:
            if g.ring != ring:
                raise InputError("generator from a different ring")
        self.ring = ring
        self.gens = tuple(g for g in gens if not g.is_zero())
        self._gb: dict = {}
        self._hilbert = None

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({inside})"

    # -- bases ---------------------------------------------------------------

    def groebner(self, order: MonomialOrder = GREVLEX) -> tuple[Polynomial, ...]:
        """Reduced monic Groebner basis, sorted by decreasing lead."""
        if order not in self._gb:
            zs = [_zpoly(g) for g in self.gens]
            gb = _reduced_groebner(zs, order)
            polys = []
            for z in gb:
                le = max(z, key=order.key)
                polys.append(_from_int_terms(self.ring, z, Fraction(1, z[le])))
            self._gb[order] = tuple(polys)
        return self._gb[order]

    def leading_exponents(self, order: MonomialOrder = GREVLEX) -> tuple:
        return tuple(max(g.terms, key=order.key) for g in self.groebner(order))

    def canonical_strings(self) -> list[str]:
        return [str(g) for g in self.groebner(GREVLEX)]

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        gb = self.groebner(GREVLEX)
        return len(gb) == 1 and gb[0].is_constant()

    def contains(self, p: Polynomial) -> bool:
        if p.is_zero():
            return True
        return normal_form(p, self.groebner(GREVLEX), GREVLEX).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def normal_form(self, p: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
        return normal_form(p, self.groebner(order), order)

    def radical_contains(self, p: Polynomial) -> bool:
        """Membership in the radical (Rabinowitsch trick)."""
        if p.is_zero():
            return True
        ext = self.ring.extend(["_rb"], front=True)
        shift = {i: ext.var(i + 1) for i in range(self.ring.arity)}
        gens = [g.substitute(shift, ext) for g in self.gens]
        gens.append(ext.one() - ext.var(0) * p.substitute(shift, ext))
        return Ideal(ext, gens).is_unit()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner(GREVLEX) == other.groebner(
            GREVLEX
        )

    def __hash__(self):
        return hash((self.ring, self.groebner(GREVLEX)))

    # -- constructions ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Ideal):
            if other.ring != self.ring:
                raise InputError("ideals from different rings")
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(other))

    def translate(self, point: AffinePoint) -> "Ideal":
        """Generators composed with z -> z + x, moving x to the origin."""
        return Ideal(self.ring, tuple(g.translate(point) for g in self.gens))

    def intersect(self, other: "Ideal") -> "Ideal":
        """I cap K via the t-trick: eliminate t from t*I + (1-t)*K."""
        if other.ring != self.ring:
            raise InputError("ideals from different rings")
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, ())
        ext = self.ring.extend(["_s"], front=True)
        t = ext.var(0)
        shift = {i: ext.var(i + 1) for i in range(self.ring.arity)}
        gens = [t * g.substitute(shift, ext) for g in self.gens]
        one_t = ext.one() - t
        gens += [one_t * g.substitute(shift, ext) for g in other.gens]
        gb = Ideal(ext, gens).groebner(block_order(1))
        kept = []
        back = {i + 1: self.ring.var(i) for i in range(self.ring.arity)}
        for g in gb:
            if all(e[0] == 0 for e in g.terms):
                kept.append(g.substitute(back, self.ring))
        return Ideal(self.ring, kept)

    def quotient(self, g: Polynomial) -> "Ideal":
        """Ideal quotient I : g."""
        if g.is_zero():
            raise InputError("quotient by the zero polynomial")
        if self.is_zero():
            return self
        meet = self.intersect(Ideal(self.ring, (g,)))
        return Ideal(self.ring, tuple(exact_div(h, g) for h in meet.gens))

    def saturate_poly(self, g: Polynomial) -> "Ideal":
        """I : g^inf by iterated quotients until the basis stabilizes."""
        cur = self
        while True:
            nxt = cur.quotient(g)
            if nxt == cur:
                return cur
            cur = nxt

    def saturate(self, other: "Ideal") -> "Ideal":
        """I : J^inf as the intersection of the per-generator saturations."""
        gens = [g for g in other.gens if not g.is_zero()]
        if not gens:
            raise InputError("saturation by the zero ideal")
        sats = []
        for g in dict.fromkeys(gens):
            s = self.saturate_poly(g)
            if s == self:
                # g is a nonzerodivisor mod I, so nothing saturates away
                return self
            if not s.is_unit():
                sats.append(s)
        if not sats:
            # every generator is nilpotent mod I, so some power of J lies in I
            return Ideal(self.ring, (self.ring.one(),))
        out = sats[0]
        for s in sats[1:]:
            out = out.intersect(s)
        return out

    def eliminate(self, var_indices) -> "Ideal":
        """Eliminate the given variables; result lives in the projected ring."""
        drop = sorted(set(var_indices))
        for i in drop:
            if not 0 <= i < self.ring.arity:
                raise InputError(f"no variable with index {i}")
        keep = [i for i in range(self.ring.arity) if i not in drop]
        perm = drop + keep  # position p of the permuted ring holds old var perm[p]
        permuted = Ring(tuple(self.ring.names[i] for i in perm))
        fwd = {old: permuted.var(p) for p, old in enumerate(perm)}
        gens = [g.substitute(fwd, permuted) for g in self.gens]
        gb = Ideal(permuted, gens).groebner(block_order(len(drop)))
        target = Ring(tuple(self.ring.names[i] for i in keep))
        back = {len(drop) + p: target.var(p) for p in range(len(keep))}
        kept = []
        for g in gb:
            if all(all(e[p] == 0 for p in range(len(drop))) for e in g.terms):
                kept.append(g.substitute(back, target))
        return Ideal(target, kept)

    # -- numeric invariants ------------------------------------------------------

    def krull_dimension(self) -> int:
        """Dimension of V(I): max independent variable set of the lead ideal.

        Unit ideal gives -1; the zero ideal gives the ambient dimension.
        """
        leads = self.leading_exponents(GREVLEX)
        n = self.ring.arity
        masks = set()
        for le in leads:
            m = 0
            for i, e in enumerate(le):
                if e:
                    m |= 1 << i
            if m == 0:
                return -1
            masks.add(m)
        for k in range(n, -1, -1):
            for combo in itertools.combinations(range(n), k):
                u = 0
                for i in combo:
                    u |= 1 << i
                if all(m & ~u for m in masks):
                    return k
        return -1

    def hilbert_data(self) -> "HilbertData":
        """Hilbert data of the grevlex lead-term ideal (== that of I when
        I is homogeneous)."""
        if self._hilbert is None:
            self._hilbert = hilbert_of_leads(
                self.leading_exponents(GREVLEX), self.ring.arity
            )
        return self._hilbert


@dataclass(frozen=True)
class HilbertData:
    """dimension/degree of R/I plus the Hilbert series numerator.

    The series is numerator(t) / (1-t)^arity; dimension is the pole order at
    t = 1 and degree the value there after clearing the pole (0 for the zero
    module, whose dimension is reported as -1).
    """

    dimension: int
    degree: int
    numerator: tuple[int, ...]


def _minimalize(gens: frozenset) -> frozenset:
    out = []
    for g in sorted(gens, key=lambda e: (sum(e), e)):
        if not any(all(x >= y for x, y in zip(g, h)) for h in out):
            out.append(g)
    return frozenset(out)


def _num_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, c in a.items():
        for j, d in b.items():
            k = i + j
            v = out.get(k, 0) + c * d
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _numerator(gens: frozenset, memo: dict) -> dict:
    """Hilbert series numerator of a monomial ideal, as {degree: coeff}."""
    if gens in memo:
        return memo[gens]
    zero = None
    for g in gens:
        if sum(g) == 0:
            memo[gens] = {}
            return {}
    mixed = [g for g in gens if sum(1 for e in g if e) > 1]
    if not mixed:
        out = {0: 1}
        for g in gens:
            out = _num_mul(out, {0: 1, sum(g): -1})
        memo[gens] = out
        return out
    counts: dict[int, int] = {}
    for g in mixed:
        for i, e in enumerate(g):
            if e:
                counts[i] = counts.get(i, 0) + 1
    pivot = max(sorted(counts), key=lambda i: counts[i])
    n = len(next(iter(gens)))
    xi = tuple(1 if i == pivot else 0 for i in range(n))
    plus = _minimalize(gens | {xi})
    quot = _minimalize(
        frozenset(
            tuple(e - 1 if i == pivot and e else e for i, e in enumerate(g))
            for g in gens
        )
    )
    a = _numerator(plus, memo)
    b = _numerator(quot, memo)
    out = dict(a)
    for k, c in b.items():
        v = out.get(k + 1, 0) + c
        if v:
            out[k + 1] = v
        else:
            out.pop(k + 1, None)
    memo[gens] = out
    return out


def hilbert_of_leads(lead_exps, arity: int) -> HilbertData:
    """Hilbert data for the monomial ideal generated by the given exponents."""
    num = _numerator(_minimalize(frozenset(lead_exps)), {})
    if not num:
        return HilbertData(-1, 0, (0,))
    coeffs = [0] * (max(num) + 1)
    for k, c in num.items():
        coeffs[k] = c
    poly = list(coeffs)
    drops = 0
    while sum(poly) == 0:
        # divide by (1 - t): prefix sums
        acc = 0
        nxt = []
        for c in poly[:-1]:
            acc += c
            nxt.append(acc)
        poly = nxt or [0]
        drops += 1
    return HilbertData(arity - drops, sum(poly), tuple(coeffs))
