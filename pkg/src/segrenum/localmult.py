"""Local invariants at a point: tangent cones, local dimension, multiplicity.

Standard bases are computed with Mora's normal form under the local order
(negative degree grevlex); the lowest-degree forms of a standard basis
generate the tangent cone, whose graded Hilbert data gives the local
dimension and Hilbert-Samuel multiplicity.
"""

from __future__ import annotations

import itertools

from . import kernel
from .errors import InputError
from .groebner import Ideal, _det_key, _from_int_terms, _zpoly
from .orders import GREVLEX, LOCAL, block_order
from .ring import AffinePoint, Polynomial

# Mora reduction occasionally runs away (degree/coefficient blow-up on
# unlucky inputs, with per-step cost growing as the coefficients swell);
# past this many steps per normal form we abandon it and recompute through
# homogenization, which terminates under a global order.  Healthy local
# reductions finish in far fewer steps; a false trip only costs speed.
MORA_STEP_LIMIT = 400


class _MoraBudgetExceeded(Exception):
    pass


def standard_basis(gens) -> list[dict]:
    """Weak standard basis (primitive int dicts) under the local order.

    Mora normal forms with ecart selection are the fast path; if any single
    reduction exceeds its step budget the whole computation restarts via
    Lazard homogenization (one fresh variable, elimination-block order).
    """
    try:
        return _standard_basis_mora(gens)
    except _MoraBudgetExceeded:
        return _standard_basis_lazard(gens)


def _standard_basis_mora(gens) -> list[dict]:
    K = kernel.get()
    code, block = LOCAL.code, 0
    G = [K.make_primitive(_zpoly(g)) for g in gens if not g.is_zero()]
    G.sort(key=lambda z: _det_key(z, LOCAL))

    def entry(z):
        le = K.lead_exp(z, code, block)
        ec = max(sum(e) for e in z) - sum(le)
        return (le, z[le], ec, z)

    basis = [entry(z) for z in G]
    pairs = {(i, j) for i, j in itertools.combinations(range(len(G)), 2)}

    def lcm_of(i, j):
        return K.exp_lcm(basis[i][0], basis[j][0])

    while pairs:
        i, j = min(pairs, key=lambda ij: (LOCAL.key(lcm_of(*ij)), ij))
        pairs.discard((i, j))
        li, lj = basis[i][0], basis[j][0]
        L = K.exp_lcm(li, lj)
        if L == K.exp_add(li, lj):  # coprime leads
            continue
        s = K.spoly(G[i], li, basis[i][1], G[j], lj, basis[j][1], code, block)
        if not s:
            continue
        h = K.mora_nf(s, basis, code, block, MORA_STEP_LIMIT)
        if h is None:
            raise _MoraBudgetExceeded
        if not h:
            continue
        t = len(G)
        G.append(h)
        basis.append(entry(h))
        for i2 in range(t):
            pairs.add((i2, t))
    return G


def _standard_basis_lazard(gens) -> list[dict]:
    """Standard basis through homogenization: lift each generator to a
    homogeneous polynomial with a fresh front variable, take a basis under
    the order that eliminates it (which on homogeneous input agrees with
    the homogenized local order), and set the variable back to 1."""
    ring = gens[0].ring
    name = "_h"
    while name in ring.names:
        name += "h"
    R = ring.extend([name], front=True)
    hpolys = []
    for g in gens:
        z = _zpoly(g)
        if not z:
            continue
        top = max(sum(e) for e in z)
        hpolys.append(_from_int_terms(R, {(top - sum(e),) + e: c for e, c in z.items()}))
    out = []
    for g in Ideal(R, hpolys).groebner(block_order(1)):
        terms = {}
        for e, c in g.terms.items():
            tail = e[1:]
            terms[tail] = terms.get(tail, 0) + c
        p = ring.from_terms({e: c for e, c in terms.items() if c})
        if not p.is_zero():
            out.append(kernel.get().make_primitive(_zpoly(p)))
    out.sort(key=lambda z: _det_key(z, LOCAL))
    return out


def tangent_cone(ideal: Ideal) -> Ideal:
    """Ideal of the tangent cone at the origin (lowest forms of a standard
    basis).  The input must already be translated so the point of interest is
    the origin; if the origin is not on V(I) the unit ideal is returned.
    """
    ring = ideal.ring
    if any(g.constant_term() != 0 for g in ideal.gens):
        return Ideal(ring, (ring.one(),))
    if ideal.is_zero():
        return Ideal(ring, ())
    forms = []
    for z in standard_basis(ideal.gens):
        d = min(sum(e) for e in z)
        form = {e: c for e, c in z.items() if sum(e) == d}
        forms.append(_from_int_terms(ring, form))
    return Ideal(ring, forms)


def local_dim_mult(ideal: Ideal, point: AffinePoint | None = None) -> tuple[int, int]:
    """(local dimension, Hilbert-Samuel multiplicity) of V(I) at the point.

    Points off the variety give (-1, 0).  The zero ideal gives (arity, 1).
    """
    at = ideal.translate(point) if point is not None and not point.is_origin() else ideal
    if any(g.constant_term() != 0 for g in at.gens):
        return (-1, 0)
    cone = tangent_cone(at)
    hd = cone.hilbert_data()
    return (hd.dimension, hd.degree)


def colength(ideal: Ideal, point: AffinePoint | None = None) -> int:
    """Vector-space dimension of R/I for a zero-dimensional ideal.

    The point (default origin) must be an isolated point of V(I), checked via
    the tangent cone; the count itself is the global staircase count, i.e. it
    sums the contributions of every point of V(I).
    """
    at = ideal.translate(point) if point is not None and not point.is_origin() else ideal
    hd = at.hilbert_data()
    if hd.dimension != 0:
        raise InputError(
            f"colength is infinite: the quotient has dimension {hd.dimension}"
        )
    ld, _ = local_dim_mult(at)
    if ld != 0:
        raise InputError("the point is not on V(I)")
    return hd.degree
