"""Pure-Python reduction kernel.

Polynomials here are dicts mapping exponent tuples to nonzero ints, kept
primitive (coefficient gcd 1) wherever noted.  Order codes match
segrenum.orders: 0 grevlex, 1 lex, 2 block elimination, 3 local
(negative-degree grevlex), 4 grlex.
"""

from math import gcd


def cmp_exp(a, b, code, block):
    """Compare exponent tuples under the coded order: -1, 0 or 1."""
    if code == 0:  # grevlex
        da = sum(a)
        db = sum(b)
        if da != db:
            return 1 if da > db else -1
        for i in range(len(a) - 1, -1, -1):
            d = a[i] - b[i]
            if d:
                return -1 if d > 0 else 1
        return 0
    if code == 1:  # lex
        for i in range(len(a)):
            d = a[i] - b[i]
            if d:
                return 1 if d > 0 else -1
        return 0
    if code == 2:  # block: grevlex front, then grevlex back
        da = sum(a[:block])
        db = sum(b[:block])
        if da != db:
            return 1 if da > db else -1
        for i in range(block - 1, -1, -1):
            d = a[i] - b[i]
            if d:
                return -1 if d > 0 else 1
        da = sum(a[block:])
        db = sum(b[block:])
        if da != db:
            return 1 if da > db else -1
        for i in range(len(a) - 1, block - 1, -1):
            d = a[i] - b[i]
            if d:
                return -1 if d > 0 else 1
        return 0
    if code == 3:  # local: smaller degree is bigger
        da = sum(a)
        db = sum(b)
        if da != db:
            return 1 if da < db else -1
        for i in range(len(a) - 1, -1, -1):
            d = a[i] - b[i]
            if d:
                return -1 if d > 0 else 1
        return 0
    # grlex
    da = sum(a)
    db = sum(b)
    if da != db:
        return 1 if da > db else -1
    for i in range(len(a)):
        d = a[i] - b[i]
        if d:
            return 1 if d > 0 else -1
    return 0


def lead_exp(p, code, block):
    """Largest exponent of a nonempty term dict."""
    best = None
    for e in p:
        if best is None or cmp_exp(e, best, code, block) > 0:
            best = e
    return best


def exp_div(a, b):
    """True when monomial b divides monomial a."""
    for x, y in zip(a, b):
        if y > x:
            return False
    return True


def exp_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def content(p):
    g = 0
    for c in p.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def make_primitive(p):
    """Divide out the coefficient gcd (in place is avoided; returns p or a copy)."""
    if not p:
        return p
    g = content(p)
    if g <= 1:
        return p
    return {e: c // g for e, c in p.items()}


def _cancel_lead(h, e, b, le, lc, g):
    """h := a*h - (b/d)*x^(e-le)*g with a = lc/d; returns the factor a applied to h."""
    d = gcd(lc, b)
    a = lc // d
    b = b // d
    if a < 0:
        a = -a
        b = -b
    if a != 1:
        for k in h:
            h[k] *= a
    shift = exp_sub(e, le)
    for ge, gc in g.items():
        k = exp_add(ge, shift)
        v = h.get(k, 0) - b * gc
        if v:
            h[k] = v
        else:
            h.pop(k, None)
    return a


def reduce_full(p, basis, code, block):
    """Fully reduce p by basis; fraction-free with multiplier tracking.

    basis is a list of (lead_exp, lead_coeff, term_dict) with nonzero dicts.
    Returns (remainder_dict, mnum, mden) where remainder == (mnum/mden) * p
    modulo the ideal generated by the basis; the exact normal form is
    remainder * mden / mnum.
    """
    h = dict(p)
    r = {}
    mnum = 1
    mden = 1
    steps = 0
    while h:
        e = lead_exp(h, code, block)
        hit = None
        for le, lc, g in basis:
            if exp_div(e, le):
                hit = (le, lc, g)
                break
        if hit is None:
            r[e] = h.pop(e)
            continue
        a = _cancel_lead(h, e, h[e], hit[0], hit[1], hit[2])
        if a != 1:
            if r:
                for k in r:
                    r[k] *= a
            mnum *= a
        steps += 1
        if steps & 7 == 0 and h:
            g0 = content(h)
            if r:
                g0 = gcd(g0, content(r))
            if g0 > 1:
                for k in h:
                    h[k] //= g0
                for k in r:
                    r[k] //= g0
                mden *= g0
    g1 = gcd(mnum, mden)
    if g1 > 1:
        mnum //= g1
        mden //= g1
    return r, mnum, mden


def spoly(f, lf, cf, g, lg, cg, code, block):
    """Primitive S-polynomial of primitive inputs with precomputed leads."""
    L = exp_lcm(lf, lg)
    d = gcd(cf, cg)
    af = cg // d
    ag = cf // d
    sf = exp_sub(L, lf)
    sg = exp_sub(L, lg)
    out = {}
    for e, c in f.items():
        out[exp_add(e, sf)] = af * c
    for e, c in g.items():
        k = exp_add(e, sg)
        v = out.get(k, 0) - ag * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return make_primitive(out)


def mora_nf(p, basis, code, block, limit=0):
    """Mora weak normal form for local orders.

    basis is a list of (lead_exp, lead_coeff, ecart, term_dict).  The reducer
    set may temporarily grow by intermediate results (the ecart trick), which
    is what makes the loop terminate for non-well-orders.  Returns a primitive
    remainder dict whose lead is not divisible by any basis lead (or {}).

    A nonzero ``limit`` caps the reduction steps; when exceeded, returns None
    so the caller can fall back to a homogenization-based computation.
    """
    T = list(basis)
    h = make_primitive(dict(p))
    steps = 0
    while h:
        steps += 1
        if limit and steps > limit:
            return None
        e = lead_exp(h, code, block)
        best = None
        for entry in T:
            if exp_div(e, entry[0]):
                if best is None or entry[2] < best[2]:
                    best = entry
        if best is None:
            return h
        eh = 0
        for k in h:
            s = sum(k)
            if s > eh:
                eh = s
        eh -= sum(e)
        if best[2] > eh:
            T.append((e, h[e], eh, dict(h)))
        _cancel_lead(h, e, h[e], best[0], best[1], best[3])
        h = make_primitive(h)
    return {}
