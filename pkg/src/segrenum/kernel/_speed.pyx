# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of segrenum.kernel._pure; same contracts, same results.

Coefficients stay Python ints (they grow without bound); the win comes from
typed exponent loops in the comparison, divisibility and lead scans.
"""

from math import gcd


cpdef int cmp_exp(tuple a, tuple b, int code, int block):
    cdef Py_ssize_t i, n = len(a)
    cdef long da = 0, db = 0, d
    if code == 0:  # grevlex
        for i in range(n):
            da += <long> a[i]
            db += <long> b[i]
        if da != db:
            return 1 if da > db else -1
        for i in range(n - 1, -1, -1):
            d = <long> a[i] - <long> b[i]
            if d:
                return -1 if d > 0 else 1
        return 0
    if code == 1:  # lex
        for i in range(n):
            d = <long> a[i] - <long> b[i]
            if d:
                return 1 if d > 0 else -1
        return 0
    if code == 2:  # block: grevlex front, then grevlex back
        for i in range(block):
            da += <long> a[i]
            db += <long> b[i]
        if da != db:
            return 1 if da > db else -1
        for i in range(block - 1, -1, -1):
            d = <long> a[i] - <long> b[i]
            if d:
                return -1 if d > 0 else 1
        da = 0
        db = 0
        for i in range(block, n):
            da += <long> a[i]
            db += <long> b[i]
        if da != db:
            return 1 if da > db else -1
        for i in range(n - 1, block - 1, -1):
            d = <long> a[i] - <long> b[i]
            if d:
                return -1 if d > 0 else 1
        return 0
    if code == 3:  # local: smaller degree is bigger
        for i in range(n):
            da += <long> a[i]
            db += <long> b[i]
        if da != db:
            return 1 if da < db else -1
        for i in range(n - 1, -1, -1):
            d = <long> a[i] - <long> b[i]
            if d:
                return -1 if d > 0 else 1
        return 0
    for i in range(n):  # grlex
        da += <long> a[i]
        db += <long> b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(n):
        d = <long> a[i] - <long> b[i]
        if d:
            return 1 if d > 0 else -1
    return 0


cpdef lead_exp(dict p, int code, int block):
    cdef tuple best = None
    cdef tuple e
    for e in p:
        if best is None or cmp_exp(e, best, code, block) > 0:
            best = e
    return best


cpdef bint exp_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> b[i] > <long> a[i]:
            return False
    return True


cpdef tuple exp_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] if <long> a[i] > <long> b[i] else b[i]
    return tuple(out)


cpdef tuple exp_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] + <long> b[i]
    return tuple(out)


cpdef tuple exp_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] - <long> b[i]
    return tuple(out)


cpdef content(dict p):
    g = 0
    for c in p.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


cpdef dict make_primitive(dict p):
    if not p:
        return p
    g = content(p)
    if g <= 1:
        return p
    return {e: c // g for e, c in p.items()}


cdef _cancel_lead(dict h, tuple e, b, tuple le, lc, dict g):
    d = gcd(lc, b)
    a = lc // d
    b = b // d
    if a < 0:
        a = -a
        b = -b
    cdef tuple k, ge
    if a != 1:
        for k in h:
            h[k] = h[k] * a
    cdef tuple shift = exp_sub(e, le)
    for ge in g:
        k = exp_add(ge, shift)
        v = h.get(k, 0) - b * g[ge]
        if v:
            h[k] = v
        else:
            h.pop(k, None)
    return a


def reduce_full(p, basis, int code, int block):
    """See _pure.reduce_full; identical contract and output."""
    cdef dict h = dict(p)
    cdef dict r = {}
    mnum = 1
    mden = 1
    cdef long steps = 0
    cdef tuple e
    cdef tuple le
    cdef dict g
    while h:
        e = lead_exp(h, code, block)
        hit = None
        for entry in basis:
            if exp_div(e, <tuple> entry[0]):
                hit = entry
                break
        if hit is None:
            r[e] = h.pop(e)
            continue
        a = _cancel_lead(h, e, h[e], <tuple> hit[0], hit[1], <dict> hit[2])
        if a != 1:
            if r:
                for k in r:
                    r[k] = r[k] * a
            mnum = mnum * a
        steps += 1
        if steps & 7 == 0 and h:
            g0 = content(h)
            if r:
                g0 = gcd(g0, content(r))
            if g0 > 1:
                for k in h:
                    h[k] = h[k] // g0
                for k in r:
                    r[k] = r[k] // g0
                mden = mden * g0
    g1 = gcd(mnum, mden)
    if g1 > 1:
        mnum = mnum // g1
        mden = mden // g1
    return r, mnum, mden


def spoly(f, tuple lf, cf, g, tuple lg, cg, int code, int block):
    """See _pure.spoly."""
    cdef tuple L = exp_lcm(lf, lg)
    d = gcd(cf, cg)
    af = cg // d
    ag = cf // d
    cdef tuple sf = exp_sub(L, lf)
    cdef tuple sg = exp_sub(L, lg)
    cdef dict out = {}
    cdef tuple e, k
    for e in f:
        out[exp_add(e, sf)] = af * f[e]
    for e in g:
        k = exp_add(e, sg)
        v = out.get(k, 0) - ag * g[e]
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return make_primitive(out)


def mora_nf(p, basis, int code, int block, long limit=0):
    """See _pure.mora_nf; identical contract and output."""
    cdef list T = list(basis)
    cdef dict h = make_primitive(dict(p))
    cdef tuple e, k
    cdef long eh, s
    cdef long steps = 0
    while h:
        steps += 1
        if limit and steps > limit:
            return None
        e = lead_exp(h, code, block)
        best = None
        for entry in T:
            if exp_div(e, <tuple> entry[0]):
                if best is None or entry[2] < best[2]:
                    best = entry
        if best is None:
            return h
        eh = 0
        for k in h:
            s = 0
            for i in range(len(k)):
                s += <long> k[i]
            if s > eh:
                eh = s
        eh -= sum(e)
        if best[2] > eh:
            T.append((e, h[e], eh, dict(h)))
        _cancel_lead(h, e, h[e], <tuple> best[0], best[1], <dict> best[3])
        h = make_primitive(h)
    return {}
