"""Algebraic cycles: divisor cuts, proper intersections, Tworzewski products.

A cycle is a formal integer combination of ideals (its parts); products of
cycles are computed on the product space in (w, eta) coordinates, where block
one keeps the original variable names and block j maps v -> w_v + eta_j_v, so
the diagonal ideal is spanned by the eta variables.  Linear substitution
reduction keeps the working variable count small, and every reduction step is
recorded so component ideals can be mapped back to the original coordinates.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    GenericityError,
    ImproperIntersectionError,
    InputError,
)
from .groebner import Ideal
from .localmult import local_dim_mult
from .ring import AffinePoint, Polynomial, Ring
from .vogel import (
    DEFAULT_BOUND,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    point_part,
    segre_at,
)

SHEAR_RETRIES = 8


@dataclass(frozen=True)
class CycleRep:
    """Formal sum of ideals with integer coefficients on a common ring."""

    ring: Ring
    parts: tuple[tuple[Ideal, int], ...]
    space: Ideal | None = None

    @classmethod
    def build(cls, ring: Ring, weighted, space: Ideal | None = None) -> "CycleRep":
        parts = []
        for ideal, c in weighted:
            if ideal.ring != ring:
                raise InputError("cycle part from a different ring")
            c = int(c)
            if c == 0 or ideal.is_unit():
                continue
            parts.append((ideal, c))
        return cls(ring, tuple(parts), space)

    @classmethod
    def from_ideal(cls, ideal: Ideal, coeff: int = 1) -> "CycleRep":
        return cls.build(ideal.ring, [(ideal, coeff)])

    def is_empty(self) -> bool:
        return not self.parts

    def translate(self, point: AffinePoint) -> "CycleRep":
        return CycleRep(
            self.ring,
            tuple((ideal.translate(point), c) for ideal, c in self.parts),
            self.space.translate(point) if self.space else None,
        )


def divisor_cut(h: Polynomial, cycle: CycleRep) -> CycleRep:
    """Cut a cycle by the divisor of h: parts inside {h = 0} are discarded,
    the rest meet it with the induced scheme structure."""
    if h.is_zero():
        raise InputError("cannot cut by the zero divisor")
    if h.ring != cycle.ring:
        raise InputError("divisor from a different ring")
    parts = []
    for ideal, c in cycle.parts:
        off = ideal.saturate_poly(h)
        if off.is_unit():
            continue
        parts.append((off + (h,), c))
    return CycleRep(cycle.ring, tuple(parts), cycle.space)


# -- linear substitution reduction -------------------------------------------


def _isolated_var(g: Polynomial, allowed, max_degree):
    """A variable occurring exactly once in g, in a bare linear term."""
    counts: dict[int, int] = {}
    for e in g.terms:
        for i, k in enumerate(e):
            if k:
                counts[i] = counts.get(i, 0) + 1
    for i in sorted(counts):
        if counts[i] != 1 or (allowed is not None and i not in allowed):
            continue
        unit = tuple(1 if j == i else 0 for j in range(g.ring.arity))
        if unit not in g.terms:
            continue
        rest_deg = max(
            (sum(e) for e in g.terms if e != unit), default=0
        )
        if max_degree is not None and rest_deg > max_degree:
            continue
        return i, unit
    return None


@dataclass
class Reduction:
    """Outcome of linear_reduce: the shrunken ring plus the back-mapping trail."""

    ring: Ring
    gens: list[Polynomial]
    aux: list[list[Polynomial]]
    trail: list[tuple[str, Polynomial]]  # (eliminated name, replacement)


def linear_reduce(ring, gens, aux=(), allowed=None, max_degree=1) -> Reduction:
    """Substitute away variables isolated in linear terms of generators.

    ``allowed`` restricts which variable indices (of the original ring) may be
    eliminated; ``max_degree`` caps the degree of the replacement expression.
    The trail records (name, replacement) pairs in elimination order, each
    replacement written in the ring current at that step.
    """
    cur_ring = ring
    cur_gens = [g for g in gens if not g.is_zero()]
    cur_aux = [list(block) for block in aux]
    allowed_names = (
        None if allowed is None else {ring.names[i] for i in allowed}
    )
    trail: list[tuple[str, Polynomial]] = []
    while True:
        found = None
        names_ok = (
            None
            if allowed_names is None
            else {cur_ring._index[nm] for nm in allowed_names if nm in cur_ring._index}
        )
        for gi, g in enumerate(cur_gens):
            hit = _isolated_var(g, names_ok, max_degree)
            if hit is not None:
                found = (gi, *hit)
                break
        if found is None:
            return Reduction(cur_ring, cur_gens, cur_aux, trail)
        gi, i, unit = found
        g = cur_gens[gi]
        c = g.terms[unit]
        rest = Polynomial(g.ring, {e: v for e, v in g.terms.items() if e != unit})
        name = cur_ring.names[i]
        new_ring = Ring(cur_ring.names[:i] + cur_ring.names[i + 1 :])
        repl = rest.scale(Fraction(-1) / c).substitute({}, new_ring)
        trail.append((name, repl))
        bind = {i: repl}
        cur_gens = [
            q
            for j, p in enumerate(cur_gens)
            if j != gi and not (q := p.substitute(bind, new_ring)).is_zero()
        ]
        cur_aux = [
            [p.substitute(bind, new_ring) for p in block] for block in cur_aux
        ]
        cur_ring = new_ring


def lift_to_ring(reduction: Reduction, ideal_gens, full_ring: Ring) -> list[Polynomial]:
    """Express an ideal of the reduced ring in the full ring, restoring the
    eliminated-variable relations from the trail."""
    gens = [g.substitute({}, full_ring) for g in ideal_gens]
    for name, repl in reduction.trail:
        v = full_ring.var(full_ring._index[name])
        gens.append(v - repl.substitute({}, full_ring))
    return gens


# -- products -----------------------------------------------------------------


@dataclass
class ProductSpace:
    """Product of translated parts in (w, eta) coordinates."""

    ring: Ring  # w block (original names) then eta blocks
    base: Ring
    factors: int
    space_gens: list[Polynomial]
    eta: list[Polynomial]  # the (r-1)*n diagonal generators


def product_space(ideals, base: Ring) -> ProductSpace:
    r = len(ideals)
    n = base.arity
    names = list(base.names)
    for j in range(2, r + 1):
        names += [f"{nm}__d{j}" for nm in base.names]
    prod = Ring(names)
    gens: list[Polynomial] = []
    for g in ideals[0].gens:
        gens.append(g.substitute({}, prod))
    for j in range(2, r + 1):
        off = n * (j - 1)
        bind = {i: prod.var(i) + prod.var(off + i) for i in range(n)}
        for g in ideals[j - 1].gens:
            gens.append(g.substitute(bind, prod))
    eta = [prod.var(n + q) for q in range(n * (r - 1))]
    return ProductSpace(prod, base, r, gens, eta)


def _to_base(reduction: Reduction, ideal: Ideal, prod: ProductSpace) -> Ideal:
    """Map an ideal living on the reduced product ring back to the base ring,
    restricting to the diagonal (all eta set to zero)."""
    full = lift_to_ring(reduction, ideal.groebner(), prod.ring)
    n = prod.base.arity
    bind = {}
    for i in range(prod.ring.arity):
        if i < n:
            bind[i] = prod.base.var(i)
        else:
            bind[i] = prod.base.zero()
    gens = [g.substitute(bind, prod.base) for g in full]
    return Ideal(prod.base, [g for g in gens if not g.is_zero()])


def _det(mat) -> int:
    """Exact integer determinant (fraction-free Bareiss)."""
    m = [row[:] for row in mat]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for s in range(k + 1, n):
                if m[s][k]:
                    m[k], m[s] = m[s], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _shears(count: int, rng: random.Random, retries: int):
    """Identity first, then random invertible integer matrices."""
    yield None  # identity
    for _ in range(retries):
        while True:
            mat = [
                [rng.randint(-3, 3) for _ in range(count)] for _ in range(count)
            ]
            if _det(mat) != 0:
                break
        yield mat


def _apply_shear(mat, eta):
    if mat is None:
        return list(eta)
    out = []
    for row in mat:
        form = eta[0].ring.zero()
        for a, p in zip(row, eta):
            if a:
                form = form + p.scale(a)
        out.append(form)
    return out


def _dim_of(ideal: Ideal) -> int:
    return -1 if ideal.is_unit() else ideal.krull_dimension()


def _cut_combo(prod: ProductSpace, dims_sum: int, seed: int):
    """Iterated diagonal cuts on one product; returns the final Ideal on the
    reduced ring together with its Reduction, or None when the intersection
    is empty."""
    # integer-derived stream, decoupled from the Vogel draws for the same seed
    rng = random.Random(seed * 0x9E3779B97F4A7C15 + 0x5EA8)
    failures = []
    for mat in _shears(len(prod.eta), rng, SHEAR_RETRIES):
        red = linear_reduce(
            prod.ring, prod.space_gens, aux=[_apply_shear(mat, prod.eta)]
        )
        cur = Ideal(red.ring, red.gens)
        forms = list(red.aux[0])
        cur_dim = dims_sum
        ok = True
        empty = False
        for idx in range(len(forms)):
            form = forms[idx]
            if form.is_zero():
                # the cut already follows from earlier substitutions
                if _dim_of(cur) == cur_dim - 1:
                    cur_dim -= 1
                    continue
                ok = False
                failures.append("degenerate form")
                break
            off = cur.saturate_poly(form)
            if off != cur:
                ok = False
                failures.append("component inside the divisor")
                break
            nxt = cur + (form,)
            sub = linear_reduce(
                nxt.ring, list(nxt.gens), aux=[forms[idx + 1 :]]
            )
            red = Reduction(
                sub.ring, sub.gens, sub.aux, red.trail + sub.trail
            )
            cur = Ideal(sub.ring, sub.gens)
            forms = [None] * (idx + 1) + sub.aux[0]
            d = _dim_of(cur)
            if d == -1:
                empty = True
                break
            if d != cur_dim - 1:
                ok = False
                failures.append(f"cut dropped dimension to {d}")
                break
            cur_dim -= 1
        if not ok:
            continue
        if empty:
            return None
        return cur, red
    raise GenericityError(
        f"no shear passed the cut checks: {failures[-SHEAR_RETRIES:]}"
    )


def cycle_local_mult(cycle: CycleRep, point: AffinePoint | None = None) -> int:
    """Local multiplicity of a cycle at a point: coefficient-weighted
    Hilbert-Samuel multiplicities of the parts through the point."""
    total = 0
    for ideal, c in cycle.parts:
        expected = ideal.krull_dimension()
        moved = (
            ideal.translate(point)
            if point is not None and not point.is_origin()
            else ideal
        )
        ld, m = local_dim_mult(moved)
        if ld == expected:
            total += c * m
    return total


@dataclass(frozen=True)
class ProperIntersection:
    cycle: CycleRep
    mult: int | None  # local multiplicity at the requested point


def proper_intersect(
    cycles,
    point: AffinePoint | None = None,
    seed: int = DEFAULT_SEED,
) -> ProperIntersection:
    """Proper intersection product of two or more cycles.

    Each combination of parts is intersected by iterated divisor cuts with
    the diagonal generators (sheared when the checks demand it); the result
    is a cycle on the common ring together with its local multiplicity at
    the point.  Raises ImproperIntersectionError when a combination meets
    in excess dimension.
    """
    cycles = list(cycles)
    if len(cycles) < 2:
        raise InputError("need at least two cycles")
    ring = cycles[0].ring
    for z in cycles:
        if z.ring != ring:
            raise InputError("cycles from different rings")
    n = ring.arity
    out_parts = []
    for combo in itertools.product(*[z.parts for z in cycles]):
        ideals = [ideal for ideal, _ in combo]
        coeff = 1
        for _, c in combo:
            coeff *= c
        dims = [ideal.krull_dimension() for ideal in ideals]
        if any(d < 0 for d in dims):
            continue
        expected = sum(dims) - (len(ideals) - 1) * n
        prod = product_space(ideals, ring)
        diag = Ideal(prod.ring, prod.space_gens + prod.eta)
        d_actual = _dim_of(diag)
        if d_actual > max(expected, -1):
            raise ImproperIntersectionError(
                f"components meet in dimension {d_actual}, proper is {expected}"
            )
        if d_actual == -1:
            continue
        hit = _cut_combo(prod, sum(dims), seed)
        if hit is None:
            continue
        final, red = hit
        back = _to_base(red, final, prod)
        if back.is_unit():
            continue
        out_parts.append((back, coeff))
    result = CycleRep(ring, tuple(out_parts))
    mult = cycle_local_mult(result, point) if point is not None else None
    return ProperIntersection(result, mult)


# -- pointwise intersection indices -------------------------------------------


@dataclass(frozen=True)
class ExtendedIndex:
    """Intersection index organized by component dimension.

    by_dim[d] is the mass in dimension d; by_codim counts down from the top
    dimension among the contributing parts.
    """

    by_dim: tuple[int, ...]
    stable: bool = True
    notes: tuple[str, ...] = ()

    @property
    def n_top(self) -> int:
        return len(self.by_dim) - 1

    @property
    def total(self) -> int:
        return sum(self.by_dim)

    @property
    def by_codim(self) -> tuple[int, ...]:
        return tuple(reversed(self.by_dim))


def _accumulate(by_dim: dict[int, int], n_part: int, coeff: int, values):
    for k, ek in enumerate(values):
        if ek:
            by_dim[n_part - k] = by_dim.get(n_part - k, 0) + coeff * ek


def _index_from(by_dim: dict[int, int], top: int, stable: bool, notes=()) -> ExtendedIndex:
    vec = tuple(by_dim.get(d, 0) for d in range(top + 1))
    return ExtendedIndex(vec, stable, tuple(notes))


def circ_index(
    f,
    cycle: CycleRep,
    point: AffinePoint | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
) -> ExtendedIndex:
    """Restriction index A o Z at a point: Segre numbers of (f) on each part,
    aggregated by dimension."""
    by_dim: dict[int, int] = {}
    top = -1
    stable = True
    for ideal, c in cycle.parts:
        n_part = ideal.krull_dimension()
        if n_part < 0:
            continue
        top = max(top, n_part)
        res = segre_at(f, ideal, point, trials, seed, bound)
        stable = stable and res.stable
        _accumulate(by_dim, n_part, c, res.values)
    return _index_from(by_dim, top, stable)


def _combo_setup(ideals, ring, point):
    """Translated product + reduction; returns
    (prod, reduction, space, eta, product dim, min part dim)."""
    moved = [
        ideal.translate(point) if point is not None and not point.is_origin() else ideal
        for ideal in ideals
    ]
    dims = [ideal.krull_dimension() for ideal in moved]
    if any(d < 0 for d in dims):
        return None
    prod = product_space(moved, ring)
    red = linear_reduce(prod.ring, prod.space_gens, aux=[prod.eta])
    space = Ideal(red.ring, red.gens)
    n = sum(dims)
    if space.krull_dimension() != n:
        raise InputError(
            "product of parts is not pure-dimensional of the expected dimension"
        )
    return prod, red, space, red.aux[0], n, min(dims)


def tworzewski_index(
    cycles,
    point: AffinePoint | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
) -> ExtendedIndex:
    """Pointwise Tworzewski product index of two or more cycles at x:
    diagonal Segre numbers on the product, multilinear in the parts."""
    cycles = list(cycles)
    if len(cycles) < 2:
        raise InputError("need at least two cycles")
    ring = cycles[0].ring
    for z in cycles:
        if z.ring != ring:
            raise InputError("cycles from different rings")
    by_dim: dict[int, int] = {}
    top = -1
    stable = True
    for combo in itertools.product(*[z.parts for z in cycles]):
        coeff = 1
        for _, c in combo:
            coeff *= c
        setup = _combo_setup([ideal for ideal, _ in combo], ring, point)
        if setup is None:
            continue
        _, _, space, eta, n, cap = setup
        top = max(top, cap)
        res = segre_at(eta, space, None, trials, seed, bound)
        stable = stable and res.stable
        _accumulate(by_dim, n, coeff, res.values)
    return _index_from(by_dim, top, stable)


@dataclass(frozen=True)
class PointPartReport:
    point: int
    fixed: tuple[tuple[Ideal, int, int], ...]  # (ideal, dimension, multiplicity)
    notes: tuple[str, ...]


def _merge_fixed(acc: list, ideal: Ideal, dim: int, mult: int):
    for i, (other, d, m) in enumerate(acc):
        if d == dim and other == ideal:
            acc[i] = (other, d, m + mult)
            return
    acc.append((ideal, dim, mult))


def tworzewski_point_part(
    cycles,
    point: AffinePoint | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
) -> PointPartReport:
    """Coefficient of {x} in the Tworzewski product, with the positive-
    dimensional fixed components (mapped back to the base ring)."""
    cycles = list(cycles)
    if len(cycles) < 2:
        raise InputError("need at least two cycles")
    ring = cycles[0].ring
    mass = 0
    fixed: list = []
    notes: list[str] = []
    back = point.negate() if point is not None and not point.is_origin() else None
    for combo in itertools.product(*[z.parts for z in cycles]):
        coeff = 1
        for _, c in combo:
            coeff *= c
        setup = _combo_setup([ideal for ideal, _ in combo], ring, point)
        if setup is None:
            continue
        prod, red, space, eta, n, _ = setup
        pp = point_part(eta, space, None, trials, seed, bound)
        mass += coeff * pp.point
        notes.extend(pp.notes)
        for k, ideal, m in pp.fixed:
            base_ideal = _to_base(red, ideal, prod)
            if back is not None:
                base_ideal = base_ideal.translate(back)
            _merge_fixed(fixed, base_ideal, n - k, coeff * m)
    return PointPartReport(mass, tuple(fixed), tuple(notes))


def restricted_point_part(
    f,
    cycle: CycleRep,
    point: AffinePoint | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
) -> PointPartReport:
    """Point part of A o Z (valid as the product point part when V(A) is
    smooth): per-part Vogel point parts, aggregated."""
    mass = 0
    fixed: list = []
    notes: list[str] = []
    for ideal, c in cycle.parts:
        if ideal.krull_dimension() < 0:
            continue
        pp = point_part(f, ideal, point, trials, seed, bound)
        mass += c * pp.point
        notes.extend(pp.notes)
        for k, fid, m in pp.fixed:
            d = fid.krull_dimension()
            _merge_fixed(fixed, fid, d, c * m)
    return PointPartReport(mass, tuple(fixed), tuple(notes))


# -- implicitization ----------------------------------------------------------


def implicitize(components, param_ring: Ring, target_ring: Ring) -> Ideal:
    """Vanishing ideal of the closure of the image of t -> (gamma_1(t), ...).

    Components live in the parameter ring; the result lives in the target
    ring, whose arity must match the number of components.
    """
    components = [
        p if isinstance(p, Polynomial) else param_ring.parse(p) for p in components
    ]
    if len(components) != target_ring.arity:
        raise InputError(
            f"{len(components)} components cannot parametrize a space of"
            f" dimension {target_ring.arity}"
        )
    combined = Ring(param_ring.names + target_ring.names)
    np = param_ring.arity
    gens = []
    for i, gamma in enumerate(components):
        z = combined.var(np + i)
        gens.append(z - gamma.substitute({}, combined))
    red = linear_reduce(
        combined, gens, allowed=set(range(np)), max_degree=None
    )
    leftover = [
        red.ring._index[nm] for nm in param_ring.names if nm in red.ring._index
    ]
    ideal = Ideal(red.ring, red.gens)
    if leftover:
        ideal = ideal.eliminate(leftover)
    if ideal.ring != target_ring:
        fix = {
            i: target_ring.var(target_ring._index[nm])
            for i, nm in enumerate(ideal.ring.names)
        }
        ideal = Ideal(
            target_ring, [g.substitute(fix, target_ring) for g in ideal.gens]
        )
    return Ideal(target_ring, ideal.groebner())
