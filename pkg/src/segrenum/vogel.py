"""Vogel sequences, Segre numbers and polar multiplicities.

Given generators f = (f_1, ..., f_m) of an ideal on a space X = V(I_X) and a
point x, a Vogel sequence h_1, ..., h_n (n = dim X) of random integer linear
combinations h_j = sum alpha_ji f_i drives the inductive cycle construction

    I_0 = I_X,   I_k^off = I_k : (f)^inf,   I_{k+1} = I_k^off + (h_{k+1}),

whose Z-part multiplicities at x (guarded by the expected dimension n - k)
give one trial vector.  The reported Segre numbers are the lexicographic
minimum of the trial vectors over certified sequences; polar multiplicities
are the same minimum taken over the off-part vectors.  A sequence is
certified when, for every k, the saturated ideal of X + (h_1..h_k) is the
unit ideal or has dimension exactly n - k.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import GenericityError, InputError, UnresolvedMovingSupportError
from .groebner import Ideal
from .localmult import local_dim_mult
from .ring import AffinePoint, Polynomial

DEFAULT_SEED = 101
DEFAULT_TRIALS = 4
DEFAULT_BOUND = 99
CERT_RETRIES = 64


@dataclass(frozen=True)
class VogelSequence:
    """A certified tuple h_1..h_n of combinations of the input generators."""

    alpha: tuple[tuple[int, ...], ...]
    elements: tuple[Polynomial, ...]
    certified: bool


@dataclass(frozen=True)
class VogelStep:
    k: int
    ideal: Ideal
    off: Ideal
    local_dim: int
    mult: int
    off_dim: int
    off_mult: int
    z_mult: int


class VogelRun:
    """The full cycle trace of one Vogel sequence, at the origin."""

    def __init__(self, space: Ideal, f: tuple[Polynomial, ...], sequence: VogelSequence, steps: list[VogelStep]):
        self.space = space
        self.f = f
        self.sequence = sequence
        self.steps = steps
        self._inside: dict[int, Ideal] = {}

    @property
    def mult_z(self) -> tuple[int, ...]:
        return tuple(s.z_mult for s in self.steps)

    @property
    def mult_off(self) -> tuple[int, ...]:
        return tuple(s.off_mult for s in self.steps)

    def inside(self, k: int) -> Ideal:
        """The Z-part ideal I_k : (I_k^off)^inf of step k."""
        if k not in self._inside:
            step = self.steps[k]
            if step.off.is_zero():
                out = Ideal(step.ideal.ring, (step.ideal.ring.one(),))
            elif step.off.is_unit():
                out = step.ideal
            else:
                out = step.ideal.saturate(step.off)
            self._inside[k] = out
        return self._inside[k]


def _combos(f: list[Polynomial], alpha_row, ring) -> Polynomial:
    h = ring.zero()
    for a, p in zip(alpha_row, f):
        if a:
            h = h + p.scale(a)
    return h


def _certify(h: list[Polynomial], X: Ideal, fid: Ideal) -> tuple[bool, int | None]:
    n = len(h)
    gens = list(X.gens)
    for k in range(1, n + 1):
        gens.append(h[k - 1])
        S = Ideal(X.ring, gens).saturate(fid)
        if S.is_unit():
            continue
        if S.krull_dimension() != X.krull_dimension() - k:
            return False, k
    return True, None


def verify_vogel_condition(h, X: Ideal, J: Ideal) -> tuple[bool, int | None]:
    """Check the inductive cut condition for given elements h_1..h_k of J:
    each partial family must cut the off-J locus properly.  Returns
    (True, None) or (False, first failing k)."""
    ring = X.ring
    h = [p if isinstance(p, Polynomial) else ring.parse(p) for p in h]
    for p in h:
        if p.ring != ring:
            raise InputError("elements from a different ring")
        if not J.contains(p):
            raise InputError("h must consist of elements of J")
    return _certify(h, X, J)


def random_vogel_sequence(
    f,
    X: Ideal,
    rng: random.Random,
    bound: int = DEFAULT_BOUND,
    retries: int = CERT_RETRIES,
) -> VogelSequence:
    """Draw integer coefficient rows in [-bound, bound] until certified."""
    ring = X.ring
    n = X.krull_dimension()
    if n < 0:
        raise InputError("the space ideal is the unit ideal")
    f = list(f)
    nonzero = [p for p in f if not p.is_zero()]
    if not nonzero:
        zero_alpha = tuple(tuple(0 for _ in f) for _ in range(n))
        return VogelSequence(zero_alpha, tuple(ring.zero() for _ in range(n)), True)
    fid = Ideal(ring, nonzero)
    last_bad = None
    for _ in range(retries):
        alpha = tuple(
            tuple(rng.randint(-bound, bound) for _ in f) for _ in range(n)
        )
        h = [_combos(f, row, ring) for row in alpha]
        if any(p.is_zero() for p in h):
            continue
        ok, bad = _certify(h, X, fid)
        if ok:
            return VogelSequence(alpha, tuple(h), True)
        last_bad = bad
    raise GenericityError(
        f"no certified Vogel sequence in {retries} draws (failing codim {last_bad})",
        codim=last_bad,
    )


def vogel_run(f, X: Ideal, sequence: VogelSequence) -> VogelRun:
    """Run the cycle construction for one sequence; everything at the origin."""
    ring = X.ring
    f = tuple(f)
    nonzero = [p for p in f if not p.is_zero()]
    fid = Ideal(ring, nonzero)
    n = len(sequence.elements)
    steps: list[VogelStep] = []
    cur = X
    for k in range(n + 1):
        if k > 0:
            cur = steps[-1].off + (sequence.elements[k - 1],)
        expected = n - k
        ld, m = local_dim_mult(cur)
        if ld > expected:
            raise GenericityError(
                f"step {k} has local dimension {ld} > {expected}", codim=k
            )
        mult = m if ld == expected else 0
        if fid.is_zero():
            off = Ideal(ring, (ring.one(),))
        elif cur.is_zero():
            off = cur  # nothing lies in V(f) for nonzero f
        else:
            off = cur.saturate(fid)
        old, om = local_dim_mult(off)
        if old > expected:
            raise GenericityError(
                f"step {k} off-part has local dimension {old} > {expected}", codim=k
            )
        off_mult = om if old == expected else 0
        steps.append(
            VogelStep(k, cur, off, ld, mult, old, off_mult, mult - off_mult)
        )
    return VogelRun(X, f, sequence, steps)


def _translated(f, X: Ideal, point: AffinePoint | None):
    if isinstance(f, (Polynomial, str)):
        f = (f,)
    f = [p if isinstance(p, Polynomial) else X.ring.parse(p) for p in f]
    for p in f:
        if p.ring != X.ring:
            raise InputError("generators from a different ring")
    if point is None or point.is_origin():
        return f, X
    return [p.translate(point) for p in f], X.translate(point)


def run_trials(
    f,
    X: Ideal,
    point: AffinePoint | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
) -> list[VogelRun]:
    """Certified runs for consecutive draws of one seeded stream."""
    if trials < 1:
        raise InputError("trials must be at least 1")
    ft, Xt = _translated(f, X, point)
    rng = random.Random(seed)
    runs = []
    for _ in range(trials):
        seq = random_vogel_sequence(ft, Xt, rng, bound)
        runs.append(vogel_run(ft, Xt, seq))
    return runs


@dataclass(frozen=True)
class MultResult:
    """Lex-min multiplicity vector over trials, with the per-trial vectors."""

    values: tuple[int, ...]
    stable: bool
    trial_vectors: tuple[tuple[int, ...], ...]
    runs: list = field(compare=False, repr=False, default=None)


def _lex_min(vectors) -> tuple[tuple[int, ...], bool]:
    best = min(vectors)
    return best, vectors.count(best) >= 2


def segre_at(f, X, point=None, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED, bound=DEFAULT_BOUND) -> MultResult:
    """Segre numbers (e_0, ..., e_n) of (f) on X at the point."""
    runs = run_trials(f, X, point, trials, seed, bound)
    vectors = [r.mult_z for r in runs]
    best, stable = _lex_min(vectors)
    return MultResult(best, stable, tuple(vectors), runs)


def polar_at(f, X, point=None, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED, bound=DEFAULT_BOUND) -> MultResult:
    """Polar multiplicities (m_0, ..., m_n): the off-part masses at the point."""
    runs = run_trials(f, X, point, trials, seed, bound)
    vectors = [r.mult_off for r in runs]
    best, stable = _lex_min(vectors)
    return MultResult(best, stable, tuple(vectors), runs)


@dataclass(frozen=True)
class FixedCodim:
    k: int
    expected_dim: int
    status: str  # "none" | "fixed" | "moving"
    ideal: Ideal | None
    dim: int | None


@dataclass(frozen=True)
class FixedReport:
    per_codim: tuple[FixedCodim, ...]
    runs: list = field(compare=False, repr=False, default=None)


def _merged_inside(runs, k) -> Ideal | None:
    """Sum of the trial Z-part ideals at codim k; None when all are empty."""
    parts = [r.inside(k) for r in runs]
    if all(p.is_unit() for p in parts):
        return None
    gens = []
    for p in parts:
        gens.extend(p.groebner())
    return Ideal(parts[0].ring, Ideal(parts[0].ring, gens).groebner())


def fixed_support(f, X, point=None, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED, bound=DEFAULT_BOUND) -> FixedReport:
    """Classify the Z-part in each codimension as fixed or moving.

    F_k is the sum over trials of the step-k Z-part ideals; its variety is
    the intersection of the trial supports.  A codim-k part is fixed when
    V(F_k) still has dimension dim X - k, moving when the intersection drops
    dimension (or is empty while some trial had mass).
    """
    if trials < 2:
        raise InputError("fixed/moving classification needs at least 2 trials")
    runs = run_trials(f, X, point, trials, seed, bound)
    back = point.negate() if point is not None and not point.is_origin() else None
    n = len(runs[0].steps) - 1
    entries = []
    for k in range(n + 1):
        expected = n - k
        merged = _merged_inside(runs, k)
        if merged is None:
            entries.append(FixedCodim(k, expected, "none", None, None))
            continue
        if merged.is_unit():
            entries.append(FixedCodim(k, expected, "moving", None, None))
            continue
        d = merged.krull_dimension()
        status = "fixed" if d == expected else "moving"
        if back is not None:
            merged = merged.translate(back)
        entries.append(FixedCodim(k, expected, status, merged, d))
    return FixedReport(tuple(entries), runs)


@dataclass(frozen=True)
class PointPart:
    """Decomposition of the total Segre mass at x into the point coefficient
    and positive-dimensional fixed components."""

    point: int
    e: tuple[int, ...]
    fixed: tuple[tuple[int, Ideal, int], ...]  # (codim, ideal, multiplicity)
    notes: tuple[str, ...]


def point_part(f, X, point=None, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED, bound=DEFAULT_BOUND) -> PointPart:
    """Point coefficient of the Segre/Vogel class at x.

    Total mass sum(e_k) minus the mass sitting on positive-dimensional fixed
    components through x.  Moving mass in positive expected dimension is
    point-supported for a generic limit and is counted into the point with a
    note; a fixed support of intermediate dimension is ambiguous and raises
    UnresolvedMovingSupportError.
    """
    if trials < 2:
        raise InputError("point-part needs at least 2 trials")
    runs = run_trials(f, X, point, trials, seed, bound)
    vectors = [r.mult_z for r in runs]
    e, _ = _lex_min(vectors)
    n = len(e) - 1
    mass = 0
    fixed = []
    notes = []
    for k in range(n + 1):
        ek = e[k]
        if ek == 0:
            continue
        expected = n - k
        if expected == 0:
            mass += ek
            continue
        merged = _merged_inside(runs, k)
        if merged is None or merged.is_unit():
            mass += ek
            notes.append(
                f"codim {k}: moving mass {ek} assumed point-supported"
            )
            continue
        ld, m_fix = local_dim_mult(merged)
        if ld == expected:
            m_eff = min(m_fix, ek)
            fixed.append((k, merged, m_eff))
            if ek > m_eff:
                mass += ek - m_eff
                notes.append(
                    f"codim {k}: moving remainder {ek - m_eff} assumed point-supported"
                )
        elif ld <= 0:
            mass += ek
            if ld == 0:
                notes.append(
                    f"codim {k}: persistent support is the point itself"
                )
            else:
                notes.append(
                    f"codim {k}: moving mass {ek} assumed point-supported"
                )
        else:
            raise UnresolvedMovingSupportError(
                f"codim {k}: fixed support has dimension {ld}, expected {expected} or 0"
            )
    if point is not None and not point.is_origin():
        back = point.negate()
        fixed = [(k, ideal.translate(back), m) for k, ideal, m in fixed]
    return PointPart(mass, e, tuple(fixed), tuple(notes))
