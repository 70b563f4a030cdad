"""Chain interpolation between two ordered step functions.

Given cut-set families ``F`` (from the upper function) and ``G`` (from the
lower function) with ``F_i rho G_j`` whenever ``i <= j``, an ascending sweep
builds a chain ``H`` with ``F_i rho H_j``, ``H_i rho H_j`` and
``H_i rho G_j``.  The inserted function is ``h(x) = inf {t : x in H(t)}``.

Two modes are supported:

``exact``
    Works on the gaps between consecutive values and additionally asks
    ``C rho C`` of every chain member.  For both named relations that makes
    each ``H_i`` clopen, which gives ``g <= h <= f`` exactly and closed
    fibres.
``literal``
    Works on a rational grid (values, midpoints, two sentinels) with only
    strict-inequality constraints between grid points.  The result can
    overshoot the bounds by less than one value step; the slack is reported
    per point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .cutsets import CutPolicy, CutSetFamily, PremiseFailure, check_premise, make_cutsets
from .errors import FinsertError, PreconditionError
from .realfn import FiniteFunction, build_levels, classify, compare_le
from .relations import BinaryRelation, RelationKind, holds_mask
from .topology import PointSet, Topology


class Mode(str, Enum):
    EXACT = "exact"
    LITERAL = "literal"


class Preset(str, Enum):
    RAW = "raw"
    COR1 = "cor1"
    COR2 = "cor2"
    COR3 = "cor3"
    COR4 = "cor4"


PRESET_RELATION = {
    Preset.RAW: RelationKind.KERNEL_SUB_VEE,
    Preset.COR1: RelationKind.KERNEL_SUB_VEE,
    Preset.COR3: RelationKind.KERNEL_SUB_VEE,
    Preset.COR2: RelationKind.CLOSED_INTERPOLANT,
    Preset.COR4: RelationKind.CLOSED_INTERPOLANT,
}


class InsertionError(FinsertError):
    pass


class PremiseError(InsertionError):
    def __init__(self, failure: PremiseFailure):
        self.failure = failure
        super().__init__(str(failure))


class NoWitness(InsertionError):
    """No set ``C`` satisfies the constraints of one interpolation step.

    The constraint families are kept so the failure can be re-checked
    independently with :meth:`recheck`.
    """

    def __init__(
        self,
        index: int,
        level: Optional[Fraction],
        lower: tuple[PointSet, ...],
        upper: tuple[PointSet, ...],
        self_constraint: bool,
        relation: BinaryRelation,
    ):
        self.index = index
        self.level = level
        self.lower = lower
        self.upper = upper
        self.self_constraint = self_constraint
        self.relation = relation
        where = f"gap {index}" if level is None else f"level {level}"
        super().__init__(
            f"no interpolating set at {where}: lower={list(lower)} upper={list(upper)}"
            + (" with C rho C" if self_constraint else "")
        )

    def recheck(self, t: Topology) -> bool:
        """True iff an exhaustive scan confirms that no candidate works."""
        return all(
            not _admissible(self.relation, t, c, self.lower, self.upper, self.self_constraint)
            for c in range(1 << t.n)
        )


def _admissible(rel, t, c, lower, upper, self_constraint) -> bool:
    if self_constraint and not holds_mask(rel, t, c, c):
        return False
    for a in lower:
        if not holds_mask(rel, t, a.mask, c):
            return False
    for b in upper:
        if not holds_mask(rel, t, c, b.mask):
            return False
    return True


@dataclass(frozen=True)
class StepWitness:
    index: int
    level: Optional[Fraction]
    lower: tuple[PointSet, ...]
    upper: tuple[PointSet, ...]
    chosen: PointSet


@dataclass(frozen=True)
class InterpolationChain:
    mode: Mode
    levels: tuple[Fraction, ...]
    # exact mode: one entry per gap; literal mode: one entry per grid point
    points: tuple[Fraction, ...]
    H: tuple[PointSet, ...]
    witnesses: tuple[StepWitness, ...]


def literal_grid(levels: Sequence[Fraction]) -> list[Fraction]:
    """Values, two sentinels one unit outside, and midpoints of neighbours."""
    coarse = [levels[0] - 1, *levels, levels[-1] + 1]
    grid = [coarse[0]]
    for a, b in zip(coarse, coarse[1:]):
        grid += [(a + b) / 2, b]
    return grid


def gap_representatives(levels: Sequence[Fraction]) -> list[Fraction]:
    """One rational strictly inside each gap ``0..K``."""
    reps = [levels[0] - 1]
    reps += [(a + b) / 2 for a, b in zip(levels, levels[1:])]
    reps.append(levels[-1] + 1)
    return reps


def _uniq(sets: list[PointSet]) -> tuple[PointSet, ...]:
    seen, out = set(), []
    for s in sets:
        if s.mask not in seen:
            seen.add(s.mask)
            out.append(s)
    return tuple(out)


def _first_candidate(rel, t, lower, upper, self_constraint) -> Optional[int]:
    for c in range(1 << t.n):
        if _admissible(rel, t, c, lower, upper, self_constraint):
            return c
    return None


def interpolate(
    fu: CutSetFamily, gl: CutSetFamily, rel: BinaryRelation, t: Topology, mode=Mode.EXACT
) -> InterpolationChain:
    mode = Mode(mode)
    if fu.levels != gl.levels:
        raise PreconditionError("cut-set families use different level lists")
    levels = fu.levels
    H: list[PointSet] = []
    witnesses: list[StepWitness] = []

    if mode is Mode.EXACT:
        points = tuple(gap_representatives(levels))
        F, G = fu.gap_values, gl.gap_values
        for i in range(len(F)):
            lower = _uniq(list(F[: i + 1]) + H[:i])
            upper = _uniq(list(G[i:]))
            c = _first_candidate(rel, t, lower, upper, True)
            if c is None:
                raise NoWitness(i, None, lower, upper, True, rel)
            H.append(PointSet(t.n, c))
            witnesses.append(StepWitness(i, None, lower, upper, H[-1]))
    else:
        points = tuple(literal_grid(levels))
        F = [fu.at(p) for p in points]
        G = [gl.at(p) for p in points]
        for k, p in enumerate(points):
            lower = _uniq(F[:k] + H[:k])
            upper = _uniq(G[k + 1:])
            c = _first_candidate(rel, t, lower, upper, False)
            if c is None:
                raise NoWitness(k, p, lower, upper, False, rel)
            H.append(PointSet(t.n, c))
            witnesses.append(StepWitness(k, p, lower, upper, H[-1]))

    return InterpolationChain(mode, levels, points, tuple(H), tuple(witnesses))


class MalformedChain(InsertionError):
    pass


def extract(chain: InterpolationChain) -> FiniteFunction:
    """``h(x)`` is the least level whose chain member contains ``x``."""
    H = chain.H
    n = H[-1].universe_size
    if H[-1].mask != (1 << n) - 1:
        raise MalformedChain(f"top chain member {H[-1]!r} is not the whole carrier")
    if chain.mode is Mode.EXACT:
        if H[0].mask:
            raise MalformedChain(f"bottom chain member {H[0]!r} is not empty")
        # gap i >= 1 has infimum v_i = levels[i - 1]
        values_at = [None, *chain.levels]
    else:
        values_at = list(chain.points)
    out = []
    for x in range(n):
        for i, s in enumerate(H):
            if x in s:
                out.append(values_at[i])
                break
    return FiniteFunction(out)


@dataclass
class InsertionReport:
    mode: Mode
    h: FiniteFunction
    bounds_ok: bool
    contra_ok: bool
    identity_ok: bool
    exact_bounds: bool = False
    slack: tuple[tuple[Fraction, Fraction], ...] = ()
    identity_mismatches: int = 0
    identity_checked: int = 0
    diagnostics: list[str] = field(default_factory=list)
    chain: Optional[InterpolationChain] = None
    relation: Optional[str] = None
    preset: Optional[str] = None
    policy: Optional[str] = None

    @property
    def passed(self) -> bool:
        if self.mode is Mode.EXACT:
            return self.bounds_ok and self.contra_ok and self.identity_ok
        return self.bounds_ok and self.contra_ok


def _succ(coarse: list[Fraction], v: Fraction) -> Fraction:
    return next(c for c in coarse if c > v)


def _pred(coarse: list[Fraction], v: Fraction) -> Fraction:
    return next(c for c in reversed(coarse) if c < v)


def verify(
    t: Topology,
    lower: FiniteFunction,
    upper: FiniteFunction,
    chain: InterpolationChain,
    h: FiniteFunction,
    mode=Mode.EXACT,
) -> InsertionReport:
    mode = Mode(mode)
    diagnostics = []
    exact_bounds = compare_le(lower, h) and compare_le(h, upper)
    slack = tuple(
        (max(Fraction(0), hv - uv), max(Fraction(0), lv - hv))
        for lv, hv, uv in zip(lower, h, upper)
    )
    if mode is Mode.EXACT:
        bounds_ok = exact_bounds
    else:
        levels = list(chain.levels)
        coarse = [levels[0] - 1, *levels, levels[-1] + 1]
        bounds_ok = True
        for x, (lv, hv, uv) in enumerate(zip(lower, h, upper)):
            if hv > _succ(coarse, uv) or hv < _pred(coarse, lv):
                bounds_ok = False
                diagnostics.append(f"point {x}: h={hv} outside one level step of [{lv}, {uv}]")
    for x, (lv, hv, uv) in enumerate(zip(lower, h, upper)):
        if hv > uv:
            diagnostics.append(f"point {x}: h={hv} exceeds upper bound {uv}")
        elif hv < lv:
            diagnostics.append(f"point {x}: h={hv} undercuts lower bound {lv}")

    contra_ok = classify(t, h).contra_continuous
    if not contra_ok:
        for v in h.range():
            fib = h.fiber(v)
            if not t.is_closed_mask(fib.mask):
                diagnostics.append(f"fibre of {v} = {fib!r} is not closed")

    mismatches = checked = 0
    pts, H = chain.points, chain.H
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            lhs = h.preimage_open_interval(pts[i], pts[j]).mask
            rhs = t.vee_mask(H[j].mask) & ~t.kernel_mask(H[i].mask)
            checked += 1
            if lhs != rhs:
                mismatches += 1
                if mismatches <= 3:
                    diagnostics.append(
                        f"preimage of ({pts[i]}, {pts[j]}) is {PointSet(t.n, lhs)!r}, "
                        f"vee/kernel difference is {PointSet(t.n, rhs)!r}"
                    )
    return InsertionReport(
        mode=mode,
        h=h,
        bounds_ok=bounds_ok,
        contra_ok=contra_ok,
        identity_ok=mismatches == 0,
        exact_bounds=exact_bounds,
        slack=slack,
        identity_mismatches=mismatches,
        identity_checked=checked,
        diagnostics=diagnostics,
        chain=chain,
    )


def check_preset(t: Topology, lower: FiniteFunction, upper: FiniteFunction, preset) -> None:
    """Raise PreconditionError unless the functions belong to the preset's classes."""
    preset = Preset(preset)
    if preset is Preset.RAW:
        return
    lo, up = classify(t, lower), classify(t, upper)
    if preset is Preset.COR1:
        need = [("lower", "uscc", lo.uscc), ("upper", "lscc", up.lscc)]
    elif preset is Preset.COR3:
        need = [("lower", "usB1", lo.usB1), ("upper", "lsB1", up.lsB1)]
    elif preset is Preset.COR2:
        need = [("lower", "lscc", lo.lscc), ("upper", "uscc", up.uscc)]
    else:
        need = [("lower", "lsB1", lo.lsB1), ("upper", "usB1", up.usB1)]
    missing = [f"{who} function is not {cls}" for who, cls, ok in need if not ok]
    if missing:
        raise PreconditionError(f"{preset.value} gate: " + "; ".join(missing))


def insert(
    t: Topology,
    lower: FiniteFunction,
    upper: FiniteFunction,
    relation_kind=None,
    policy=CutPolicy.STRICT,
    mode=Mode.EXACT,
    preset=Preset.RAW,
) -> InsertionReport:
    """Run the full pipeline: gates, levels, cut sets, premise, chain, extraction, checks.

    Raises PreconditionError, PremiseError or NoWitness.
    """
    preset = Preset(preset)
    mode = Mode(mode)
    policy = CutPolicy(policy)
    if lower.n != t.n or upper.n != t.n:
        raise PreconditionError(
            f"functions on {lower.n} and {upper.n} points, topology on {t.n}"
        )
    if not compare_le(lower, upper):
        raise PreconditionError("lower function is not pointwise <= upper function")
    check_preset(t, lower, upper, preset)
    kind = RelationKind(relation_kind) if relation_kind else PRESET_RELATION[preset]
    rel = BinaryRelation(t.n, kind)

    levels = build_levels(lower, upper)
    fu = make_cutsets(t, upper, policy, levels)
    gl = make_cutsets(t, lower, policy, levels)
    failure = check_premise(fu, gl, rel, t)
    if failure is not None:
        raise PremiseError(failure)
    chain = interpolate(fu, gl, rel, t, mode)
    h = extract(chain)
    report = verify(t, lower, upper, chain, h, mode)
    report.relation = kind.value
    report.preset = preset.value
    report.policy = policy.value
    return report
