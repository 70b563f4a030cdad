"""Lower indefinite cut sets and the insertion premise.

A lower cut set of ``f`` at level ``t`` is any set between ``{f < t}`` and
``{f <= t}``.  For a step function the two bounds differ only when ``t``
is one of the function's values, so between consecutive levels the cut
set is a single well-defined set.  Families here are indexed by those gaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import PreconditionError, UniverseMismatch
from .realfn import FiniteFunction, compare_le, to_rational
from .relations import BinaryRelation, holds_mask
from .topology import PointSet, Topology


class CutPolicy(str, Enum):
    STRICT = "strict"  # A(f, t) = {f < t}
    WEAK = "weak"  # A(f, t) = {f <= t}


@dataclass(frozen=True)
class CutSetFamily:
    function: FiniteFunction
    policy: CutPolicy
    levels: tuple[Fraction, ...]
    gap_values: tuple[PointSet, ...]

    @property
    def n(self) -> int:
        return self.function.n

    def gap_of(self, t) -> Optional[int]:
        """Gap index containing ``t``, or None if ``t`` is itself a level."""
        t = to_rational(t)
        i = 0
        for v in self.levels:
            if t == v:
                return None
            if t < v:
                return i
            i += 1
        return i

    def at(self, t) -> PointSet:
        """The family's cut set at an arbitrary rational level ``t``."""
        t = to_rational(t)
        if self.policy is CutPolicy.STRICT:
            return self.function.below(t)
        return self.function.at_most(t)


def make_cutsets(t: Topology, f: FiniteFunction, policy, levels: Sequence) -> CutSetFamily:
    if f.n != t.n:
        raise UniverseMismatch(f"function on {f.n} points, topology on {t.n}")
    policy = CutPolicy(policy)
    levels = tuple(to_rational(v) for v in levels)
    if list(levels) != sorted(set(levels)):
        raise PreconditionError("levels must be strictly increasing")
    if not set(f.values) <= set(levels):
        raise PreconditionError("levels must include every value of the function")
    gaps = [PointSet(f.n, 0)]
    gaps += [f.at_most(v) for v in levels]
    return CutSetFamily(f, policy, levels, tuple(gaps))


@dataclass(frozen=True)
class PremiseFailure:
    i: int
    j: int
    upper_set: PointSet
    lower_set: PointSet

    def __str__(self) -> str:
        return (
            f"premise fails at gaps ({self.i}, {self.j}): "
            f"{self.upper_set!r} not related to {self.lower_set!r}"
        )


def check_premise(
    fu: CutSetFamily, gl: CutSetFamily, rel: BinaryRelation, t: Topology
) -> Optional[PremiseFailure]:
    """Check ``F_i rho G_j`` for all gap indices ``i <= j``.

    ``fu`` is built from the upper function and ``gl`` from the lower one.
    The diagonal ``i == j`` is included: two rationals inside one gap give
    the same sets on both sides.  Returns None on success.
    """
    if fu.levels != gl.levels:
        raise PreconditionError("cut-set families use different level lists")
    if not compare_le(gl.function, fu.function):
        raise PreconditionError("lower function is not pointwise <= upper function")
    if rel.n != t.n or fu.n != t.n:
        raise UniverseMismatch("relation, families and topology disagree on carrier size")
    size = len(fu.gap_values)
    for i in range(size):
        a = fu.gap_values[i].mask
        for j in range(i, size):
            if not holds_mask(rel, t, a, gl.gap_values[j].mask):
                return PremiseFailure(i, j, fu.gap_values[i], gl.gap_values[j])
    return None
