"""Exact rational-valued functions on a finite carrier and their classes.

Values are :class:`fractions.Fraction`.  A finite-range function has only
finitely many distinct sublevel sets ``{f < t}``, so every semicontinuity
class is decided by inspecting ``{f < v}`` and ``{f <= v}`` for each value
``v`` (and dually for superlevel sets).
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from .errors import PreconditionError, UniverseMismatch
from .topology import PointSet, Topology, is_f_sigma


def to_rational(value) -> Fraction:
    """Coerce ``value`` to an exact Fraction; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational values")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {value!r} as an exact rational")


@dataclass(frozen=True)
class FiniteFunction:
    """A total function from ``{0, ..., n-1}`` to the rationals."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable):
        object.__setattr__(self, "values", tuple(to_rational(v) for v in values))

    @classmethod
    def constant(cls, n: int, value) -> "FiniteFunction":
        return cls([value] * n)

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __neg__(self) -> "FiniteFunction":
        return FiniteFunction(-v for v in self.values)

    def shift(self, c) -> "FiniteFunction":
        c = to_rational(c)
        return FiniteFunction(v + c for v in self.values)

    def range(self) -> list[Fraction]:
        return sorted(set(self.values))

    def _where(self, pred) -> PointSet:
        mask = 0
        for x, v in enumerate(self.values):
            if pred(v):
                mask |= 1 << x
        return PointSet(self.n, mask)

    def below(self, t) -> PointSet:
        """The strict sublevel set ``{x : f(x) < t}``."""
        t = to_rational(t)
        return self._where(lambda v: v < t)

    def at_most(self, t) -> PointSet:
        """The weak sublevel set ``{x : f(x) <= t}``."""
        t = to_rational(t)
        return self._where(lambda v: v <= t)

    def above(self, t) -> PointSet:
        """The strict superlevel set ``{x : f(x) > t}``."""
        t = to_rational(t)
        return self._where(lambda v: v > t)

    def fiber(self, v) -> PointSet:
        v = to_rational(v)
        return self._where(lambda w: w == v)

    def preimage_open_interval(self, lo, hi) -> PointSet:
        lo, hi = to_rational(lo), to_rational(hi)
        return self._where(lambda v: lo < v < hi)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def _same_carrier(*fns: FiniteFunction) -> int:
    n = fns[0].n
    for f in fns[1:]:
        if f.n != n:
            raise UniverseMismatch(f"functions live on {n} and {f.n} points")
    return n


def compare_le(g: FiniteFunction, f: FiniteFunction) -> bool:
    """Pointwise ``g <= f``."""
    _same_carrier(g, f)
    return all(a <= b for a, b in zip(g.values, f.values))


@dataclass(frozen=True)
class ClassFlags:
    usc: bool
    lsc: bool
    uscc: bool
    lscc: bool
    usB1: bool
    lsB1: bool
    contra_continuous: bool
    continuous: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _sublevel_sets(f: FiniteFunction) -> list[int]:
    out = []
    for v in f.range():
        out.append(f.below(v).mask)
        out.append(f.at_most(v).mask)
    return out


def _superlevel_sets(f: FiniteFunction) -> list[int]:
    out = []
    for v in f.range():
        out.append(f.above(v).mask)
        out.append((~f.below(v)).mask)  # {f >= v}
    return out


def classify(t: Topology, f: FiniteFunction) -> ClassFlags:
    if f.n != t.n:
        raise UniverseMismatch(f"function on {f.n} points, topology on {t.n}")
    sub = _sublevel_sets(f)
    sup = _superlevel_sets(f)
    fibers = [f.fiber(v).mask for v in f.range()]
    usc = all(t.is_open_mask(m) for m in sub)
    lsc = all(t.is_open_mask(m) for m in sup)
    uscc = all(t.is_closed_mask(m) for m in sub)
    lscc = all(t.is_closed_mask(m) for m in sup)
    usB1 = all(is_f_sigma(t, PointSet(t.n, m)) for m in sub)
    lsB1 = all(is_f_sigma(t, PointSet(t.n, m)) for m in sup)
    return ClassFlags(
        usc=usc,
        lsc=lsc,
        uscc=uscc,
        lscc=lscc,
        usB1=usB1,
        lsB1=lsB1,
        contra_continuous=all(t.is_closed_mask(m) for m in fibers),
        continuous=all(t.is_open_mask(m) for m in fibers),
    )


def build_levels(lower: FiniteFunction, upper: FiniteFunction) -> list[Fraction]:
    """Sorted distinct values taken by either function.

    With levels ``v_1 < ... < v_K``, gap ``i`` in ``0..K`` is the open
    interval ``(v_i, v_{i+1})`` where ``v_0 = -inf`` and ``v_{K+1} = +inf``.
    """
    n = _same_carrier(lower, upper)
    if n == 0:
        raise PreconditionError("cannot build levels on an empty carrier")
    return sorted(set(lower.values) | set(upper.values))
