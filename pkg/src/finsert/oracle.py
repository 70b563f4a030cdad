"""Brute-force ground truth for insertion questions.

Nothing here touches relations, cut sets or chains: candidates are listed
point by point and each one is tested with the function classifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional, Sequence

from .errors import CapExceeded, PreconditionError
from .realfn import ClassFlags, FiniteFunction, classify, compare_le, to_rational
from .spacegen import enumerate_topologies
from .topology import Topology, is_extremally_disconnected

DEFAULT_CAP = 10**7


class TargetClass(str, Enum):
    CONTRA_CONTINUOUS = "contra"
    CONTINUOUS = "continuous"
    BAIRE_ONE = "baire-one"


def in_class(flags: ClassFlags, target: TargetClass) -> bool:
    if target is TargetClass.CONTINUOUS:
        return flags.continuous
    if target is TargetClass.BAIRE_ONE:
        # F-sigma preimages are closed preimages on a finite carrier
        return flags.contra_continuous
    return flags.contra_continuous


@dataclass(frozen=True)
class OracleQuery:
    space: Topology
    lower: FiniteFunction
    upper: FiniteFunction
    value_grid: tuple[Fraction, ...] = ()
    target_class: TargetClass = TargetClass.CONTRA_CONTINUOUS

    def grid(self) -> list[Fraction]:
        if self.value_grid:
            return sorted(set(to_rational(v) for v in self.value_grid))
        return sorted(set(self.lower.values) | set(self.upper.values))


@dataclass(frozen=True)
class OracleResult:
    witness: Optional[FiniteFunction]
    examined: int


def search(q: OracleQuery, cap: int = DEFAULT_CAP) -> OracleResult:
    """Scan candidates in lexicographic order (point 0 slowest)."""
    t, lo, up = q.space, q.lower, q.upper
    if lo.n != t.n or up.n != t.n:
        raise PreconditionError("functions and space disagree on carrier size")
    if not compare_le(lo, up):
        raise PreconditionError("lower function is not pointwise <= upper function")
    grid = q.grid()
    if not grid:
        raise PreconditionError("value grid is empty")
    if len(grid) ** t.n > cap:
        raise CapExceeded(f"|grid|^n = {len(grid)}^{t.n} exceeds the cap of {cap}")
    target = TargetClass(q.target_class)
    options = [[v for v in grid if lo[x] <= v <= up[x]] for x in range(t.n)]
    examined = 0
    for vals in product(*options):
        examined += 1
        h = FiniteFunction(vals)
        if in_class(classify(t, h), target):
            return OracleResult(h, examined)
    return OracleResult(None, examined)


def find_insertion(q: OracleQuery, cap: int = DEFAULT_CAP) -> Optional[FiniteFunction]:
    return search(q, cap).witness


def all_functions(n: int, grid: Sequence) -> Iterator[FiniteFunction]:
    grid = sorted(set(to_rational(v) for v in grid))
    for vals in product(grid, repeat=n):
        yield FiniteFunction(vals)


@dataclass(frozen=True)
class NecessityRecord:
    space: Topology
    ed: bool
    all_pairs_insertable: bool
    witness: Optional[tuple[FiniteFunction, FiniteFunction]]
    pairs_checked: int


def necessity_sweep(n: int, value_grid: Sequence, spaces=None) -> list[NecessityRecord]:
    """For each space: does every (uscc g <= lscc f) pair admit a contra-continuous inserter?

    The witness, when present, is the first failing ``(g, f)`` in
    lexicographic order with ``g`` outermost.
    """
    if n > 4:
        raise CapExceeded("necessity sweeps are capped at n=4")
    grid = tuple(sorted(set(to_rational(v) for v in value_grid)))
    records = []
    for t in spaces if spaces is not None else enumerate_topologies(n):
        fns = list(all_functions(t.n, grid))
        flags = [classify(t, f) for f in fns]
        lowers = [f for f, fl in zip(fns, flags) if fl.uscc]
        uppers = [f for f, fl in zip(fns, flags) if fl.lscc]
        witness = None
        checked = 0
        for g in lowers:
            for f in uppers:
                if not compare_le(g, f):
                    continue
                checked += 1
                if find_insertion(OracleQuery(t, g, f, grid)) is None:
                    witness = (g, f)
                    break
            if witness:
                break
        records.append(
            NecessityRecord(t, is_extremally_disconnected(t), witness is None, witness, checked)
        )
    return records
