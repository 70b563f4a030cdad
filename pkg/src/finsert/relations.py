"""Binary relations on the power set of a finite space.

Two named relations drive the insertion presets:

* ``kernel-vee``: ``A rho B`` iff ``kernel(A) <= vee(B)``;
* ``closed-interpolant``: ``A rho B`` iff some closed ``F`` satisfies
  ``kernel(A) <= F <= kernel(F) <= vee(B)``.

Arbitrary relations can be given as an explicit table of mask pairs.
Tabulated forms store, for each subset ``A``, a row bitset over ``P(X)``
whose bit ``B`` is set when ``A rho B``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional

from .errors import CapExceeded, UniverseMismatch
from .topology import MAX_POWERSET_POINTS, PointSet, Topology, bits

#: default carrier cap for tabulating the bar relation
MAX_BAR_POINTS = 8


class RelationKind(str, Enum):
    KERNEL_SUB_VEE = "kernel-vee"
    CLOSED_INTERPOLANT = "closed-interpolant"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class BinaryRelation:
    n: int
    kind: RelationKind
    pairs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @classmethod
    def kernel_sub_vee(cls, n: int) -> "BinaryRelation":
        return cls(n, RelationKind.KERNEL_SUB_VEE)

    @classmethod
    def closed_interpolant(cls, n: int) -> "BinaryRelation":
        return cls(n, RelationKind.CLOSED_INTERPOLANT)

    @classmethod
    def explicit(cls, n: int, pairs: Iterable[tuple]) -> "BinaryRelation":
        masks = set()
        full = (1 << n) - 1
        for a, b in pairs:
            am = a.mask if isinstance(a, PointSet) else int(a)
            bm = b.mask if isinstance(b, PointSet) else int(b)
            if am & ~full or bm & ~full or am < 0 or bm < 0:
                raise UniverseMismatch(f"pair ({a!r}, {b!r}) leaves the {n}-point carrier")
            masks.add((am, bm))
        return cls(n, RelationKind.EXPLICIT, frozenset(masks))

    @classmethod
    def named(cls, name: str, n: int) -> "BinaryRelation":
        kind = RelationKind(name)
        if kind is RelationKind.EXPLICIT:
            raise ValueError("explicit relations need a pair table")
        return cls(n, kind)

    @property
    def name(self) -> str:
        return self.kind.value


def holds_mask(rel: BinaryRelation, t: Topology, a: int, b: int) -> bool:
    if rel.kind is RelationKind.KERNEL_SUB_VEE:
        return t.kernel_mask(a) & ~t.vee_mask(b) == 0
    if rel.kind is RelationKind.CLOSED_INTERPOLANT:
        # The smallest admissible F is the closure of kernel(A); kernel is
        # monotone, so that F works iff any F does.
        f_star = t.closure_mask(t.kernel_mask(a))
        return t.kernel_mask(f_star) & ~t.vee_mask(b) == 0
    return (a, b) in rel.pairs


def holds(rel: BinaryRelation, t: Topology, a: PointSet, b: PointSet) -> bool:
    if rel.n != t.n:
        raise UniverseMismatch(f"relation on {rel.n} points, topology on {t.n}")
    return holds_mask(rel, t, t._mask(a), t._mask(b))


def closed_interpolant_witness(t: Topology, a: PointSet) -> PointSet:
    """The minimal closed set ``F`` tried by the closed-interpolant relation."""
    return PointSet(t.n, t.closure_mask(t.kernel_mask(t._mask(a))))


@dataclass(frozen=True)
class RelationTable:
    """``rows[A]`` has bit ``B`` set iff ``A rho B``; ``cols`` is the transpose."""

    n: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def holds(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)


def tabulate(rel: BinaryRelation, t: Topology, cap: int = MAX_POWERSET_POINTS) -> RelationTable:
    if rel.n != t.n:
        raise UniverseMismatch(f"relation on {rel.n} points, topology on {t.n}")
    if t.n > cap:
        raise CapExceeded(f"tabulating over P(X) needs n <= {cap}, got {t.n}")
    size = 1 << t.n
    rows = [0] * size
    cols = [0] * size
    if rel.kind is RelationKind.EXPLICIT:
        for a, b in rel.pairs:
            rows[a] |= 1 << b
            cols[b] |= 1 << a
    else:
        for a in range(size):
            row = 0
            for b in range(size):
                if holds_mask(rel, t, a, b):
                    row |= 1 << b
                    cols[b] |= 1 << a
            rows[a] = row
    return RelationTable(t.n, tuple(rows), tuple(cols))


def bar(rel: BinaryRelation, t: Topology, cap: int = MAX_BAR_POINTS) -> BinaryRelation:
    """The derived relation: ``A bar B`` iff ``B rho V => A rho V`` and ``U rho A => U rho B``."""
    if t.n > cap:
        raise CapExceeded(f"bar relation tabulation needs n <= {cap}, got {t.n}")
    table = tabulate(rel, t)
    return BinaryRelation.explicit(t.n, _bar_pairs(table))


def _bar_pairs(table: RelationTable) -> list[tuple[int, int]]:
    size = 1 << table.n
    out = []
    for a in range(size):
        for b in range(size):
            if _bar_holds(table, a, b):
                out.append((a, b))
    return out


def _bar_holds(table: RelationTable, a: int, b: int) -> bool:
    return table.rows[b] & ~table.rows[a] == 0 and table.cols[a] & ~table.cols[b] == 0


@dataclass(frozen=True)
class StrongnessFailure:
    condition: int
    lower: tuple[PointSet, ...]
    upper: tuple[PointSet, ...]

    def __str__(self) -> str:
        lo = ", ".join(map(repr, self.lower))
        up = ", ".join(map(repr, self.upper))
        if self.condition == 1:
            return f"condition 1: no interpolant C for lower [{lo}] and upper [{up}]"
        if self.condition == 2:
            return f"condition 2: {lo} is a subset of {up} but not related under bar"
        return f"condition 3: {lo} rho {up} without kernel/vee containment"


@dataclass(frozen=True)
class StrongnessReport:
    condition1_ok: bool
    condition2_ok: bool
    condition3_ok: bool
    condition1_ok_up_to: tuple[int, int]
    first_failure: Optional[StrongnessFailure]

    @property
    def ok(self) -> bool:
        return self.condition1_ok and self.condition2_ok and self.condition3_ok


def check_strong(
    rel: BinaryRelation,
    t: Topology,
    m_max: int = 2,
    n_max: int = 2,
    cap: int = MAX_POWERSET_POINTS,
) -> StrongnessReport:
    """Check the three strong-relation conditions over ``P(X)``.

    Conditions (2) and (3) are checked for every pair of subsets.  The
    interpolation condition (1) is checked only for lower families of at
    most ``m_max`` sets and upper families of at most ``n_max`` sets; the
    report carries that bound.
    """
    table = tabulate(rel, t, cap=cap)
    n = t.n
    size = 1 << n
    ps = lambda m: PointSet(n, m)  # noqa: E731
    failures: dict[int, StrongnessFailure] = {}

    for a in range(size):
        if 3 in failures:
            break
        ka = t.kernel_mask(a)
        row = table.rows[a]
        for b in bits(row):
            if ka & ~b or a & ~t.vee_mask(b):
                failures[3] = StrongnessFailure(3, (ps(a),), (ps(b),))
                break

    for b in range(size):
        if 2 in failures:
            break
        # enumerate subsets a of b
        a = b
        while True:
            if not _bar_holds(table, a, b):
                failures[2] = StrongnessFailure(2, (ps(a),), (ps(b),))
                break
            if a == 0:
                break
            a = (a - 1) & b

    cond1 = _check_interpolation(table, m_max, n_max)
    if cond1 is not None:
        lows, ups = cond1
        failures[1] = StrongnessFailure(1, tuple(map(ps, lows)), tuple(map(ps, ups)))

    first = None
    for c in (1, 2, 3):
        if c in failures:
            first = failures[c]
            break
    return StrongnessReport(
        condition1_ok=1 not in failures,
        condition2_ok=2 not in failures,
        condition3_ok=3 not in failures,
        condition1_ok_up_to=(m_max, n_max),
        first_failure=first,
    )


def _check_interpolation(table: RelationTable, m_max: int, n_max: int):
    size = 1 << table.n
    all_bits = (1 << size) - 1

    def lower_fams(m):
        for fam in combinations(range(size), m):
            r = all_bits
            for a in fam:
                r &= table.rows[a]
            yield fam, r

    def upper_fams(k):
        for fam in combinations(range(size), k):
            mask, c = 0, all_bits
            for b in fam:
                mask |= 1 << b
                c &= table.cols[b]
            yield fam, mask, c

    uppers = {k: list(upper_fams(k)) for k in range(1, n_max + 1)}
    for m in range(1, m_max + 1):
        for k in range(1, n_max + 1):
            for lows, row in lower_fams(m):
                for ups, upmask, col in uppers[k]:
                    if row & upmask != upmask:
                        continue  # premise: every A_i rho every B_j
                    if row & col == 0:
                        return lows, ups
    return None


def find_interpolant(table: RelationTable, lower: Iterable[int], upper: Iterable[int]) -> Optional[int]:
    """Smallest mask ``C`` with ``A rho C`` for all lower and ``C rho B`` for all upper."""
    size = 1 << table.n
    cand = (1 << size) - 1
    for a in lower:
        cand &= table.rows[a]
    for b in upper:
        cand &= table.cols[b]
    if cand == 0:
        return None
    return (cand & -cand).bit_length() - 1
