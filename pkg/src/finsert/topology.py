"""Finite topological spaces on carriers {0, ..., n-1}.

Every finite topology is determined by its minimal-neighbourhood table:
``min_nbr[x]`` is the intersection of all open sets containing ``x``.  The
table is a preorder (reflexive and transitive), and a set is open exactly
when it is the union of the minimal neighbourhoods of its points.  All set
work happens on integer bitmasks; :class:`PointSet` is the public wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, MalformedTopology, UniverseMismatch

#: largest carrier accepted by the set operators
MAX_POINTS = 16
#: largest carrier accepted by searches over the whole power set
MAX_POWERSET_POINTS = 12


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, order=False)
class PointSet:
    """A subset of the carrier ``{0, ..., universe_size - 1}``."""

    universe_size: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.universe_size < 0:
            raise ValueError("universe_size must be non-negative")
        if self.mask < 0 or self.mask >> self.universe_size:
            raise ValueError(
                f"mask {self.mask:#x} has members outside 0..{self.universe_size - 1}"
            )

    @classmethod
    def of(cls, universe_size: int, points: Iterable[int]) -> "PointSet":
        mask = 0
        for p in points:
            if not 0 <= p < universe_size:
                raise ValueError(f"point {p} outside 0..{universe_size - 1}")
            mask |= 1 << p
        return cls(universe_size, mask)

    @classmethod
    def empty(cls, universe_size: int) -> "PointSet":
        return cls(universe_size, 0)

    @classmethod
    def full(cls, universe_size: int) -> "PointSet":
        return cls(universe_size, (1 << universe_size) - 1)

    def _check(self, other: "PointSet") -> None:
        if not isinstance(other, PointSet):
            raise TypeError(f"expected PointSet, got {type(other).__name__}")
        if other.universe_size != self.universe_size:
            raise UniverseMismatch(
                f"universe sizes differ: {self.universe_size} vs {other.universe_size}"
            )

    def __or__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.universe_size, self.mask | other.mask)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.universe_size, self.mask & other.mask)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.universe_size, self.mask & ~other.mask)

    def __invert__(self) -> "PointSet":
        return PointSet(self.universe_size, ((1 << self.universe_size) - 1) & ~self.mask)

    complement = __invert__

    def __le__(self, other: "PointSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other: "PointSet") -> bool:
        return other <= self

    def isdisjoint(self, other: "PointSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.universe_size and bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def points(self) -> list[int]:
        return list(bits(self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


def _closure_under_preorder(rows: list[int]) -> list[int]:
    """Reflexive-transitive closure of a relation given as successor masks."""
    n = len(rows)
    rows = [r | (1 << i) for i, r in enumerate(rows)]
    for k in range(n):
        kbit = 1 << k
        for i in range(n):
            if rows[i] & kbit:
                rows[i] |= rows[k]
    return rows


class Topology:
    """A finite topological space given by its minimal-neighbourhood table.

    Construction validates the preorder laws and raises
    :class:`MalformedTopology` naming the broken axiom.  Instances are
    immutable; the open-set family is derived on first use.
    """

    def __init__(self, n: int, min_nbr: Sequence[int | PointSet | Iterable[int]]):
        if n < 0:
            raise MalformedTopology("carrier size", f"n={n} is negative")
        if n > MAX_POINTS:
            raise CapExceeded(f"n={n} exceeds the operator cap of {MAX_POINTS} points")
        if len(min_nbr) != n:
            raise MalformedTopology(
                "neighbourhood table", f"expected {n} rows, got {len(min_nbr)}"
            )
        rows = []
        for x, row in enumerate(min_nbr):
            if isinstance(row, PointSet):
                if row.universe_size != n:
                    raise UniverseMismatch(f"row {x} lives on {row.universe_size} points")
                mask = row.mask
            elif isinstance(row, int):
                mask = row
            else:
                mask = PointSet.of(n, row).mask
            if mask < 0 or mask >> n:
                raise MalformedTopology("neighbourhood table", f"row {x} leaves the carrier")
            rows.append(mask)
        for x, mask in enumerate(rows):
            if not mask >> x & 1:
                raise MalformedTopology("reflexivity", f"{x} not in min_nbr[{x}]")
        for x, mask in enumerate(rows):
            for y in bits(mask):
                if rows[y] & ~mask:
                    raise MalformedTopology(
                        "transitivity",
                        f"{y} in min_nbr[{x}] but min_nbr[{y}] not inside min_nbr[{x}]",
                    )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_nbr", tuple(rows))
        object.__setattr__(self, "_full", (1 << n) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("Topology is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_opens(cls, n: int, opens: Iterable[int | PointSet | Iterable[int]]) -> "Topology":
        """Build a topology from an explicit open-set family, checking every axiom."""
        if n > MAX_POINTS:
            raise CapExceeded(f"n={n} exceeds the operator cap of {MAX_POINTS} points")
        family = set()
        for u in opens:
            if isinstance(u, PointSet):
                if u.universe_size != n:
                    raise UniverseMismatch(f"open set {u!r} lives on {u.universe_size} points")
                family.add(u.mask)
            elif isinstance(u, int):
                if u < 0 or u >> n:
                    raise MalformedTopology("open set", f"mask {u:#x} leaves the carrier")
                family.add(u)
            else:
                family.add(PointSet.of(n, u).mask)
        full = (1 << n) - 1
        if 0 not in family:
            raise MalformedTopology("empty set is open")
        if full not in family:
            raise MalformedTopology("whole carrier is open")
        ordered = sorted(family)
        for i, u in enumerate(ordered):
            for v in ordered[i + 1:]:
                if u | v not in family:
                    raise MalformedTopology(
                        "closed under union",
                        f"{PointSet(n, u)!r} | {PointSet(n, v)!r} missing",
                    )
                if u & v not in family:
                    raise MalformedTopology(
                        "closed under intersection",
                        f"{PointSet(n, u)!r} & {PointSet(n, v)!r} missing",
                    )
        rows = []
        for x in range(n):
            nbr = full
            for u in family:
                if u >> x & 1:
                    nbr &= u
            rows.append(nbr)
        return cls(n, rows)

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Topology":
        """Topology whose minimal neighbourhoods are the preorder generated by ``pairs``.

        A pair ``(x, y)`` puts ``y`` into every neighbourhood of ``x``.
        """
        rows = [0] * n
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(n, _closure_under_preorder(rows))

    # -- basic accessors ----------------------------------------------------

    @property
    def min_nbr(self) -> tuple[PointSet, ...]:
        return tuple(PointSet(self.n, m) for m in self._nbr)

    @property
    def nbr_masks(self) -> tuple[int, ...]:
        return self._nbr

    @property
    def full_mask(self) -> int:
        return self._full

    def point_set(self, points: Iterable[int]) -> PointSet:
        return PointSet.of(self.n, points)

    def empty(self) -> PointSet:
        return PointSet(self.n, 0)

    def full(self) -> PointSet:
        return PointSet(self.n, self._full)

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        """All open sets as ascending bitmasks."""
        if self.n > MAX_POWERSET_POINTS:
            raise CapExceeded(
                f"listing opens needs n <= {MAX_POWERSET_POINTS}, got {self.n}"
            )
        return tuple(m for m in range(self._full + 1) if self.kernel_mask(m) == m)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(sorted(self._full & ~m for m in self.open_masks))

    @cached_property
    def clopen_masks(self) -> tuple[int, ...]:
        opens = set(self.open_masks)
        return tuple(m for m in self.closed_masks if m in opens)

    @property
    def opens(self) -> list[PointSet]:
        return [PointSet(self.n, m) for m in self.open_masks]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Topology) and self._nbr == other._nbr

    def __hash__(self) -> int:
        return hash(self._nbr)

    def __repr__(self) -> str:
        rows = ", ".join(repr(PointSet(self.n, m)) for m in self._nbr)
        return f"Topology(n={self.n}, min_nbr=[{rows}])"

    # -- mask-level operators ----------------------------------------------

    def kernel_mask(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= self._nbr[x]
        return out

    def vee_mask(self, mask: int) -> int:
        return self._full & ~self.kernel_mask(self._full & ~mask)

    def interior_mask(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            if self._nbr[x] & ~mask == 0:
                out |= 1 << x
        return out

    def closure_mask(self, mask: int) -> int:
        out = 0
        for y in range(self.n):
            if self._nbr[y] & mask:
                out |= 1 << y
        return out

    def is_open_mask(self, mask: int) -> bool:
        return self.kernel_mask(mask) == mask

    def is_closed_mask(self, mask: int) -> bool:
        return self.is_open_mask(self._full & ~mask)

    def _mask(self, a: PointSet) -> int:
        if not isinstance(a, PointSet):
            raise TypeError(f"expected PointSet, got {type(a).__name__}")
        if a.universe_size != self.n:
            raise UniverseMismatch(
                f"set lives on {a.universe_size} points, topology on {self.n}"
            )
        return a.mask


# -- PointSet-level operations ---------------------------------------------


def is_open(t: Topology, a: PointSet) -> bool:
    return t.is_open_mask(t._mask(a))


def is_closed(t: Topology, a: PointSet) -> bool:
    return t.is_closed_mask(t._mask(a))


def interior(t: Topology, a: PointSet) -> PointSet:
    """Largest open subset of ``a``."""
    return PointSet(t.n, t.interior_mask(t._mask(a)))


def closure(t: Topology, a: PointSet) -> PointSet:
    """Smallest closed superset of ``a``."""
    return PointSet(t.n, t.closure_mask(t._mask(a)))


def kernel(t: Topology, a: PointSet) -> PointSet:
    """Intersection of all open supersets of ``a`` (its Λ-kernel)."""
    return PointSet(t.n, t.kernel_mask(t._mask(a)))


def vee(t: Topology, a: PointSet) -> PointSet:
    """Union of all closed subsets of ``a`` (its V-hull)."""
    return PointSet(t.n, t.vee_mask(t._mask(a)))


# A countable union of closed sets over a finite carrier is a finite union,
# hence closed; dually for G-delta.  Both classes therefore collapse.


def is_f_sigma(t: Topology, a: PointSet) -> bool:
    return is_closed(t, a)


def is_g_delta(t: Topology, a: PointSet) -> bool:
    return is_open(t, a)


def lambda_sets_open(t: Topology) -> bool:
    """Certify that every intersection of open sets is open.

    Re-validates pairwise intersection closure of the open family (finite
    intersections then follow by induction).  A malformed family raises
    rather than being repaired.
    """
    opens = t.open_masks
    family = set(opens)
    for i, u in enumerate(opens):
        for v in opens[i:]:
            if u & v not in family:
                raise MalformedTopology(
                    "closed under intersection",
                    f"{PointSet(t.n, u)!r} & {PointSet(t.n, v)!r} missing",
                )
    return True


def is_extremally_disconnected(t: Topology) -> bool:
    """True iff the closure of every open set is open."""
    return all(t.is_open_mask(t.closure_mask(u)) for u in t.open_masks)


def is_normal(t: Topology) -> bool:
    """True iff disjoint closed sets have disjoint open neighbourhoods.

    The kernel of a set is its smallest open superset, so it is enough to
    test the kernels of each disjoint closed pair.
    """
    closeds = t.closed_masks
    kern = {c: t.kernel_mask(c) for c in closeds}
    for i, a in enumerate(closeds):
        for b in closeds[i:]:
            if a & b == 0 and kern[a] & kern[b]:
                return False
    return True


def cor3_separation(t: Topology) -> bool:
    """Disjoint G-delta sets have disjoint F-sigma supersets.

    On a finite carrier this reads: disjoint open sets have disjoint
    closures.
    """
    opens = t.open_masks
    clo = {u: t.closure_mask(u) for u in opens}
    for i, u in enumerate(opens):
        for v in opens[i:]:
            if u & v == 0 and clo[u] & clo[v]:
                return False
    return True


def cor4_separation(t: Topology) -> bool:
    """Disjoint F-sigma sets have disjoint G-delta supersets; equals normality here."""
    return is_normal(t)
