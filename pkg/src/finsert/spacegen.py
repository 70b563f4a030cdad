"""Enumerating, naming and sampling finite topologies."""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator

from .errors import CapExceeded
from .topology import MAX_POINTS, Topology, _closure_under_preorder

MAX_ENUMERATE_POINTS = 4

NAMED_SPACES = ("discrete", "indiscrete", "sierpinski", "particular_point", "excluded_point", "chain")


def enumerate_topologies(n: int) -> Iterator[Topology]:
    """Every labelled topology on ``n`` points, once each.

    A topology is a preorder on the points; candidate neighbourhood tables
    (each row containing its own point) are filtered for transitivity.
    Order is deterministic: rows compared as mask tuples, point 0 slowest.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_ENUMERATE_POINTS:
        raise CapExceeded(f"exhaustive enumeration is capped at n={MAX_ENUMERATE_POINTS}")
    choices = []
    for x in range(n):
        own = 1 << x
        others = [y for y in range(n) if y != x]
        row_opts = []
        for sub in range(1 << (n - 1)):
            m = own
            for k, y in enumerate(others):
                if sub >> k & 1:
                    m |= 1 << y
            row_opts.append(m)
        choices.append(sorted(row_opts))
    for rows in product(*choices):
        if all(rows[y] & ~rows[x] == 0 for x in range(n) for y in range(n) if rows[x] >> y & 1):
            yield Topology(n, list(rows))


def named_space(name: str, n: int) -> Topology:
    """Standard small spaces; the distinguished point is always 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    full = (1 << n) - 1
    if name == "discrete":
        rows = [1 << x for x in range(n)]
    elif name == "indiscrete":
        rows = [full] * n
    elif name == "sierpinski":
        if n != 2:
            raise ValueError("the Sierpinski space has exactly 2 points")
        rows = [0b01, 0b11]
    elif name == "particular_point":
        if n < 1:
            raise ValueError("particular point space needs n >= 1")
        rows = [1] + [1 | 1 << x for x in range(1, n)]
    elif name == "excluded_point":
        if n < 1:
            raise ValueError("excluded point space needs n >= 1")
        rows = [full] + [1 << x for x in range(1, n)]
    elif name == "chain":
        rows = [(1 << (x + 1)) - 1 for x in range(n)]
    else:
        raise ValueError(f"unknown space {name!r}; choose from {', '.join(NAMED_SPACES)}")
    return Topology(n, rows)


def random_topology(n: int, seed: int, density: float = 0.25) -> Topology:
    """A random preorder closure, reproducible from ``seed``."""
    if not 0 <= n <= MAX_POINTS:
        raise CapExceeded(f"random topologies need 0 <= n <= {MAX_POINTS}")
    rng = random.Random(seed)
    rows = [0] * n
    for x in range(n):
        for y in range(n):
            if x != y and rng.random() < density:
                rows[x] |= 1 << y
    return Topology(n, _closure_under_preorder(rows))
