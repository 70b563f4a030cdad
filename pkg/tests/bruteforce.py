"""Reference implementations that work from explicit open-set families.

These deliberately avoid the neighbourhood-table machinery under test.
"""

from itertools import combinations


def subsets(n):
    return range(1 << n)


def is_topology(n, family):
    full = (1 << n) - 1
    if 0 not in family or full not in family:
        return False
    return all(u | v in family and u & v in family for u in family for v in family)


def all_topologies(n):
    """Every family of subsets of an n-set satisfying the axioms, as frozensets."""
    universe = list(subsets(n))
    out = []
    for k in range(len(universe) + 1):
        for fam in combinations(universe, k):
            fam = frozenset(fam)
            if is_topology(n, fam):
                out.append(fam)
    return out


def closeds(n, opens):
    full = (1 << n) - 1
    return {full & ~u for u in opens}


def kernel(n, opens, a):
    out = (1 << n) - 1
    for u in opens:
        if a & ~u == 0:
            out &= u
    return out


def vee(n, opens, a):
    out = 0
    for c in closeds(n, opens):
        if c & ~a == 0:
            out |= c
    return out


def closure(n, opens, a):
    out = (1 << n) - 1
    for c in closeds(n, opens):
        if a & ~c == 0:
            out &= c
    return out


def interior(n, opens, a):
    out = 0
    for u in opens:
        if u & ~a == 0:
            out |= u
    return out


def is_ed(n, opens):
    return all(closure(n, opens, u) in opens for u in opens)


def is_normal(n, opens):
    cl = closeds(n, opens)
    for a in cl:
        for b in cl:
            if a & b:
                continue
            if not any(u & v == 0 for u in opens if a & ~u == 0 for v in opens if b & ~v == 0):
                return False
    return True


def disjoint_opens_have_disjoint_closed_supersets(n, opens):
    cl = closeds(n, opens)
    for a in opens:
        for b in opens:
            if a & b:
                continue
            if not any(c & d == 0 for c in cl if a & ~c == 0 for d in cl if b & ~d == 0):
                return False
    return True
