import pytest

import bruteforce as bf
from conftest import ps
from finsert import Topology, enumerate_topologies, is_extremally_disconnected, is_normal, named_space, random_topology
from finsert.errors import CapExceeded


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 4), (3, 29), (4, 355)])
def test_counts(n, count):
    assert sum(1 for _ in enumerate_topologies(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_catalog_matches_axiom_filter(n):
    ours = {t for t in enumerate_topologies(n)}
    ref = {Topology.from_opens(n, fam) for fam in bf.all_topologies(n)}
    assert ours == ref and len(ours) == len(ref)


def test_census_n3():
    spaces = list(enumerate_topologies(3))
    ed = [is_extremally_disconnected(t) for t in spaces]
    normal = [is_normal(t) for t in spaces]
    assert sum(ed) == 26 and sum(normal) == 26
    assert sum(a and b for a, b in zip(ed, normal)) == 23


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_topologies(5))


def test_named_spaces():
    pp = named_space("particular_point", 3)
    assert sorted(pp.open_masks) == [0, 0b001, 0b011, 0b101, 0b111]
    ch = named_space("chain", 3)
    assert sorted(ch.open_masks) == [0, 0b001, 0b011, 0b111]
    ep = named_space("excluded_point", 3)
    assert sorted(ep.open_masks) == [0, 0b010, 0b100, 0b110, 0b111]
    assert named_space("sierpinski", 2).opens == [ps(2), ps(2, 0), ps(2, 0, 1)]
    assert len(named_space("discrete", 3).open_masks) == 8
    assert named_space("indiscrete", 3).open_masks == (0, 7)


@pytest.mark.parametrize("name, n", [("bogus", 2), ("sierpinski", 3), ("discrete", -1)])
def test_named_space_errors(name, n):
    with pytest.raises(ValueError):
        named_space(name, n)


def test_random_is_deterministic():
    for seed in range(50):
        assert random_topology(6, seed) == random_topology(6, seed)
    assert random_topology(1, 123) == named_space("discrete", 1)


def test_random_spaces_are_valid():
    for seed in range(10_000):
        t = random_topology(1 + seed % 8, seed)
        # re-validating through the open-family constructor checks every axiom
        assert Topology.from_opens(t.n, t.open_masks) == t
