import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce as bf
from conftest import ps
from finsert import (
    MalformedTopology,
    PointSet,
    Topology,
    UniverseMismatch,
    closure,
    cor3_separation,
    cor4_separation,
    interior,
    is_extremally_disconnected,
    is_f_sigma,
    is_g_delta,
    is_normal,
    is_open,
    kernel,
    lambda_sets_open,
    named_space,
    random_topology,
    vee,
)
from finsert.errors import CapExceeded


# -- PointSet --------------------------------------------------------------


def test_pointset_algebra():
    a, b = ps(4, 0, 1), ps(4, 1, 3)
    assert (a | b).points() == [0, 1, 3]
    assert (a & b).points() == [1]
    assert (a - b).points() == [0]
    assert (~a).points() == [2, 3]
    assert ps(4, 1) <= a and not a <= b
    assert len(a) == 2 and 3 in b and 2 not in b


def test_pointset_rejects_foreign_members():
    with pytest.raises(ValueError):
        PointSet(2, 0b100)
    with pytest.raises(ValueError):
        PointSet.of(2, [2])


def test_pointset_universe_mismatch():
    with pytest.raises(UniverseMismatch):
        ps(2, 0) | ps(3, 0)


# -- construction ----------------------------------------------------------


def test_from_opens_matches_min_nbr(sierpinski):
    assert Topology.from_opens(2, [[], [0], [0, 1]]) == sierpinski
    assert [s.points() for s in sierpinski.opens] == [[], [0], [0, 1]]


@pytest.mark.parametrize(
    "n, opens, axiom",
    [
        (2, [[0], [0, 1]], "empty set is open"),
        (2, [[], [0]], "whole carrier is open"),
        (3, [[], [0], [1], [0, 1, 2]], "closed under union"),
        (3, [[], [0, 1], [1, 2], [0, 1, 2]], "closed under intersection"),
    ],
)
def test_from_opens_names_the_axiom(n, opens, axiom):
    with pytest.raises(MalformedTopology) as err:
        Topology.from_opens(n, opens)
    assert err.value.axiom == axiom


def test_min_nbr_preorder_laws():
    with pytest.raises(MalformedTopology, match="reflexivity"):
        Topology(2, [[1], [1]])
    with pytest.raises(MalformedTopology, match="transitivity"):
        Topology(3, [[0, 1], [1, 2], [2]])


def test_operator_cap():
    with pytest.raises(CapExceeded):
        Topology(17, [[i] for i in range(17)])


def test_topology_is_immutable(sierpinski):
    with pytest.raises(AttributeError):
        sierpinski.n = 3


# -- worked examples -----------------------------------------------------------


def test_is_open_examples(sierpinski):
    assert is_open(named_space("discrete", 2), ps(2, 1))
    assert not is_open(sierpinski, ps(2, 1))
    for t in (sierpinski, named_space("indiscrete", 3)):
        assert is_open(t, PointSet.empty(t.n))


def test_universe_mismatch_is_an_error(sierpinski):
    with pytest.raises(UniverseMismatch):
        is_open(sierpinski, ps(3, 0))
    with pytest.raises(UniverseMismatch):
        kernel(sierpinski, ps(3, 0))


def test_closure_examples(sierpinski):
    d = named_space("discrete", 3)
    for m in range(8):
        assert closure(d, PointSet(3, m)) == PointSet(3, m)
    assert closure(sierpinski, ps(2, 0)) == ps(2, 0, 1)
    assert closure(named_space("indiscrete", 2), ps(2, 0)) == ps(2, 0, 1)


def test_kernel_examples(sierpinski):
    assert kernel(named_space("discrete", 2), ps(2, 1)) == ps(2, 1)
    assert kernel(sierpinski, ps(2, 1)) == ps(2, 0, 1)
    assert kernel(sierpinski, ps(2, 0)) == ps(2, 0)


def test_vee_examples(sierpinski):
    assert vee(sierpinski, ps(2, 1)) == ps(2, 1)
    assert vee(sierpinski, ps(2, 0)) == ps(2)
    ind = named_space("indiscrete", 2)
    assert vee(ind, ind.full()) == ind.full()


def test_f_sigma_g_delta_examples(sierpinski):
    assert is_f_sigma(sierpinski, ps(2, 1))
    assert not is_f_sigma(sierpinski, ps(2, 0))
    for t in (sierpinski, named_space("chain", 3)):
        assert is_f_sigma(t, t.full()) and is_g_delta(t, t.full())


def test_f_sigma_g_delta_duality():
    for t in map(lambda s: random_topology(5, s), range(20)):
        for m in range(32):
            a = PointSet(5, m)
            assert is_f_sigma(t, a) == is_g_delta(t, ~a)


def test_lambda_sets_open_examples(sierpinski):
    assert lambda_sets_open(sierpinski)
    assert lambda_sets_open(named_space("discrete", 3))
    assert all(lambda_sets_open(Topology.from_opens(3, fam)) for fam in bf.all_topologies(3))


def test_extremally_disconnected_examples(sierpinski, non_ed):
    assert is_extremally_disconnected(named_space("discrete", 3))
    assert is_extremally_disconnected(sierpinski)
    assert not is_extremally_disconnected(non_ed)
    assert closure(non_ed, ps(3, 0)) == ps(3, 0, 2)


def test_normal_examples(non_ed, non_normal):
    assert is_normal(named_space("indiscrete", 3))
    assert not is_normal(non_normal)
    assert is_normal(non_ed)


def test_cor3_separation_examples(sierpinski, non_ed):
    assert cor3_separation(named_space("discrete", 3))
    assert cor3_separation(sierpinski)
    assert not cor3_separation(non_ed)


def test_cor4_separation_is_normality(non_ed, non_normal, sierpinski):
    for t in (named_space("indiscrete", 3), non_ed, non_normal, sierpinski):
        assert cor4_separation(t) == is_normal(t)


# -- agreement with the explicit-family reference --------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_operators_match_bruteforce(n):
    for fam in bf.all_topologies(n):
        t = Topology.from_opens(n, fam)
        assert set(t.open_masks) == set(fam)
        for a in range(1 << n):
            assert t.kernel_mask(a) == bf.kernel(n, fam, a)
            assert t.vee_mask(a) == bf.vee(n, fam, a)
            assert t.closure_mask(a) == bf.closure(n, fam, a)
            assert t.interior_mask(a) == bf.interior(n, fam, a)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_space_properties_match_bruteforce(n):
    for fam in bf.all_topologies(n):
        t = Topology.from_opens(n, fam)
        assert is_extremally_disconnected(t) == bf.is_ed(n, fam)
        assert is_normal(t) == bf.is_normal(n, fam)
        assert cor3_separation(t) == bf.disjoint_opens_have_disjoint_closed_supersets(n, fam)


# -- laws ----------------------------------------------------------------------

spaces = st.builds(random_topology, st.integers(1, 8), st.integers(0, 10**6))


@st.composite
def space_and_sets(draw):
    t = draw(spaces)
    a = draw(st.integers(0, t.full_mask))
    b = draw(st.integers(0, t.full_mask))
    return t, PointSet(t.n, a), PointSet(t.n, b)


@settings(max_examples=300, deadline=None)
@given(space_and_sets())
def test_kernel_laws(case):
    t, a, b = case
    k = kernel(t, a)
    assert a <= k
    assert is_open(t, k)
    assert kernel(t, k) == k
    if a <= b:
        assert k <= kernel(t, b)


@settings(max_examples=300, deadline=None)
@given(space_and_sets())
def test_vee_is_dual_kernel(case):
    t, a, _ = case
    v = vee(t, a)
    assert v == ~kernel(t, ~a)
    assert v <= a and is_f_sigma(t, v) and vee(t, v) == v


@settings(max_examples=300, deadline=None)
@given(space_and_sets())
def test_closure_interior_duality(case):
    t, a, _ = case
    assert closure(t, a) == ~interior(t, ~a)
    assert interior(t, a) <= a <= closure(t, a)


@settings(max_examples=200, deadline=None)
@given(space_and_sets())
def test_open_sets_closed_under_union_and_intersection(case):
    t, a, b = case
    u, v = kernel(t, a), kernel(t, b)
    assert is_open(t, u | v) and is_open(t, u & v)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_ed_is_closure_of_opens_open(n, seed):
    t = random_topology(n, seed)
    expected = all(is_open(t, closure(t, u)) for u in t.opens)
    assert is_extremally_disconnected(t) == expected
    assert lambda_sets_open(t)
