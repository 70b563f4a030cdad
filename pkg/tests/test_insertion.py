from fractions import Fraction

import pytest

from conftest import fn, ps
from finsert import (
    BinaryRelation,
    Mode,
    NoWitness,
    PremiseError,
    Topology,
    build_levels,
    classify,
    compare_le,
    enumerate_topologies,
    extract,
    insert,
    interpolate,
    is_extremally_disconnected,
    make_cutsets,
    named_space,
    verify,
)
from finsert.errors import PreconditionError
from finsert.insertion import InterpolationChain, MalformedChain, literal_grid
from finsert.oracle import all_functions
from finsert.relations import holds_mask

HALF = Fraction(1, 2)


def _chain(t, lo, up, rel, mode="exact", policy="strict"):
    levels = build_levels(lo, up)
    fu = make_cutsets(t, up, policy, levels)
    gl = make_cutsets(t, lo, policy, levels)
    return interpolate(fu, gl, rel, t, mode)


def test_one_point_forced_chain():
    t = named_space("discrete", 1)
    ch = _chain(t, fn(0), fn(0), BinaryRelation.kernel_sub_vee(1))
    assert ch.H == (ps(1), ps(1, 0))
    assert extract(ch) == fn(0)


def test_sierpinski_mask_order_trace(sierpinski):
    ch = _chain(sierpinski, fn(0, 0), fn(0, 1), BinaryRelation.kernel_sub_vee(2))
    assert ch.H == (ps(2), ps(2, 0, 1), ps(2, 0, 1))
    assert extract(ch) == fn(0, 0)


def test_discrete_chain_reproduces_upper():
    t = named_space("discrete", 2)
    ch = _chain(t, fn(0, 0), fn(0, 1), BinaryRelation.kernel_sub_vee(2))
    assert ch.H == (ps(2), ps(2, 0), ps(2, 0, 1))
    h = extract(ch)
    assert h == fn(0, 1)
    rep = verify(t, fn(0, 0), fn(0, 1), ch, h)
    assert rep.bounds_ok and rep.contra_ok and rep.identity_ok


def test_non_ed_no_witness(non_ed):
    with pytest.raises(NoWitness) as err:
        _chain(non_ed, fn(0, 1, 0), fn(0, 1, 1), BinaryRelation.kernel_sub_vee(3))
    exc = err.value
    assert exc.index == 1
    assert ps(3, 0) in exc.lower
    assert ps(3, 0, 2) in exc.upper
    assert exc.self_constraint
    assert exc.recheck(non_ed)
    assert non_ed.clopen_masks == (0, 7)


def test_extract_rejects_malformed_chain():
    bad = InterpolationChain(Mode.EXACT, (Fraction(0),), (), (ps(1), ps(1)), ())
    with pytest.raises(MalformedChain):
        extract(bad)
    ch = InterpolationChain(Mode.EXACT, (Fraction(0), Fraction(1)), (), (ps(1), ps(1, 0), ps(1, 0)), ())
    assert extract(ch) == fn(0)


def test_insert_cor1_sierpinski(sierpinski):
    rep = insert(sierpinski, fn(0, 0), fn(0, 1), preset="cor1")
    assert rep.h == fn(0, 0)
    assert rep.passed and rep.exact_bounds


def test_insert_cor1_non_ed(non_ed):
    with pytest.raises(NoWitness):
        insert(non_ed, fn(0, 1, 0), fn(0, 1, 1), preset="cor1")


def test_insert_cor2_chain(chain3):
    # f = 0 is lscc and g = (1, 1, 0) is uscc on the chain space
    lo, up = fn(0, 0, 0), fn(1, 1, 0)
    assert classify(chain3, lo).lscc and classify(chain3, up).uscc
    rep = insert(chain3, lo, up, preset="cor2")
    assert rep.relation == "closed-interpolant"
    assert rep.passed
    assert compare_le(lo, rep.h) and compare_le(rep.h, up)
    assert classify(chain3, rep.h).contra_continuous


def test_cor2_gate_rejects_non_uscc_upper(chain3):
    # (0, 1, 1) has {g < 1} = {0}, open but not closed
    with pytest.raises(PreconditionError, match="uscc"):
        insert(chain3, fn(0, 0, 0), fn(0, 1, 1), preset="cor2")


def test_insert_raw_equal_bounds():
    t = named_space("discrete", 3)
    f = fn(0, HALF, 1)
    rep = insert(t, f, f)
    assert rep.h == f and rep.passed


def test_insert_requires_order(sierpinski):
    with pytest.raises(PreconditionError):
        insert(sierpinski, fn(1, 1), fn(0, 0))


def test_premise_error_is_raised(sierpinski):
    with pytest.raises(PremiseError):
        insert(sierpinski, fn(0, 1), fn(0, 1))


@pytest.mark.parametrize("preset, space_ok", [("cor1", is_extremally_disconnected)])
def test_exact_soundness_n3(preset, space_ok):
    grid = [0, HALF, 1]
    for t in enumerate_topologies(3):
        fns = list(all_functions(3, grid))
        flags = {f: classify(t, f) for f in fns}
        for lo in fns:
            if not flags[lo].uscc:
                continue
            for up in fns:
                if not flags[up].lscc or not compare_le(lo, up):
                    continue
                try:
                    rep = insert(t, lo, up, preset=preset)
                except NoWitness as exc:
                    assert not space_ok(t)
                    assert exc.recheck(t)
                    continue
                assert compare_le(lo, rep.h) and compare_le(rep.h, up)
                assert all(t.is_closed_mask(rep.h.fiber(v).mask) for v in rep.h.range())
                H = rep.chain.H
                assert all(a <= b for a, b in zip(H, H[1:]))


def test_chain_relations_hold():
    t = named_space("particular_point", 3)
    rel = BinaryRelation.kernel_sub_vee(3)
    lo, up = fn(0, 0, 0), fn(1, 1, 1)
    levels = build_levels(lo, up)
    fu = make_cutsets(t, up, "strict", levels)
    gl = make_cutsets(t, lo, "strict", levels)
    ch = interpolate(fu, gl, rel, t)
    K = len(ch.H)
    for i in range(K):
        for j in range(i, K):
            assert holds_mask(rel, t, fu.gap_values[i].mask, ch.H[j].mask)
            assert holds_mask(rel, t, ch.H[i].mask, gl.gap_values[j].mask)
            assert holds_mask(rel, t, ch.H[i].mask, ch.H[j].mask)


def test_determinism(sierpinski):
    a = insert(sierpinski, fn(0, 0), fn(0, 1), preset="cor1")
    b = insert(sierpinski, fn(0, 0), fn(0, 1), preset="cor1")
    assert a.chain == b.chain and a.h == b.h


def test_ed_shortcut_witness_is_valid():
    grid = [0, HALF, 1]
    rel_of = {}
    for t in enumerate_topologies(3):
        if not is_extremally_disconnected(t):
            continue
        rel = rel_of.setdefault(t.n, BinaryRelation.kernel_sub_vee(t.n))
        fns = list(all_functions(3, grid))
        for lo in fns:
            if not classify(t, lo).uscc:
                continue
            for up in fns:
                if not classify(t, up).lscc or not compare_le(lo, up):
                    continue
                levels = build_levels(lo, up)
                F = make_cutsets(t, up, "strict", levels).gap_values
                G = make_cutsets(t, lo, "strict", levels).gap_values
                H = [0]
                for i in range(1, len(F)):
                    H.append(H[-1] | t.closure_mask(F[i].mask))
                for i in range(len(F)):
                    for j in range(i, len(F)):
                        assert holds_mask(rel, t, F[i].mask, H[j])
                        assert holds_mask(rel, t, H[i], G[j].mask)
                        assert holds_mask(rel, t, H[i], H[j])


def test_literal_grid_layout():
    assert literal_grid([Fraction(0), Fraction(1)]) == [-1, -HALF, 0, HALF, 1, Fraction(3, 2), 2]


@pytest.mark.parametrize("policy", ["strict", "weak"])
def test_literal_slack_bound(policy):
    grid = [0, HALF, 1]
    coarse_ok = 0
    for t in enumerate_topologies(3):
        if not is_extremally_disconnected(t):
            continue
        fns = list(all_functions(3, grid))
        for lo in fns:
            if not classify(t, lo).uscc:
                continue
            for up in fns:
                if not classify(t, up).lscc or not compare_le(lo, up):
                    continue
                rep = insert(t, lo, up, preset="cor1", mode="literal", policy=policy)
                levels = rep.chain.levels
                coarse = [levels[0] - 1, *levels, levels[-1] + 1]
                for x in range(3):
                    above = [c for c in coarse if c > up[x]][0]
                    below = [c for c in coarse if c < lo[x]][-1]
                    assert below <= rep.h[x] <= above
                assert rep.bounds_ok
                coarse_ok += 1
    assert coarse_ok > 0


def test_literal_strict_never_undercuts(sierpinski):
    rep = insert(sierpinski, fn(0, 0), fn(0, 1), preset="cor1", mode="literal", policy="strict")
    assert compare_le(fn(0, 0), rep.h)
    assert rep.identity_checked == len(rep.chain.points) * (len(rep.chain.points) - 1) // 2


def test_exact_identity_holds(sierpinski):
    rep = insert(sierpinski, fn(0, 0), fn(0, 1), preset="cor1")
    assert rep.identity_ok and rep.identity_mismatches == 0


def test_explicit_topology_equality_guard():
    t = Topology(2, [[0], [1]])
    assert t == named_space("discrete", 2)
