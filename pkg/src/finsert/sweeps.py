"""Exhaustive sweeps over all small topologies and step functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import CapExceeded
from .insertion import InsertionError, Preset, insert
from .oracle import OracleQuery, TargetClass, all_functions, find_insertion, necessity_sweep
from .realfn import ClassFlags, FiniteFunction, classify, compare_le, to_rational
from .spacegen import MAX_ENUMERATE_POINTS, enumerate_topologies
from .topology import Topology, is_extremally_disconnected, is_normal

CHECKS = ("cor1", "cor2", "remark1", "remark2", "collapse", "ed-necessity")

DEFAULT_GRIDS = {
    "ed-necessity": (Fraction(0), Fraction(1)),
}
STANDARD_GRID = (Fraction(0), Fraction(1, 2), Fraction(1))


@dataclass
class SweepRow:
    index: int
    space: Topology
    ed: bool
    normal: bool
    pairs: int = 0
    successes: int = 0
    failures: int = 0
    discrepancies: int = 0
    note: str = ""


@dataclass
class SweepResult:
    check: str
    n: int
    grid: tuple[Fraction, ...]
    rows: list[SweepRow] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    review: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def totals(self) -> dict[str, int]:
        return {
            "spaces": len(self.rows),
            "pairs": sum(r.pairs for r in self.rows),
            "successes": sum(r.successes for r in self.rows),
            "failures": sum(r.failures for r in self.rows),
            "discrepancies": sum(r.discrepancies for r in self.rows),
        }


def _pairs(t: Topology, grid, lower_ok: Callable[[ClassFlags], bool], upper_ok):
    fns = list(all_functions(t.n, grid))
    flags = [classify(t, f) for f in fns]
    lowers = [f for f, fl in zip(fns, flags) if lower_ok(fl)]
    uppers = [f for f, fl in zip(fns, flags) if upper_ok(fl)]
    for lo in lowers:
        for up in uppers:
            if compare_le(lo, up):
                yield lo, up


def _fmt(f: FiniteFunction) -> str:
    return str(f)


def _insertion_sweep(result: SweepResult, preset: Preset, space_ok, lower_ok, upper_ok):
    for idx, t in enumerate(enumerate_topologies(result.n)):
        ed, normal = is_extremally_disconnected(t), is_normal(t)
        if not space_ok(t):
            continue
        row = SweepRow(idx, t, ed, normal)
        for lo, up in _pairs(t, result.grid, lower_ok, upper_ok):
            row.pairs += 1
            try:
                rep = insert(t, lo, up, preset=preset)
            except InsertionError as exc:
                row.failures += 1
                result.failures.append(f"space {idx}: lower={_fmt(lo)} upper={_fmt(up)}: {exc}")
                if find_insertion(OracleQuery(t, lo, up)) is not None:
                    row.discrepancies += 1
                    result.failures.append(
                        f"space {idx}: engine failed but oracle found an inserter "
                        f"for lower={_fmt(lo)} upper={_fmt(up)}"
                    )
                continue
            if not rep.passed:
                row.failures += 1
                result.failures.append(
                    f"space {idx}: lower={_fmt(lo)} upper={_fmt(up)}: h={_fmt(rep.h)} failed checks"
                )
                continue
            row.successes += 1
            if find_insertion(OracleQuery(t, lo, up)) is None:
                row.discrepancies += 1
                result.failures.append(
                    f"space {idx}: engine succeeded but oracle found nothing "
                    f"for lower={_fmt(lo)} upper={_fmt(up)}"
                )
        result.rows.append(row)


def _remark_sweep(result: SweepResult, space_ok, lower_ok, upper_ok):
    for idx, t in enumerate(enumerate_topologies(result.n)):
        if not space_ok(t):
            continue
        row = SweepRow(idx, t, is_extremally_disconnected(t), is_normal(t))
        for lo, up in _pairs(t, result.grid, lower_ok, upper_ok):
            row.pairs += 1
            q = OracleQuery(t, lo, up, result.grid, TargetClass.CONTINUOUS)
            if find_insertion(q) is None:
                row.failures += 1
                result.failures.append(
                    f"space {idx}: no continuous inserter for lower={_fmt(lo)} upper={_fmt(up)}"
                )
            else:
                row.successes += 1
        result.rows.append(row)


def _collapse_sweep(result: SweepResult):
    for idx, t in enumerate(enumerate_topologies(result.n)):
        row = SweepRow(idx, t, is_extremally_disconnected(t), is_normal(t))
        for f in all_functions(t.n, result.grid):
            row.pairs += 1
            fl = classify(t, f)
            bad = [
                name
                for name, a, b in (
                    ("usB1/uscc", fl.usB1, fl.uscc),
                    ("lsB1/lscc", fl.lsB1, fl.lscc),
                    ("contra/continuous", fl.contra_continuous, fl.continuous),
                )
                if a != b
            ]
            if bad:
                row.failures += 1
                result.failures.append(f"space {idx}: f={_fmt(f)} disagrees on {', '.join(bad)}")
            else:
                row.successes += 1
        result.rows.append(row)


def _necessity(result: SweepResult):
    spaces = list(enumerate_topologies(result.n))
    for idx, rec in enumerate(necessity_sweep(result.n, result.grid, spaces)):
        t = rec.space
        row = SweepRow(idx, t, rec.ed, is_normal(t), pairs=rec.pairs_checked)
        row.successes = rec.pairs_checked - (rec.witness is not None)
        if rec.witness is not None:
            g, f = rec.witness
            row.note = f"witness g={_fmt(g)} f={_fmt(f)}"
            if rec.ed:
                row.failures += 1
                result.failures.append(f"space {idx}: ED but {row.note} has no inserter")
        elif not rec.ed:
            row.note = "non-ED, no witness under this grid"
            result.review.append(f"space {idx}: {t!r}")
        else:
            row.note = "all pairs insertable"
        result.rows.append(row)


def run_sweep(check: str, n: int, grid: Optional[Sequence] = None) -> SweepResult:
    if check not in CHECKS:
        raise ValueError(f"unknown check {check!r}; choose from {', '.join(CHECKS)}")
    if n > MAX_ENUMERATE_POINTS:
        raise CapExceeded(f"sweeps are capped at n={MAX_ENUMERATE_POINTS}")
    if grid:
        grid = tuple(sorted(set(to_rational(v) for v in grid)))
    else:
        grid = DEFAULT_GRIDS.get(check, STANDARD_GRID)
    result = SweepResult(check, n, grid)
    if check == "cor1":
        _insertion_sweep(
            result, Preset.COR1, is_extremally_disconnected,
            lambda fl: fl.uscc, lambda fl: fl.lscc,
        )
    elif check == "cor2":
        _insertion_sweep(
            result, Preset.COR2, is_normal,
            lambda fl: fl.lscc, lambda fl: fl.uscc,
        )
    elif check == "remark1":
        _remark_sweep(result, is_normal, lambda fl: fl.usc, lambda fl: fl.lsc)
    elif check == "remark2":
        _remark_sweep(result, is_extremally_disconnected, lambda fl: fl.lsc, lambda fl: fl.usc)
    elif check == "collapse":
        _collapse_sweep(result)
    else:
        _necessity(result)
    return result
