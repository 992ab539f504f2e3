"""Exhaustive certification of the bijection and its properties.

Every check walks all instances inside its bounds and records counterexamples
instead of raising.  Checks that share a grid share one enumeration pass.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .bijection import ConstructionError, invert_record, phi, phi_inv, phi_trace
from .core import (
    InvalidWordError,
    PathClass,
    classify,
    format_path,
    format_word,
    level_steps,
    odd_columns,
    path_part,
    validate_motzkin,
)
from .enumeration import (
    LevelPolicy,
    count_motzkin_dp,
    count_syt_dp,
    gen_motzkin,
    gen_syt,
)
from .formulas import syt_count_formula

# Exhaustive bounds per color count, sized to finish in about a minute.
DEFAULT_BOUNDS = {1: 14, 2: 10, 3: 8, 4: 7}
FORMULA_N_MAX = 40
MAX_REPORTED = 20

SUITES = ("bijection", "statistic", "monotonicity", "intermediate", "inversion", "counts")


@dataclass
class CheckResult:
    name: str
    grid: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, message: str) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(message)


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_table(self) -> str:
        rows = [("check", "grid", "instances", "failures", "seconds", "status")]
        for c in self.checks:
            rows.append((c.name, c.grid, str(c.instances), str(c.failure_count),
                         f"{c.seconds:.2f}", "PASS" if c.passed else "FAIL"))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows]
        for c in self.checks:
            for f in c.failures:
                lines.append(f"  {c.name}: {f}")
        return "\n".join(lines)

    def to_records(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(
                f"check={c.name} grid={c.grid} instances={c.instances} "
                f"failures={c.failure_count} seconds={c.seconds:.3f} "
                f"status={'pass' if c.passed else 'fail'}"
            )
            for f in c.failures:
                lines.append(f"check={c.name} counterexample={f}")
        return "\n".join(lines)


def make_grid(n_max: int | None = None, d_max: int | None = None,
              bounds: Mapping[int, int] | None = None) -> list[tuple[int, int]]:
    """(n, d) pairs, either from per-d bounds or from the box n<=n_max, d<=d_max."""
    if bounds is None:
        if n_max is None or d_max is None:
            bounds = DEFAULT_BOUNDS
        else:
            bounds = {d: n_max for d in range(d_max + 1)}
    return [(n, d) for d in sorted(bounds) for n in range(bounds[d] + 1)]


def _describe(grid: list[tuple[int, int]]) -> str:
    by_d: dict[int, int] = {}
    for n, d in grid:
        by_d[d] = max(by_d.get(d, 0), n)
    return ";".join(f"d{d}:n<={n}" for d, n in sorted(by_d.items())) or "empty"


def _timed(check: CheckResult):
    class _T:
        def __enter__(self):
            self.t = time.perf_counter()

        def __exit__(self, *exc):
            check.seconds += time.perf_counter() - self.t

    return _T()


def _expected_max(cls: PathClass, d: int) -> tuple[int, int]:
    if cls is PathClass.BAR:
        return 2 * d + 1, 2 * d + 1
    if cls is PathClass.HAT:
        return 2 * d, 2 * d
    return 0, 2 * d - 1


def _bijection_instance(n, d, paths, images, check: CheckResult) -> None:
    words = list(gen_syt(n, 2 * d + 1))
    check.instances += len(paths)
    image_set = set(images)
    if len(image_set) != len(paths):
        seen = {}
        for p, w in zip(paths, images):
            if w in seen:
                check.fail(f"n={n} d={d} not injective: {format_path(seen[w])} and "
                           f"{format_path(p)} -> {format_word(w)}")
                break
            seen[w] = p
    if image_set != set(words):
        missing = sorted(set(words) - image_set)[:3]
        extra = sorted(image_set - set(words))[:3]
        check.fail(f"n={n} d={d} image mismatch: missing {missing} extra {extra}")
    for p, w in zip(paths, images):
        try:
            back = phi_inv(w, d)
        except (ConstructionError, InvalidWordError) as e:
            check.fail(f"n={n} d={d} phi_inv({format_word(w)}) raised {e}")
            continue
        if back != p:
            check.fail(f"n={n} d={d} roundtrip path {format_path(p)} -> "
                       f"{format_word(w)} -> {format_path(back)}")
        if d >= 1:
            lo, hi = _expected_max(classify(p, d), d)
            top = max(w, default=0)
            if not lo <= top <= hi:
                check.fail(f"n={n} d={d} class {classify(p, d).value} but max letter "
                           f"{top}: {format_path(p)}")
    for w in words:
        try:
            again = phi(phi_inv(w, d), d)
        except (ConstructionError, InvalidWordError) as e:
            check.fail(f"n={n} d={d} word {format_word(w)} raised {e}")
            continue
        if again != w:
            check.fail(f"n={n} d={d} roundtrip word {format_word(w)} -> {format_word(again)}")


def _trace_instance(n, d, p, checks: Mapping[str, CheckResult]) -> None:
    trace = phi_trace(p, d)
    records = trace.records
    mono = checks.get("monotonicity")
    inter = checks.get("intermediate")
    inv = checks.get("inversion")

    if mono is not None:
        with _timed(mono):
            mono.instances += 1
            last: dict[int, int] = {}
            for r in records:
                if r.step == "A3":
                    continue
                pos = r.letter_positions[0]
                if r.letter in last and pos <= last[r.letter]:
                    mono.fail(f"n={n} d={d} letter {r.letter} at {pos} after "
                              f"{last[r.letter]}: {format_path(p)}")
                last[r.letter] = pos

    if inter is not None:
        with _timed(inter):
            inter.instances += 1
            prev = tuple(p)
            for r in records:
                if r.before != prev:
                    inter.fail(f"n={n} d={d} snapshots do not chain at {r.step}: "
                               f"{format_path(p)}")
                prev = r.after
                report = validate_motzkin(path_part(r.after), d)
                if not report:
                    inter.fail(f"n={n} d={d} after {r.step} anchored at {r.anchor}: "
                               f"{report} in {format_path(p)}")
                if r.step[0] in "CE":
                    _check_marking(n, d, p, r, inter)
            if tuple(-c for c in prev) != trace.output:
                inter.fail(f"n={n} d={d} final snapshot disagrees with output")

    if inv is not None:
        with _timed(inv):
            inv.instances += 1
            for r in records:
                try:
                    back = invert_record(r)
                except ConstructionError as e:
                    inv.fail(f"n={n} d={d} {r.step} at {r.anchor} raised {e}: {format_path(p)}")
                    continue
                if back != r.before:
                    inv.fail(f"n={n} d={d} {r.step} at {r.anchor} not inverted: "
                             f"{format_path(p)}")


def _check_marking(n, d, p, r, check: CheckResult) -> None:
    """Chain ordering and nesting of the marked pairs of one E iteration."""
    chain = r.chain
    if not (r.anchor < chain[0] and all(x < y for x, y in zip(chain, chain[1:]))):
        check.fail(f"n={n} d={d} chain {chain} out of order after anchor {r.anchor}")
        return
    stage = r.stage
    # chain[i] is b_{stage - i}; a pair between b_i and b_{i-1} has color >= i and,
    # if its color exceeds i, sits inside a marked pair one color lower.
    for lo, hi, k in r.marked_pairs:
        seg = next((i for i in range(len(chain) - 1) if chain[i] < lo and hi < chain[i + 1]), None)
        if seg is None:
            check.fail(f"n={n} d={d} marked pair ({lo},{hi}) straddles the chain {chain}")
            continue
        floor = stage - seg
        if k < floor:
            check.fail(f"n={n} d={d} marked pair ({lo},{hi}) has color {k} < {floor}")
        elif k > floor and not any(a < lo and hi < b and c == k - 1
                                   for a, b, c in r.marked_pairs):
            check.fail(f"n={n} d={d} marked pair ({lo},{hi},{k}) not nested: {format_path(p)}")


def _counts_instance(n, d, paths, check: CheckResult) -> None:
    check.instances += 1
    dp = count_motzkin_dp(n, d)
    if len(paths) != dp:
        check.fail(f"n={n} d={d} gen_motzkin={len(paths)} dp={dp}")
    syt = sum(1 for _ in gen_syt(n, 2 * d + 1))
    if syt != count_syt_dp(n, 2 * d + 1):
        check.fail(f"n={n} rows={2 * d + 1} gen_syt={syt} dp={count_syt_dp(n, 2 * d + 1)}")
    if d >= 1:
        floor = sum(1 for p in paths if classify(p, d) is not PathClass.BAR)
        want = count_motzkin_dp(n, d, LevelPolicy.FLOOR_ONLY)
        if floor != want:
            check.fail(f"n={n} d={d} lower+hat={floor} floor-only dp={want}")


def _dp_counts(grid, check: CheckResult) -> None:
    for n, d in grid:
        check.instances += 1
        a = count_motzkin_dp(n, d)
        b = count_syt_dp(n, 2 * d + 1)
        if a != b:
            check.fail(f"n={n} d={d} walks={a} syt(<= {2 * d + 1} rows)={b}")
        a = count_motzkin_dp(n, d, LevelPolicy.FLOOR_ONLY)
        b = count_syt_dp(n, 2 * d)
        if a != b:
            check.fail(f"n={n} d={d} floor-only walks={a} syt(<= {2 * d} rows)={b}")


def _formula_counts(n_max: int, check: CheckResult) -> None:
    for n in range(n_max + 1):
        for rows in (2, 3, 4, 5):
            check.instances += 1
            f, dp = syt_count_formula(n, rows), count_syt_dp(n, rows)
            if f != dp:
                check.fail(f"n={n} rows={rows} formula={f} dp={dp}")
        check.instances += 1
        m, f = count_motzkin_dp(n, 1), syt_count_formula(n, 3)
        if m != f:
            check.fail(f"n={n} motzkin dp={m} formula={f}")


def run(grid: Iterable[tuple[int, int]], suites: Iterable[str] = SUITES, *,
        formula_n_max: int = FORMULA_N_MAX) -> VerifyReport:
    """Run the selected suites over ``grid`` with one enumeration per (n, d)."""
    grid = list(grid)
    suites = list(suites)
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites {sorted(unknown)}")
    desc = _describe(grid)
    checks = {s: CheckResult(s, desc) for s in suites if s != "counts"}
    if "counts" in suites:
        checks["counts.enumeration"] = CheckResult("counts.enumeration", desc)
        checks["counts.dp"] = CheckResult("counts.dp", desc)
        checks["counts.formula"] = CheckResult("counts.formula", f"n<={formula_n_max}")
    trace_checks = {k: v for k, v in checks.items()
                    if k in ("monotonicity", "intermediate", "inversion")}

    for n, d in grid:
        paths = list(gen_motzkin(n, d))
        images = None
        if "bijection" in checks or "statistic" in checks:
            images = [phi(p, d) for p in paths]
        if "bijection" in checks:
            c = checks["bijection"]
            with _timed(c):
                _bijection_instance(n, d, paths, images, c)
        if "statistic" in checks:
            c = checks["statistic"]
            with _timed(c):
                for p, w in zip(paths, images):
                    c.instances += 1
                    if level_steps(p) != odd_columns(w):
                        c.fail(f"n={n} d={d} {format_path(p)} has {level_steps(p)} level "
                               f"steps, {format_word(w)} has {odd_columns(w)} odd columns")
        if trace_checks:
            for p in paths:
                _trace_instance(n, d, p, trace_checks)
        if "counts.enumeration" in checks:
            c = checks["counts.enumeration"]
            with _timed(c):
                _counts_instance(n, d, paths, c)

    if "counts.dp" in checks:
        with _timed(checks["counts.dp"]):
            _dp_counts(grid, checks["counts.dp"])
    if "counts.formula" in checks:
        with _timed(checks["counts.formula"]):
            _formula_counts(formula_n_max, checks["counts.formula"])
    return VerifyReport(list(checks.values()))


def verify_all(n_max=None, d_max=None, *, bounds=None) -> VerifyReport:
    return run(make_grid(n_max, d_max, bounds))


def verify_bijection(n_max=None, d_max=None, *, bounds=None) -> VerifyReport:
    """Injectivity, exact image, both roundtrips and the class/max-letter refinement."""
    return run(make_grid(n_max, d_max, bounds), ["bijection"])


def verify_statistic(n_max=None, d_max=None, *, bounds=None) -> VerifyReport:
    """Level steps of every path equal the odd columns of its tableau."""
    return run(make_grid(n_max, d_max, bounds), ["statistic"])


def verify_monotonicity(n_max=None, d_max=None, *, bounds=None) -> VerifyReport:
    """Within each forward trace, every letter value above 1 is emitted left to right."""
    return run(make_grid(n_max, d_max, bounds), ["monotonicity"])


def verify_intermediate(n_max=None, d_max=None, *, bounds=None) -> VerifyReport:
    return run(make_grid(n_max, d_max, bounds), ["intermediate"])


def verify_inversion(n_max=None, d_max=None, *, bounds=None) -> VerifyReport:
    return run(make_grid(n_max, d_max, bounds), ["inversion"])


def verify_counts(n_max=None, d_max=None, *, bounds=None,
                  formula_n_max: int = FORMULA_N_MAX) -> VerifyReport:
    return run(make_grid(n_max, d_max, bounds), ["counts"], formula_n_max=formula_n_max)
