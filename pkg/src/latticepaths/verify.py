"""Verification sweeps: formulas against the brute-force oracle, identity
grids, and bijection suites.

Every sweep returns a ``SweepSummary`` (checks run, failures, first
counterexample).  The three entry points mirror the command line:

* ``run_sweep``: closed forms versus the dynamic-programming oracle over a
  dense parameter grid, the first-step recurrence and strict-to-weak shift
  identities on every grid tuple meeting their condition blocks, and the
  non-integral intercept normalization checks.
* ``run_identities``: the two-letter walk complement/equality grids, the
  seeded random convolution and upper-negation identities, and the
  cross-formula agreement sweeps.
* ``run_bijections``: image membership, injectivity, cardinality, and round
  trips for every path transform on exhaustively enumerated small instances.

Set the environment variable ``LATTICEPATHS_THREADS`` to an integer above 1
to fan independent job batches out across a thread pool; summaries merge in
a fixed order, so results are identical at any worker count.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable, Sequence

from .formulas import (
    BohmQuery,
    KoroljukQuery,
    NiederhausenQuery,
    bohm,
    count,
    count_strict,
    count_strict_inv,
    count_weak,
    count_weak_inv,
    koroljuk_literal,
    koroljuk_reduced,
)
from .bijections import (
    bohm_rotate,
    bohm_to_unit,
    bohm_unrotate,
    drop_one,
    koroljuk_to_unit,
    lemma_translate,
    lemma_translate_back,
    raise_one,
    reflect_inverse,
    reflect_inverse_back,
    unit_to_bohm,
    unit_to_koroljuk,
)
from .identities import (
    DEFAULT_SEED,
    CheckReport,
    complement_check,
    hagen_rothe_check,
    niederhausen_forms_check,
    random_hagen_rothe,
    random_upper_negation,
    recurrence_check,
    shift_check,
    upper_negation_check,
)
from .model import (
    BoundaryLine,
    LatticePath,
    PathQuery,
    SlopeKind,
    Strictness,
    integer_slope,
    inverse_slope,
    min_ordinate_above,
    normalize_intercept,
    validate_query,
)
from .oracle import count_stepset, dp_count, enumerate_paths, enumerate_stepset

THREADS_ENV = "LATTICEPATHS_THREADS"


@dataclass
class SweepSummary:
    """Tally of a verification sweep: checks run, failures, first witness."""

    checks: int = 0
    failures: int = 0
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, describe: str | Callable[[], str]) -> None:
        self.checks += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = describe() if callable(describe) else describe

    def merge(self, other: "SweepSummary") -> None:
        if self.first_failure is None:
            self.first_failure = other.first_failure
        self.checks += other.checks
        self.failures += other.failures

    def line(self, label: str) -> str:
        text = f"{label}: {self.checks} checks, {self.failures} failures"
        if self.first_failure is not None:
            text += f" (first failure: {self.first_failure})"
        return text


def _thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_jobs(jobs: Sequence[Callable[[], SweepSummary]]) -> SweepSummary:
    """Run summary-producing jobs, optionally on a thread pool, and merge
    the results in submission order so the outcome is schedule-independent."""
    total = SweepSummary()
    workers = _thread_count()
    if workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            total.merge(job())
        return total
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(job) for job in jobs]
        for future in futures:
            total.merge(future.result())
    return total


def _record_reports(reports: Iterable[CheckReport], summary: SweepSummary) -> SweepSummary:
    for report in reports:
        summary.record(report.ok, report.line)
    return summary


# ---------------------------------------------------------------------------
# Closed forms versus the oracle


def _formula_for(q: PathQuery) -> int:
    """Evaluate the matching closed form directly (integral intercepts only)."""
    k, r = q.boundary.k, q.boundary.r
    if q.boundary.kind is SlopeKind.INTEGER:
        if q.strictness is Strictness.WEAK:
            return count_weak(k, int(r), q.a, q.b, q.m, q.n)
        return count_strict(k, int(r), q.a, q.b, q.m, q.n)
    if q.strictness is Strictness.WEAK:
        return count_weak_inv(k, r, q.a, q.b, q.m, q.n)
    return count_strict_inv(k, r, q.a, q.b, q.m, q.n)


def _grid_queries(k: int, max_extent: int) -> Iterable[PathQuery]:
    """Boundary-valid queries over the acceptance grid for one slope value:
    integer intercepts -2..4, 0 <= a <= m <= max_extent-2,
    0 <= b <= n <= max_extent, both slope kinds, both strictness modes."""
    m_top = max(-1, max_extent - 2)
    for r in range(-2, 5):
        for kind in (SlopeKind.INTEGER, SlopeKind.INVERSE):
            line = BoundaryLine(kind, k, r)
            for strictness in (Strictness.WEAK, Strictness.STRICT):
                for m in range(m_top + 1):
                    for a in range(m + 1):
                        for n in range(max_extent + 1):
                            for b in range(n + 1):
                                q = PathQuery(a, b, m, n, line, strictness)
                                if validate_query(q).ok:
                                    yield q


def _describe_query(q: PathQuery) -> str:
    return (
        f"{q.strictness.value} ({q.a},{q.b})->({q.m},{q.n}) "
        f"above {q.boundary.describe()}"
    )


def _formula_oracle_for_k(k: int, max_extent: int) -> SweepSummary:
    summary = SweepSummary()
    for q in _grid_queries(k, max_extent):
        expected = dp_count(q)
        got = _formula_for(q)
        summary.record(
            got == expected,
            lambda q=q, got=got, expected=expected: (
                f"formula-vs-oracle {_describe_query(q)}: formula {got}, oracle {expected}"
            ),
        )
    return summary


def formula_oracle_sweep(max_k: int = 3, max_extent: int = 8) -> SweepSummary:
    """The four closed-form evaluators against dp_count over the dense grid."""
    if max_k <= 0 or max_extent <= 0:
        return SweepSummary()
    return _run_jobs(
        [partial(_formula_oracle_for_k, k, max_extent) for k in range(1, max_k + 1)]
    )


# ---------------------------------------------------------------------------
# Recurrence and shift identities on the same grid


def _recurrence_shift_for_k(k: int, max_extent: int) -> SweepSummary:
    summary = SweepSummary()
    m_top = max(-1, max_extent - 2)
    for r in range(-2, 5):
        for m in range(1, m_top + 1):
            for a in range(m + 1):
                for n in range(max_extent + 1):
                    for b in range(n + 1):
                        if (
                            n >= k * m - r
                            and k * (a + 1) - r <= b <= n - 1
                            and b >= k
                        ):
                            _record_reports([recurrence_check(k, r, a, b, m, n)], summary)
        for m in range(m_top + 1):
            for a in range(m + 1):
                for n in range(max_extent + 1):
                    for b in range(1, n + 1):
                        if b + r - k * a > 0 and n > k * m - r:
                            _record_reports([shift_check(k, r, a, b, m, n)], summary)
    return summary


def recurrence_shift_sweep(max_k: int = 3, max_extent: int = 8) -> SweepSummary:
    """The first-step recurrence and the strict-to-weak shift identity on
    every grid tuple satisfying their condition blocks."""
    if max_k <= 0 or max_extent <= 0:
        return SweepSummary()
    return _run_jobs(
        [partial(_recurrence_shift_for_k, k, max_extent) for k in range(1, max_k + 1)]
    )


# ---------------------------------------------------------------------------
# Non-integral intercepts

NON_INTEGER_INTERCEPTS: tuple[Fraction, ...] = (
    Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(-3, 2),
    Fraction(1, 3), Fraction(2, 3), Fraction(-2, 3), Fraction(4, 3), Fraction(7, 3),
    Fraction(1, 4), Fraction(3, 4), Fraction(-5, 4), Fraction(9, 4), Fraction(1, 5),
    Fraction(7, 5), Fraction(-6, 5), Fraction(11, 5), Fraction(5, 7), Fraction(-9, 7),
)


def _intercept_cases(line: BoundaryLine) -> Iterable[PathQuery]:
    """A few queries with both endpoints strictly above the line, so both
    strictness modes are boundary-valid."""
    for m in (2, 3):
        a = 0
        b = max(0, min_ordinate_above(line, a, Strictness.STRICT))
        n = max(b, min_ordinate_above(line, m, Strictness.STRICT)) + 2
        yield PathQuery(a, b, m, n, line, Strictness.WEAK)


def intercept_normalization_sweep() -> SweepSummary:
    """For 20 non-integral intercepts: the weak and strict oracle counts
    coincide, match the oracle count under the snapped intercept, and match
    the closed form routed through the totalizing wrapper."""
    summary = SweepSummary()
    for r in NON_INTEGER_INTERCEPTS:
        lines = [integer_slope(2, r)]
        for k in (2, 3):
            if (k * r).denominator != 1:
                lines.append(inverse_slope(k, r))
        for line in lines:
            snapped = normalize_intercept(line)
            for weak_q in _intercept_cases(line):
                strict_q = PathQuery(
                    weak_q.a, weak_q.b, weak_q.m, weak_q.n, line, Strictness.STRICT
                )
                snapped_q = PathQuery(
                    weak_q.a, weak_q.b, weak_q.m, weak_q.n, snapped, Strictness.WEAK
                )
                values = {
                    "weak oracle": dp_count(weak_q),
                    "strict oracle": dp_count(strict_q),
                    "snapped oracle": dp_count(snapped_q),
                    "weak closed form": count(weak_q),
                    "strict closed form": count(strict_q),
                }
                distinct = set(values.values())
                summary.record(
                    len(distinct) == 1,
                    lambda line=line, weak_q=weak_q, values=values: (
                        f"intercept normalization {_describe_query(weak_q)}: {values}"
                    ),
                )
    return summary


def run_sweep(max_k: int = 3, max_extent: int = 8) -> SweepSummary:
    """Formula-vs-oracle grid, recurrence/shift identities, and intercept
    normalization.  Nonpositive bounds give an empty sweep."""
    if max_k <= 0 or max_extent <= 0:
        return SweepSummary()
    jobs: list[Callable[[], SweepSummary]] = []
    for k in range(1, max_k + 1):
        jobs.append(partial(_formula_oracle_for_k, k, max_extent))
        jobs.append(partial(_recurrence_shift_for_k, k, max_extent))
    jobs.append(intercept_normalization_sweep)
    return _run_jobs(jobs)


# ---------------------------------------------------------------------------
# Identity grids and seeded random identities

KOROLJUK_GRID = tuple(
    (p, c, m, n)
    for p in (1, 2, 3)
    for c in range(1, 9)
    for m in range(1, 9)
    for n in range(1, 5)
)


def koroljuk_equality_sweep() -> SweepSummary:
    """Literal and reduced walk-intersection sums agree across the grid."""
    summary = SweepSummary()
    for p, c, m, n in KOROLJUK_GRID:
        q = KoroljukQuery(p, c, m, n)
        literal = koroljuk_literal(q)
        reduced = koroljuk_reduced(q)
        summary.record(
            literal == reduced,
            lambda q=q, literal=literal, reduced=reduced: (
                f"koroljuk forms p={q.p} c={q.c} m={q.m} n={q.n}: "
                f"literal {literal}, reduced {reduced}"
            ),
        )
    return summary


def complement_sweep(max_census_steps: int = 10) -> SweepSummary:
    """total = intersecting + avoiding across the walk grid, with both
    components independently confirmed by the brute-force census on
    instances of at most ``max_census_steps`` steps."""
    summary = SweepSummary()
    for p, c, m, n in KOROLJUK_GRID:
        report = complement_check(p, c, m, n)
        summary.record(report.ok, report.line)
        if m + n <= max_census_steps:
            split = count_stepset(KoroljukQuery(p, c, m, n))
            summary.record(
                split.avoiding == report.values["avoiding"]
                and split.intersecting == report.values["intersecting"],
                lambda report=report, split=split: (
                    f"census disagrees with {report.line()}: "
                    f"avoiding {split.avoiding}, intersecting {split.intersecting}"
                ),
            )
    return summary


def hagen_rothe_sweep(trials: int = 1000, seed: int = DEFAULT_SEED) -> SweepSummary:
    """Seeded random convolution-identity checks; parameters are drawn
    serially so the set is identical at any thread count."""
    rng = random.Random(seed)
    params = [random_hagen_rothe(rng) for _ in range(trials)]
    return _record_reports(map(hagen_rothe_check, params), SweepSummary())


def upper_negation_sweep(pairs: int = 500, seed: int = DEFAULT_SEED) -> SweepSummary:
    """Seeded random upper-negation checks."""
    rng = random.Random(seed)
    drawn = [random_upper_negation(rng) for _ in range(pairs)]
    return _record_reports(
        (upper_negation_check(x, k) for x, k in drawn), SweepSummary()
    )


def _niederhausen_grid() -> Iterable[NiederhausenQuery]:
    for k in (1, 2, 3):
        for m in range(0, 7):
            for n in range(1, 7):
                low = max(1, (k - 1) * m, k * m - n + 1)
                for kd in range(low, (k + 1) * m + k + 3):
                    yield NiederhausenQuery(k, Fraction(kd, k), m, n)


def _cross_niederhausen() -> SweepSummary:
    summary = SweepSummary()
    for q in _niederhausen_grid():
        report = niederhausen_forms_check(q)
        summary.record(report.ok, report.line)
        value = report.values["subtracted"]
        unit_q = PathQuery(
            0, 0, q.m, q.n, integer_slope(q.k, q.kd), Strictness.STRICT
        )
        summary.record(
            dp_count(unit_q) == value,
            lambda q=q, value=value: (
                f"oracle disagrees with strict count k={q.k} d={q.d} m={q.m} n={q.n} = {value}"
            ),
        )
        c = q.n - q.k * q.m + q.kd
        if q.m >= 1:
            split = count_stepset(KoroljukQuery(q.k, c, q.n, q.m))
            summary.record(
                split.avoiding == value,
                lambda q=q, value=value, split=split: (
                    f"walk census disagrees with strict count k={q.k} d={q.d} "
                    f"m={q.m} n={q.n}: {split.avoiding} vs {value}"
                ),
            )
    return summary


def _cross_bohm() -> SweepSummary:
    summary = SweepSummary()
    for rise in (1, 2, 3):
        for start_alt in range(1, 5):
            for end_alt in range(1, 5):
                for ups in range(0, 6):
                    downs = start_alt + rise * ups - end_alt
                    if downs < 0:
                        continue
                    q = BohmQuery(rise, start_alt, end_alt, ups)
                    value = bohm(q)
                    direct = count_strict(rise, end_alt, 0, 0, ups, downs)
                    census = count_stepset(q)
                    summary.record(
                        value == direct == census,
                        lambda q=q, value=value, direct=direct, census=census: (
                            f"altitude-walk forms rise={q.rise} start={q.start_alt} "
                            f"end={q.end_alt} ups={q.ups}: sum {value}, "
                            f"strict count {direct}, census {census}"
                        ),
                    )
    return summary


def cross_formula_sweep() -> SweepSummary:
    """The two specialized counts against the strict evaluator and the
    brute-force census."""
    return _run_jobs([_cross_niederhausen, _cross_bohm])


def run_identities(trials: int = 1000, seed: int = DEFAULT_SEED) -> SweepSummary:
    """Walk-grid identities, seeded random identities, and cross-formula
    agreement sweeps."""
    jobs: list[Callable[[], SweepSummary]] = [
        koroljuk_equality_sweep,
        complement_sweep,
        partial(hagen_rothe_sweep, trials, seed),
        partial(upper_negation_sweep, max(0, trials // 2), seed),
        _cross_niederhausen,
        _cross_bohm,
    ]
    return _run_jobs(jobs)


# ---------------------------------------------------------------------------
# Bijection suites


def _key(path: LatticePath) -> tuple[tuple[int, int], tuple[tuple[int, int], ...]]:
    return (path.start, path.steps)


def _check_bijection(
    summary: SweepSummary,
    label: str,
    source: Sequence[LatticePath],
    target: Sequence[LatticePath],
    forward: Callable[[LatticePath], LatticePath],
    backward: Callable[[LatticePath], LatticePath],
) -> None:
    """Record the four bijection properties plus the reverse round trip."""
    target_keys = {_key(t) for t in target}
    images = [forward(p) for p in source]
    summary.record(
        all(_key(image) in target_keys for image in images),
        lambda: f"{label}: some image leaves the target family",
    )
    summary.record(
        len({_key(image) for image in images}) == len(images),
        lambda: f"{label}: transform is not injective",
    )
    summary.record(
        len(source) == len(target),
        lambda: f"{label}: |source| {len(source)} != |target| {len(target)}",
    )
    summary.record(
        all(backward(image) == original for image, original in zip(images, source)),
        lambda: f"{label}: inverse does not undo the transform",
    )
    summary.record(
        all(forward(backward(t)) == t for t in target),
        lambda: f"{label}: transform does not undo the inverse",
    )


def _drop_one_sweep(max_steps: int) -> SweepSummary:
    summary = SweepSummary()
    for k in (1, 2):
        for r in range(0, 4):
            line = integer_slope(k, r)
            for a in range(0, 3):
                for m in range(a, a + 4):
                    for b in range(1, 5):
                        for n in range(b, b + 5):
                            if (m - a) + (n - b) > max_steps:
                                continue
                            strict_q = PathQuery(a, b, m, n, line, Strictness.STRICT)
                            if not validate_query(strict_q).ok:
                                continue
                            weak_q = PathQuery(a, b - 1, m, n - 1, line, Strictness.WEAK)
                            _check_bijection(
                                summary,
                                f"drop-one k={k} r={r} ({a},{b})->({m},{n})",
                                enumerate_paths(strict_q),
                                enumerate_paths(weak_q),
                                partial(drop_one, line=line),
                                partial(raise_one, line=line),
                            )
    return summary


def _lemma_translate_sweep(max_steps: int) -> SweepSummary:
    summary = SweepSummary()
    for k in (1, 2):
        for r in range(0, 4):
            line = integer_slope(k, r)
            for a in range(1, 4):
                for m in range(a, a + 4):
                    for b in range(k, k + 4):
                        for n in range(b, b + 5):
                            if (m - a) + (n - b) > max_steps:
                                continue
                            source_q = PathQuery(a, b, m, n, line, Strictness.WEAK)
                            if not validate_query(source_q).ok:
                                continue
                            target_q = PathQuery(
                                a - 1, b - k, m - 1, n - k, line, Strictness.WEAK
                            )
                            _check_bijection(
                                summary,
                                f"lemma-translate k={k} r={r} ({a},{b})->({m},{n})",
                                enumerate_paths(source_q),
                                enumerate_paths(target_q),
                                partial(lemma_translate, line=line),
                                partial(lemma_translate_back, line=line),
                            )
    return summary


def _reflect_sweep(max_steps: int) -> SweepSummary:
    summary = SweepSummary()
    for k in (1, 2, 3):
        for kr in range(0, 4):
            line = inverse_slope(k, Fraction(kr, k))
            for a in range(0, 3):
                for m in range(a, a + 3):
                    for b in range(0, 3):
                        for n in range(b, b + 3):
                            if (m - a) + (n - b) > max_steps:
                                continue
                            source_q = PathQuery(a, b, m, n, line, Strictness.WEAK)
                            if not validate_query(source_q).ok:
                                continue
                            target_q = PathQuery(
                                0,
                                k * n + kr - m,
                                n - b,
                                k * n + kr - a,
                                integer_slope(k, 0),
                                Strictness.WEAK,
                            )
                            _check_bijection(
                                summary,
                                f"reflect-inverse k={k} k*r={kr} ({a},{b})->({m},{n})",
                                enumerate_paths(source_q),
                                enumerate_paths(target_q),
                                partial(reflect_inverse, line=line),
                                partial(reflect_inverse_back, line=line, end=(m, n)),
                            )
    return summary


def _walk_sweep(max_steps: int, composite_steps: int) -> SweepSummary:
    """Walk-family transforms: to the unit family, to the altitude family,
    and the composite-route consistency check."""
    summary = SweepSummary()
    for p in (1, 2, 3):
        for c in range(1, 6):
            for m in range(1, 9):
                for n in range(1, 5):
                    if m + n > max(max_steps, composite_steps):
                        continue
                    walk_q = KoroljukQuery(p, c, m, n)
                    walks = enumerate_stepset(walk_q)
                    v = c + p * n - m
                    if m + n <= composite_steps:
                        summary.record(
                            all(
                                bohm_to_unit(bohm_rotate(w, c))
                                == koroljuk_to_unit(w, c)
                                for w in walks
                            ),
                            lambda p=p, c=c, m=m, n=n: (
                                f"composite route differs from the direct map "
                                f"p={p} c={c} m={m} n={n}"
                            ),
                        )
                    if m + n > max_steps:
                        continue
                    split = count_stepset(walk_q)
                    summary.record(
                        split.avoiding == len(walks),
                        lambda p=p, c=c, m=m, n=n, split=split, walks=walks: (
                            f"walk census p={p} c={c} m={m} n={n}: "
                            f"{split.avoiding} vs {len(walks)} enumerated"
                        ),
                    )
                    if v >= 1:
                        unit_q = PathQuery(
                            0, 0, n, m, integer_slope(p, v), Strictness.STRICT
                        )
                        _check_bijection(
                            summary,
                            f"koroljuk-to-unit p={p} c={c} m={m} n={n}",
                            walks,
                            enumerate_paths(unit_q),
                            partial(koroljuk_to_unit, c=c),
                            partial(unit_to_koroljuk, p=p, c=c),
                        )
                        bohm_q = BohmQuery(p, c, v, n)
                        _check_bijection(
                            summary,
                            f"bohm-rotate p={p} c={c} m={m} n={n}",
                            walks,
                            enumerate_stepset(bohm_q),
                            partial(bohm_rotate, c=c),
                            partial(bohm_unrotate, c=c),
                        )
                    else:
                        summary.record(
                            not walks,
                            lambda p=p, c=c, m=m, n=n, walks=walks: (
                                f"avoiding walks exist below the feasibility line "
                                f"p={p} c={c} m={m} n={n}: {len(walks)}"
                            ),
                        )
    return summary


def _bohm_to_unit_sweep(max_steps: int) -> SweepSummary:
    summary = SweepSummary()
    for rise in (1, 2, 3):
        for start_alt in range(1, 5):
            for end_alt in range(1, 5):
                for ups in range(0, 6):
                    downs = start_alt + rise * ups - end_alt
                    if downs < 0 or ups + downs > max_steps:
                        continue
                    bohm_q = BohmQuery(rise, start_alt, end_alt, ups)
                    unit_q = PathQuery(
                        0,
                        0,
                        ups,
                        downs,
                        integer_slope(rise, end_alt),
                        Strictness.STRICT,
                    )
                    _check_bijection(
                        summary,
                        f"bohm-to-unit rise={rise} start={start_alt} "
                        f"end={end_alt} ups={ups}",
                        enumerate_stepset(bohm_q),
                        enumerate_paths(unit_q),
                        bohm_to_unit,
                        partial(unit_to_bohm, rise=rise, end_alt=end_alt),
                    )
    return summary


def run_bijections(max_steps: int = 10) -> SweepSummary:
    """All transform suites on instances of at most ``max_steps`` steps; the
    composite-route consistency check runs two steps beyond that."""
    if max_steps < 0:
        return SweepSummary()
    jobs = [
        partial(_drop_one_sweep, max_steps),
        partial(_lemma_translate_sweep, max_steps),
        partial(_reflect_sweep, max_steps),
        partial(_walk_sweep, max_steps, max_steps + 2),
        partial(_bohm_to_unit_sweep, max_steps),
    ]
    return _run_jobs(jobs)
