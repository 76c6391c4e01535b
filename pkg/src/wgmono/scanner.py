"""Monotonicity scan of the walk generating function over a full rank.

For every partition of d in dictionary order the scanner evaluates the
generating function at a common rational point (default 1/d), then
extracts the violation set (values that strictly increase into their
successor), exact ties (reported separately, never folded into either
side), and the maximal monotone runs between violations.

Reports serialize to JSON and to CSV of (partition, normalized value);
values are always exact "N/D" strings.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .characters import CharacterTable, load_or_build
from .errors import DomainError
from .exact import factorial, format_rat, int_pow, rat
from .genfun import table_weights
from .partitions import Partition, as_partition


@dataclass(frozen=True)
class MValue:
    alpha: Partition
    x: Fraction
    value: Fraction


@dataclass(frozen=True)
class Run:
    start: Partition
    end: Partition
    length: int


@dataclass(frozen=True)
class ScanReport:
    degree: int
    x: Fraction
    values: tuple[MValue, ...]
    violations: tuple[Partition, ...]
    ties: tuple[Partition, ...]
    runs: tuple[Run, ...]

    def normalizer(self) -> Fraction:
        """Rescale factor (d!)^2 / d^d applied for display."""
        return rat(int_pow(factorial(self.degree), 2), int_pow(self.degree, self.degree))

    def value_of(self, alpha) -> Fraction:
        a = as_partition(alpha)
        for mv in self.values:
            if mv.alpha == a:
                return mv.value
        raise DomainError(f"{a} is not a partition of {self.degree}")

    def to_json(self, intervals: tuple["IntervalStat", ...] = ()) -> str:
        norm = self.normalizer()
        doc = {
            "degree": self.degree,
            "x": format_rat(self.x),
            "entries": [
                {
                    "partition": str(mv.alpha),
                    "value": format_rat(mv.value),
                    "normalized": format_rat(mv.value * norm),
                }
                for mv in self.values
            ],
            "violations": [str(p) for p in self.violations],
            "ties": [str(p) for p in self.ties],
            "runs": [
                {"start": str(r.start), "end": str(r.end), "length": r.length}
                for r in self.runs
            ],
        }
        if intervals:
            doc["intervals"] = [
                {
                    "low": str(s.low),
                    "high": str(s.high),
                    "cardinality": s.cardinality,
                    "violations_inside": [str(p) for p in s.violations_inside],
                }
                for s in intervals
            ]
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        norm = self.normalizer()
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition", "normalized"])
        for mv in self.values:
            writer.writerow([str(mv.alpha), format_rat(mv.value * norm)])
        return buf.getvalue()


@dataclass(frozen=True)
class IntervalStat:
    low: Partition
    high: Partition
    cardinality: int
    violations_inside: tuple[Partition, ...]


_worker_state: dict = {}


def _scan_init(table: CharacterTable, x: Fraction) -> None:
    _worker_state["columns"] = [table.column(a) for a in table.order]
    _worker_state["weights"] = table_weights(table, x)


def _scan_chunk(span: tuple[int, int]) -> list[Fraction]:
    lo, hi = span
    weights = _worker_state["weights"]
    columns = _worker_state["columns"]
    out = []
    for j in range(lo, hi):
        total = Fraction(0)
        for chi, w in zip(columns[j], weights):
            if chi:
                total += chi * w
        out.append(total)
    return out


def _classify(values: list[Fraction]) -> tuple[list[int], list[int]]:
    """Indices of violations (value < next) and ties (value == next)."""
    violations = []
    ties = []
    for i in range(len(values) - 1):
        if values[i] < values[i + 1]:
            violations.append(i)
        elif values[i] == values[i + 1]:
            ties.append(i)
    return violations, ties


def _runs(order: tuple[Partition, ...], violations: list[int]) -> tuple[Run, ...]:
    """Split the lex sequence after each violation index."""
    runs = []
    start = 0
    for v in violations:
        runs.append(Run(order[start], order[v], v - start + 1))
        start = v + 1
    runs.append(Run(order[start], order[-1], len(order) - start))
    return tuple(runs)


def scan(d: int, x: Fraction | None = None, *, table: CharacterTable | None = None,
         jobs: int = 1, use_cache: bool = True) -> ScanReport:
    """Evaluate every partition of d at x (default 1/d) and classify.

    Evaluations fan out over a worker pool when jobs > 1 and are merged
    back in lex order; exact arithmetic makes the report identical for
    any job count.
    """
    if table is None:
        table = load_or_build(d, jobs=jobs, use_cache=use_cache)
    elif table.degree != d:
        raise DomainError(f"table degree {table.degree} does not match d={d}")
    x = rat(1, d) if x is None else Fraction(x)

    n = len(table.order)
    if jobs <= 1 or n < 4 * jobs:
        _scan_init(table, x)
        values = _scan_chunk((0, n))
        _worker_state.clear()
    else:
        step = (n + jobs - 1) // jobs
        spans = [(k, min(k + step, n)) for k in range(0, n, step)]
        with ProcessPoolExecutor(max_workers=jobs, initializer=_scan_init,
                                 initargs=(table, x)) as pool:
            values = []
            for part in pool.map(_scan_chunk, spans):
                values.extend(part)

    violations, ties = _classify(values)
    return ScanReport(
        degree=d,
        x=x,
        values=tuple(MValue(a, x, v) for a, v in zip(table.order, values)),
        violations=tuple(table.order[i] for i in violations),
        ties=tuple(table.order[i] for i in ties),
        runs=_runs(table.order, violations),
    )


def violation_set(report: ScanReport) -> tuple[Partition, ...]:
    """Partitions whose value strictly increases into the lex successor."""
    return report.violations


def monotone_runs(report: ScanReport) -> tuple[Run, ...]:
    """Maximal stretches with no internal violation, in lex order."""
    return report.runs


def interval_stat(report: ScanReport, low, high) -> IntervalStat:
    """Half-open interval (low, high]: cardinality and violations inside."""
    lo, hi = as_partition(low), as_partition(high)
    order = [mv.alpha for mv in report.values]
    pos = {p: k for k, p in enumerate(order)}
    if lo not in pos or hi not in pos:
        raise DomainError(f"interval bounds must be partitions of {report.degree}")
    if pos[lo] >= pos[hi]:
        raise DomainError(f"low {lo} must sort strictly before high {hi}")
    inside = set(order[pos[lo] + 1:pos[hi] + 1])
    return IntervalStat(
        low=lo,
        high=hi,
        cardinality=pos[hi] - pos[lo],
        violations_inside=tuple(p for p in report.violations if p in inside),
    )
