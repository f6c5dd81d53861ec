"""Benchmark harness: timed enumeration vs facet computation per instance.

Each (instance, semantics) pair becomes one CSV row.  Enumeration and
facet computation are timed independently under the same wall-clock
limit; a timeout is recorded in the row, never fatal.  When enumeration
stops early the extension count is only a lower bound (exhausted is
false), which is exactly the situation facet computation is meant to
survive.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from pathlib import Path

from .errors import ArgFacetsError, BudgetExceededError
from .facets import facet_report
from .formats import parse_framework
from .framework import Semantics
from .search import Budget, enumerate_extensions

CSV_COLUMNS = (
    "instance",
    "semantics",
    "n_args",
    "n_attacks",
    "n_extensions",
    "exhausted",
    "n_facets",
    "t_enum_ms",
    "t_facets_ms",
    "status",
)

_SUFFIX_FORMATS = {".apx": "apx", ".tgf": "tgf", ".af": "iccma23", ".iccma23": "iccma23"}


@dataclass(frozen=True, slots=True)
class BenchRow:
    instance: str
    semantics: str
    n_args: int
    n_attacks: int
    n_extensions: int
    exhausted: bool
    n_facets: int | None
    t_enum_ms: float
    t_facets_ms: float
    status: str

    def as_csv(self) -> list[str]:
        return [
            self.instance,
            self.semantics,
            str(self.n_args),
            str(self.n_attacks),
            str(self.n_extensions),
            "true" if self.exhausted else "false",
            "" if self.n_facets is None else str(self.n_facets),
            f"{self.t_enum_ms:.3f}",
            f"{self.t_facets_ms:.3f}",
            self.status,
        ]


def detect_format(path: Path) -> str:
    return _SUFFIX_FORMATS.get(path.suffix.lower(), "apx")


def discover_instances(directory: Path) -> list[Path]:
    return sorted(
        p for p in directory.iterdir()
        if p.is_file() and p.suffix.lower() in _SUFFIX_FORMATS
    )


def bench_instance(
    path: Path,
    sigma: Semantics,
    *,
    timeout_s: float | None = 60.0,
    max_models: int | None = None,
) -> BenchRow:
    """Run one (instance, semantics) measurement."""
    name = str(path)
    try:
        F = parse_framework(path.read_text(), detect_format(path))
    except (ArgFacetsError, OSError):
        return BenchRow(name, sigma.value, 0, 0, 0, False, None, 0.0, 0.0, "error")

    budget = Budget(
        max_models=max_models,
        deadline=timeout_s,
    ) if (max_models is not None or timeout_s is not None) else None
    t0 = time.perf_counter()
    result = enumerate_extensions(F, sigma, budget=budget)
    t_enum = (time.perf_counter() - t0) * 1000.0
    enum_timed_out = (
        not result.exhausted
        and (max_models is None or len(result.extensions) < max_models)
    )

    t0 = time.perf_counter()
    try:
        report = facet_report(F, sigma, deadline_s=timeout_s)
        n_facets = len(report.facets)
        facets_timed_out = False
    except BudgetExceededError:
        n_facets = None
        facets_timed_out = True
    t_facets = (time.perf_counter() - t0) * 1000.0

    if enum_timed_out:
        status = "timeout_enum"
    elif facets_timed_out:
        status = "timeout_facets"
    else:
        status = "ok"
    return BenchRow(
        name,
        sigma.value,
        F.n_arguments,
        F.n_attacks,
        len(result.extensions),
        result.exhausted,
        n_facets,
        t_enum,
        t_facets,
        status,
    )


def run_bench(
    directory: Path,
    semantics: list[Semantics],
    *,
    timeout_s: float | None = 60.0,
    max_models: int | None = None,
) -> list[BenchRow]:
    rows = []
    for path in discover_instances(directory):
        for sigma in semantics:
            rows.append(
                bench_instance(path, sigma, timeout_s=timeout_s, max_models=max_models)
            )
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())
    return buf.getvalue()
