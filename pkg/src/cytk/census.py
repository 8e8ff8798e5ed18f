"""Ingestion of weight-system lists and batch evaluation of the
hypersurface predicates.

The input format is tolerant whitespace-separated integers: the first
integer on a line is the degree, the rest are weights (4 or 5 of them).
Four-weight records are completed with the missing weight d/2, matching
the correspondence between the two halves of the published classification.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable, Sequence, TextIO

from cytk import hypersurface
from cytk.hypersurface import _stratified_locus  # total variant for failed records
from cytk.wps import WeightSystem, is_wellformed_hypersurface

N3 = "N3"  # record arrived with 4 weights, the d/2 weight was appended
N4 = "N4"  # record arrived with all 5 weights


@dataclass(frozen=True)
class RawRecord:
    degree: int
    weights: tuple[int, ...]
    source_line: int


@dataclass(frozen=True)
class NormalizedRecord:
    ws: WeightSystem
    origin: str
    source_line: int


@dataclass(frozen=True)
class RecordVerdict:
    line: int
    degree: int
    weights: tuple[int, int, int, int, int]
    origin: str
    wellformed: bool
    quasismooth: bool
    calabi_yau: bool
    smooth_in_codim2: bool
    contains_no_edge: bool
    singular_curve_types: tuple[str, ...]


@dataclass(frozen=True)
class CensusSummary:
    total: int
    not_smooth_codim2: int
    not_smooth_codim2_and_no_edge: int
    failures: tuple[tuple[int, str], ...]


def parse_database(
    lines: Iterable[str],
) -> tuple[list[RawRecord], list[tuple[int, str]]]:
    """One RawRecord per non-comment, non-blank line.

    The leading integers of a line are degree then weights; everything from
    the first non-integer token on is ignored.  Lines starting with '#' are
    comments.  Malformed lines are collected as (line number, message) and
    never abort the run.
    """
    records: list[RawRecord] = []
    failures: list[tuple[int, str]] = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        values: list[int] = []
        for token in stripped.split():
            try:
                values.append(int(token))
            except ValueError:
                break
        if len(values) < 2:
            failures.append((lineno, "no degree/weight integers found"))
            continue
        degree, weights = values[0], tuple(values[1:])
        if degree <= 0 or any(w <= 0 for w in weights):
            failures.append((lineno, "degree and weights must be positive"))
            continue
        if len(weights) not in (4, 5):
            failures.append((lineno, f"expected 4 or 5 weights, got {len(weights)}"))
            continue
        if len(weights) == 4:
            if degree % 2 != 0:
                failures.append((lineno, "4-weight record with odd degree"))
                continue
            if degree // 2 in weights:
                failures.append((lineno, "4-weight record already contains d/2"))
                continue
        records.append(RawRecord(degree, weights, lineno))
    return records, failures


def normalize(record: RawRecord) -> NormalizedRecord:
    """Complete 4-weight records with the weight d/2 and check d = sum(w).

    Raises ValueError when the record cannot denote a hypersurface with
    trivial canonical class.
    """
    weights = record.weights
    if len(weights) == 4:
        if record.degree % 2 != 0:
            raise ValueError("4-weight record with odd degree")
        weights = weights + (record.degree // 2,)
        origin = N3
    else:
        origin = N4
    if sum(weights) != record.degree:
        raise ValueError(
            f"degree {record.degree} is not the weight sum {sum(weights)}"
        )
    ws = WeightSystem(record.degree, weights)  # may raise ValueError
    return NormalizedRecord(ws=ws, origin=origin, source_line=record.source_line)


def denormalize(record: NormalizedRecord) -> RawRecord:
    """Inverse of :func:`normalize` on its image."""
    if record.origin == N3:
        half = record.ws.degree // 2
        weights = list(record.ws.weights)
        weights.remove(half)
        return RawRecord(record.ws.degree, tuple(weights), record.source_line)
    return RawRecord(record.ws.degree, record.ws.weights, record.source_line)


def _evaluate(record: NormalizedRecord) -> RecordVerdict:
    ws = record.ws
    quasismooth = hypersurface.is_quasismooth(ws)
    locus = _stratified_locus(ws)
    smooth2 = not locus.singular_curves and not any(
        e.singular for e in locus.contained_edges
    )
    return RecordVerdict(
        line=record.source_line,
        degree=ws.degree,
        weights=ws.weights,
        origin=record.origin,
        wellformed=is_wellformed_hypersurface(ws),
        quasismooth=quasismooth,
        calabi_yau=hypersurface.is_calabi_yau_degree(ws),
        smooth_in_codim2=smooth2,
        contains_no_edge=not locus.contained_edges,
        singular_curve_types=tuple(str(c.quotient) for c in locus.singular_curves),
    )


def run_census(
    records: Sequence[NormalizedRecord], jobs: int = 1
) -> tuple[CensusSummary, list[RecordVerdict]]:
    """Evaluate every predicate on every record.

    Records may be evaluated by several worker threads; each evaluation is
    pure and the verdict table is returned in input order, so the output is
    identical for any worker count.
    """
    if jobs <= 1:
        verdicts = [_evaluate(r) for r in records]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_evaluate, records, chunksize=64))
    failures = []
    not_smooth = 0
    not_smooth_no_edge = 0
    for v in verdicts:
        if not v.wellformed:
            failures.append((v.line, "not wellformed"))
        if not v.quasismooth:
            failures.append((v.line, "not quasismooth"))
        if not v.smooth_in_codim2:
            not_smooth += 1
            if v.contains_no_edge:
                not_smooth_no_edge += 1
    summary = CensusSummary(
        total=len(verdicts),
        not_smooth_codim2=not_smooth,
        not_smooth_codim2_and_no_edge=not_smooth_no_edge,
        failures=tuple(failures),
    )
    return summary, verdicts


def census_lines(
    lines: Iterable[str], jobs: int = 1
) -> tuple[CensusSummary, list[RecordVerdict]]:
    """Parse, normalize and evaluate; all failures end up in the summary."""
    raws, failures = parse_database(lines)
    normalized = []
    for raw in raws:
        try:
            normalized.append(normalize(raw))
        except ValueError as exc:
            failures.append((raw.source_line, str(exc)))
    summary, verdicts = run_census(normalized, jobs=jobs)
    merged = tuple(sorted(failures + list(summary.failures)))
    return replace(summary, failures=merged), verdicts


_BOOL = {True: "true", False: "false"}

CSV_FIELDS = (
    "line",
    "degree",
    "w0",
    "w1",
    "w2",
    "w3",
    "w4",
    "wellformed",
    "quasismooth",
    "calabi_yau",
    "smooth_in_codim2",
    "contains_no_edge",
    "singular_curve_types",
)


def write_csv(verdicts: Sequence[RecordVerdict], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for v in verdicts:
        writer.writerow(
            [v.line, v.degree, *v.weights]
            + [
                _BOOL[v.wellformed],
                _BOOL[v.quasismooth],
                _BOOL[v.calabi_yau],
                _BOOL[v.smooth_in_codim2],
                _BOOL[v.contains_no_edge],
                ";".join(v.singular_curve_types),
            ]
        )


def verdicts_as_json(
    summary: CensusSummary, verdicts: Sequence[RecordVerdict]
) -> dict:
    return {
        "summary": {
            "total": summary.total,
            "not_smooth_codim2": summary.not_smooth_codim2,
            "not_smooth_codim2_and_no_edge": summary.not_smooth_codim2_and_no_edge,
            "failures": [
                {"line": line, "reason": reason} for line, reason in summary.failures
            ],
        },
        "records": [
            {
                "line": v.line,
                "degree": v.degree,
                "weights": list(v.weights),
                "origin": v.origin,
                "wellformed": v.wellformed,
                "quasismooth": v.quasismooth,
                "calabi_yau": v.calabi_yau,
                "smooth_in_codim2": v.smooth_in_codim2,
                "contains_no_edge": v.contains_no_edge,
                "singular_curve_types": list(v.singular_curve_types),
            }
            for v in verdicts
        ],
    }


def write_json(
    summary: CensusSummary, verdicts: Sequence[RecordVerdict], out: TextIO
) -> None:
    json.dump(verdicts_as_json(summary, verdicts), out, sort_keys=True, indent=2)
    out.write("\n")
