"""Historic citation record loading and h-index trajectory replay.

Input format: UTF-8 CSV with header ``paper_id,year,cumulative_citations``,
one row per (paper, year) observation. A paper enters the trajectory at its
first observed year; in later years without an observation it inherits its
latest earlier count.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO

from .indices import compute_h_index
from .model import TEND_MIN, PaperNode, ResearcherNode, Tcln, new_tcln
from .model import add_researcher, publish_paper
from .trajectory import Trajectory, TrajectoryPoint

__all__ = [
    "CitationRecord",
    "LoadReport",
    "ParseError",
    "HEADER",
    "read_records",
    "load_records",
    "serialize_records",
    "compute_trajectory",
    "replay_into_tcln",
]

HEADER = ["paper_id", "year", "cumulative_citations"]


class ParseError(ValueError):
    """Malformed record input; the message names the offending line."""


@dataclass(frozen=True)
class CitationRecord:
    paper_id: str
    year: int
    cumulative_citations: int


@dataclass
class LoadReport:
    records: list[CitationRecord] = field(default_factory=list)
    skipped: list[tuple[int, str]] = field(default_factory=list)


def _open_text(source: str | Path | IO[str] | IO[bytes]) -> IO[str]:
    if isinstance(source, (str, Path)):
        return open(source, encoding="utf-8", newline="")
    if isinstance(source, io.TextIOBase):
        return source
    if hasattr(source, "read"):
        return io.TextIOWrapper(source, encoding="utf-8", newline="")
    raise TypeError(f"cannot read records from {type(source).__name__}")


def read_records(source: str | Path | IO[str] | IO[bytes]) -> LoadReport:
    """Parse records, skipping (and counting) rows with unparsable years.

    Negative or non-integer citation counts and structural problems are
    hard errors; a row whose year cannot be read is excluded the way
    unindexed years are excluded from retrieved data.
    """
    report = LoadReport()
    stream = _open_text(source)
    reader = csv.reader(stream)
    try:
        header = next(reader, None)
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"unreadable input: {exc}") from exc
    if header != HEADER:
        raise ParseError(
            f"line 1: bad header {header!r}, expected {','.join(HEADER)!r}"
        )
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 3:
            raise ParseError(f"line {lineno}: expected 3 fields, got {len(row)}")
        paper_id, year_s, cites_s = (f.strip() for f in row)
        if not paper_id:
            raise ParseError(f"line {lineno}: empty paper_id")
        try:
            cites = int(cites_s)
        except ValueError:
            raise ParseError(
                f"line {lineno}: non-integer citation count {cites_s!r}"
            ) from None
        if cites < 0:
            raise ParseError(f"line {lineno}: negative citation count {cites}")
        try:
            year = int(year_s)
        except ValueError:
            report.skipped.append((lineno, f"unparsable year {year_s!r}"))
            continue
        report.records.append(CitationRecord(paper_id, year, cites))

    _check_monotone(report.records)
    return report


def _check_monotone(records: list[CitationRecord]) -> None:
    latest: dict[str, CitationRecord] = {}
    for rec in sorted(records, key=lambda r: (r.paper_id, r.year)):
        prev = latest.get(rec.paper_id)
        if prev is not None and rec.cumulative_citations < prev.cumulative_citations:
            raise ParseError(
                f"paper {rec.paper_id!r}: cumulative citations decrease "
                f"{prev.cumulative_citations} -> {rec.cumulative_citations} "
                f"between years {prev.year} and {rec.year}"
            )
        latest[rec.paper_id] = rec


def load_records(source: str | Path | IO[str] | IO[bytes]) -> list[CitationRecord]:
    return read_records(source).records


def serialize_records(records: list[CitationRecord]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADER)
    for rec in records:
        writer.writerow([rec.paper_id, rec.year, rec.cumulative_citations])
    return out.getvalue()


def compute_trajectory(
    records: list[CitationRecord], from_year: int, to_year: int
) -> Trajectory:
    """Per-year citation vectors and h values over [from_year, to_year]."""
    if not records:
        raise ValueError("no records supplied")
    if from_year > to_year:
        raise ValueError(f"from_year {from_year} > to_year {to_year}")
    if not any(r.year <= to_year for r in records):
        raise ValueError(f"no data in range {from_year}..{to_year}")

    by_paper: dict[str, dict[int, int]] = {}
    for rec in records:
        by_paper.setdefault(rec.paper_id, {})[rec.year] = rec.cumulative_citations

    traj = Trajectory()
    for year in range(from_year, to_year + 1):
        vector = []
        for obs in by_paper.values():
            usable = [y for y in obs if y <= year]
            if usable:
                vector.append(obs[max(usable)])
        vector.sort(reverse=True)  # canonical presentation, highest-cited first
        traj.points.append(
            TrajectoryPoint(year=year, vector=tuple(vector), h=compute_h_index(vector))
        )
    return traj


def replay_into_tcln(t: Trajectory, researcher_label: str) -> list[Tcln]:
    """One graph per trajectory year: a single researcher whose papers carry
    that year's cumulative counts, placed at height h by the layout pass."""
    from .export import layout

    snapshots = []
    for point in t.points:
        g = new_tcln()
        add_researcher(g, ResearcherNode(id=researcher_label, label=researcher_label))
        for i, cites in enumerate(point.vector):
            publish_paper(
                g,
                researcher_label,
                PaperNode(
                    id=f"{researcher_label}-p{i}",
                    pub_year=point.year,
                    citations=cites,
                    tend_to_be_cited=TEND_MIN,
                    owner=researcher_label,
                ),
            )
        layout(g)
        snapshots.append(g)
    return snapshots
