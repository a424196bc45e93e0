import io

import pytest

from tcln.ingest import (
    CitationRecord,
    ParseError,
    compute_trajectory,
    load_records,
    read_records,
    replay_into_tcln,
    serialize_records,
)
from tcln.model import audit
from tcln.trajectory import Trajectory

LESSER_H_SEQUENCE = [1, 1, 2, 3, 3, 4, 4, 5, 6, 8]


def test_load_fixture(lesser_csv):
    records = load_records(lesser_csv)
    years = sorted({r.year for r in records})
    assert years == list(range(1968, 1978))
    first = [r for r in records if r.year == 1968]
    assert [r.cumulative_citations for r in first] == [6]


def test_empty_file_with_header():
    assert load_records(io.StringIO("paper_id,year,cumulative_citations\n")) == []


def test_bad_header():
    with pytest.raises(ParseError, match="line 1"):
        load_records(io.StringIO("id,yr,cites\np1,2000,1\n"))


def test_negative_citations_named_line():
    src = "paper_id,year,cumulative_citations\np1,2000,5\np1,2001,-1\n"
    with pytest.raises(ParseError, match="line 3"):
        load_records(io.StringIO(src))


def test_non_integer_citations_rejected():
    src = "paper_id,year,cumulative_citations\np1,2000,lots\n"
    with pytest.raises(ParseError, match="line 2"):
        load_records(io.StringIO(src))


def test_unparsable_year_skipped_and_counted():
    src = "paper_id,year,cumulative_citations\np1,2000,5\np2,n.d.,3\np1,2001,6\n"
    report = read_records(io.StringIO(src))
    assert len(report.records) == 2
    assert report.skipped == [(3, "unparsable year 'n.d.'")]


def test_decreasing_cumulative_citations_rejected():
    src = "paper_id,year,cumulative_citations\np1,2000,5\np1,2001,4\n"
    with pytest.raises(ParseError, match="decrease"):
        load_records(io.StringIO(src))


def test_crlf_accepted():
    src = "paper_id,year,cumulative_citations\r\np1,2000,5\r\n"
    assert load_records(io.StringIO(src)) == [CitationRecord("p1", 2000, 5)]


def test_serialize_round_trip(lesser_csv):
    records = load_records(lesser_csv)
    assert load_records(io.StringIO(serialize_records(records))) == records


def test_lesser_h_sequence(lesser_csv):
    traj = compute_trajectory(load_records(lesser_csv), 1968, 1977)
    assert traj.h_sequence() == LESSER_H_SEQUENCE
    assert traj.validate() == []


def test_lesser_single_year_1975(lesser_csv):
    traj = compute_trajectory(load_records(lesser_csv), 1975, 1975)
    (point,) = traj.points
    assert list(point.vector) == [166, 20, 7, 6, 6, 3, 3, 2, 0, 0]
    assert point.h == 5


def test_single_uncited_paper_trajectory():
    traj = compute_trajectory([CitationRecord("p1", 2000, 0)], 2000, 2000)
    assert traj.h_sequence() == [0]


def test_empty_range_errors():
    with pytest.raises(ValueError, match="no data in range"):
        compute_trajectory([CitationRecord("p1", 2000, 1)], 1990, 1995)
    with pytest.raises(ValueError):
        compute_trajectory([], 2000, 2001)
    with pytest.raises(ValueError):
        compute_trajectory([CitationRecord("p1", 2000, 1)], 2001, 2000)


def test_replay_snapshots(lesser_csv):
    traj = compute_trajectory(load_records(lesser_csv), 1968, 1977)
    snapshots = replay_into_tcln(traj, "lesser")
    assert len(snapshots) == 10
    for point, g in zip(traj.points, snapshots):
        assert audit(g) == []
        assert len(g.researchers) == 1
        assert g.researchers["lesser"].pos[1] == point.h

    g1970 = snapshots[2]
    assert len(g1970.papers) == 2
    assert g1970.researchers["lesser"].pos[1] == 2.0

    g1977 = snapshots[-1]
    assert len(g1977.papers) == 17
    assert len(g1977.edges) == 17


def test_replay_empty_trajectory():
    assert replay_into_tcln(Trajectory(points=[]), "x") == []
