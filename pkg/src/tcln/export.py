"""Deterministic layout, graph serialization, and complexity accounting.

Canonical JSON is the round-trip source of truth; DOT and Pajek are
write-only views for external tools. All output is fully ordered (nodes
sorted by id) so identical graphs serialize byte-identically.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .model import PaperNode, ResearcherNode, Tcln, WorldBounds

__all__ = [
    "ComplexityReport",
    "layout",
    "export_graph",
    "import_graph",
    "compare_complexity",
    "SPOKE_RADIUS",
]

SPOKE_RADIUS = 3.0
JSON_VERSION = 1


def layout(g: Tcln) -> Tcln:
    """Assign positions: researcher height encodes h-index, papers sit on a
    ring of radius 3 around their owner at evenly spaced angles."""
    b = g.bounds
    width = b.max_x - b.min_x
    n = len(g.researchers)
    for i, r in enumerate(g.researchers.values()):
        x = b.min_x + (i + 1) * width / (n + 1)
        r.pos = b.clamp(x, float(r.h_index))
        k = len(r.papers)
        for j, pid in enumerate(r.papers):
            angle = 2 * math.pi * j / k
            px = r.pos[0] + SPOKE_RADIUS * math.cos(angle)
            py = r.pos[1] + SPOKE_RADIUS * math.sin(angle)
            g.papers[pid].pos = b.clamp(px, py)
    return g


def _researcher_label(r: ResearcherNode) -> str:
    return f"{len(r.papers)}/{r.h_index}"


def _round_pos(pos: tuple[float, float] | None) -> list[float] | None:
    if pos is None:
        return None
    return [round(pos[0], 6), round(pos[1], 6)]


def export_graph(g: Tcln, format: str = "json") -> bytes:
    if format == "json":
        return _to_json(g)
    if format == "dot":
        return _to_dot(g)
    if format == "pajek":
        return _to_pajek(g)
    raise ValueError(f"unknown format {format!r}")


def _to_json(g: Tcln) -> bytes:
    doc = {
        "version": JSON_VERSION,
        "bounds": {
            "min_x": g.bounds.min_x,
            "max_x": g.bounds.max_x,
            "min_y": g.bounds.min_y,
            "max_y": g.bounds.max_y,
        },
        "researchers": [
            {
                "id": r.id,
                "label": _researcher_label(r),
                "papers": list(r.papers),
                "total_cites": r.total_cites,
                "h_index": r.h_index,
                "pos": _round_pos(r.pos),
            }
            for r in sorted(g.researchers.values(), key=lambda r: r.id)
        ],
        "papers": [
            {
                "id": p.id,
                "label": str(p.citations),
                "pub_year": p.pub_year,
                "citations": p.citations,
                "tend_to_be_cited": p.tend_to_be_cited,
                "owner": p.owner,
                "pos": _round_pos(p.pos),
            }
            for p in sorted(g.papers.values(), key=lambda p: p.id)
        ],
        "edges": sorted(list(e) for e in g.edges),
    }
    return (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode("utf-8")


def import_graph(data: bytes | str) -> Tcln:
    """Rebuild a graph from its canonical JSON form."""
    doc = json.loads(data)
    if doc.get("version") != JSON_VERSION:
        raise ValueError(f"unsupported graph version {doc.get('version')!r}")
    b = doc["bounds"]
    g = Tcln(bounds=WorldBounds(b["min_x"], b["max_x"], b["min_y"], b["max_y"]))
    for rd in doc["researchers"]:
        g.researchers[rd["id"]] = ResearcherNode(
            id=rd["id"],
            label=rd["label"],
            papers=list(rd["papers"]),
            total_cites=rd["total_cites"],
            h_index=rd["h_index"],
            pos=tuple(rd["pos"]) if rd["pos"] else (0.0, 0.0),
        )
    for pd in doc["papers"]:
        g.papers[pd["id"]] = PaperNode(
            id=pd["id"],
            pub_year=pd["pub_year"],
            citations=pd["citations"],
            tend_to_be_cited=pd["tend_to_be_cited"],
            owner=pd["owner"],
            pos=tuple(pd["pos"]) if pd["pos"] else None,
        )
    g.edges = {(rid, pid) for rid, pid in doc["edges"]}
    return g


def _vertex_order(g: Tcln) -> list[tuple[str, str, tuple[float, float] | None]]:
    rows = [
        (r.id, _researcher_label(r), r.pos)
        for r in sorted(g.researchers.values(), key=lambda r: r.id)
    ]
    rows += [
        (p.id, str(p.citations), p.pos)
        for p in sorted(g.papers.values(), key=lambda p: p.id)
    ]
    return rows


def _to_pajek(g: Tcln) -> bytes:
    rows = _vertex_order(g)
    index = {vid: i + 1 for i, (vid, _, _) in enumerate(rows)}
    lines = [f"*Vertices {len(rows)}"]
    for i, (vid, label, pos) in enumerate(rows, start=1):
        x, y = pos if pos is not None else (0.0, 0.0)
        lines.append(f'{i} "{label}" {round(x, 6)} {round(y, 6)}')
    lines.append("*Edges")
    for rid, pid in sorted(g.edges):
        lines.append(f"{index[rid]} {index[pid]}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _to_dot(g: Tcln) -> bytes:
    lines = ["graph tcln {"]
    for r in sorted(g.researchers.values(), key=lambda r: r.id):
        lines.append(f'  "{r.id}" [shape=box, label="{_researcher_label(r)}"];')
    for p in sorted(g.papers.values(), key=lambda p: p.id):
        lines.append(f'  "{p.id}" [shape=circle, label="{p.citations}"];')
    for rid, pid in sorted(g.edges):
        lines.append(f'  "{rid}" -- "{pid}";')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


@dataclass(frozen=True)
class ComplexityReport:
    """Node/edge accounting for the hub-spoke graph against a traditional
    author-paper network with one node per citing work and one edge per
    citation plus one per authorship."""

    tcln_nodes: int
    tcln_edges: int
    trad_nodes: int
    trad_edges: int
    m_avg: float
    n_avg: float

    @property
    def edge_ratio(self) -> float:
        return self.trad_edges / self.tcln_edges if self.tcln_edges else 0.0

    def to_dict(self) -> dict:
        return {
            "tcln_nodes": self.tcln_nodes,
            "tcln_edges": self.tcln_edges,
            "trad_nodes": self.trad_nodes,
            "trad_edges": self.trad_edges,
            "m_avg": self.m_avg,
            "n_avg": self.n_avg,
            "edge_ratio": self.edge_ratio,
        }


def compare_complexity(g: Tcln) -> ComplexityReport:
    n_researchers = len(g.researchers)
    n_papers = len(g.papers)
    total_cites = sum(p.citations for p in g.papers.values())
    return ComplexityReport(
        tcln_nodes=n_researchers + n_papers,
        tcln_edges=len(g.edges),
        trad_nodes=n_researchers + n_papers + total_cites,
        trad_edges=total_cites + n_papers,
        m_avg=n_papers / n_researchers if n_researchers else 0.0,
        n_avg=total_cites / n_papers if n_papers else 0.0,
    )
