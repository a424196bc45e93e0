"""Core domain types for the bipartite researcher-paper graph.

The graph is a strict hub-spoke structure: every edge joins one researcher
to one of their own papers, every paper has exactly one author, and there
are no researcher-researcher or paper-paper edges. As a consequence the
edge count always equals the paper count.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

__all__ = [
    "GraphError",
    "WorldBounds",
    "PaperNode",
    "ResearcherNode",
    "Tcln",
    "new_tcln",
    "add_researcher",
    "publish_paper",
    "record_citations",
    "audit",
]

TEND_MIN = 0.01
TEND_MAX = 1.00


class GraphError(ValueError):
    """Raised when an operation would violate a graph invariant."""


@dataclass(frozen=True)
class WorldBounds:
    """Rectangular coordinate world that all node positions must stay inside."""

    min_x: float = -16.0
    max_x: float = 16.0
    min_y: float = -16.0
    max_y: float = 16.0

    def __post_init__(self) -> None:
        if not (self.min_x < self.max_x and self.min_y < self.max_y):
            raise GraphError(
                f"degenerate bounds: x [{self.min_x}, {self.max_x}], "
                f"y [{self.min_y}, {self.max_y}]"
            )

    def contains(self, x: float, y: float) -> bool:
        return self.min_x <= x <= self.max_x and self.min_y <= y <= self.max_y

    def clamp(self, x: float, y: float) -> tuple[float, float]:
        return (
            min(max(x, self.min_x), self.max_x),
            min(max(y, self.min_y), self.max_y),
        )


@dataclass
class PaperNode:
    """A published paper with a cumulative citation count and a single owner."""

    id: str
    pub_year: int
    citations: int
    tend_to_be_cited: float
    owner: str
    pos: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if self.citations < 0:
            raise GraphError(f"paper {self.id!r}: negative citations ({self.citations})")
        if not (TEND_MIN <= self.tend_to_be_cited <= TEND_MAX):
            raise GraphError(
                f"paper {self.id!r}: tend_to_be_cited {self.tend_to_be_cited} "
                f"outside [{TEND_MIN}, {TEND_MAX}]"
            )


@dataclass
class ResearcherNode:
    """A scholar owning a set of papers, with cached citation aggregates.

    ``total_cites`` and ``h_index`` are caches kept consistent by the graph
    operations; :func:`audit` cross-checks them against recomputation.
    """

    id: str
    label: str = ""
    papers: list[str] = field(default_factory=list)
    total_cites: int = 0
    h_index: int = 0
    pos: tuple[float, float] = (0.0, 0.0)


@dataclass
class Tcln:
    """Bipartite researcher-paper graph with strict degree invariants."""

    researchers: dict[str, ResearcherNode] = field(default_factory=dict)
    papers: dict[str, PaperNode] = field(default_factory=dict)
    edges: set[tuple[str, str]] = field(default_factory=set)
    bounds: WorldBounds = field(default_factory=WorldBounds)

    def citation_vector(self, researcher_id: str) -> list[int]:
        r = self.researchers[researcher_id]
        return [self.papers[pid].citations for pid in r.papers]


def new_tcln(bounds: WorldBounds | None = None) -> Tcln:
    """Create an empty graph over the given (or default) coordinate world."""
    return Tcln(bounds=bounds if bounds is not None else WorldBounds())


def add_researcher(g: Tcln, r: ResearcherNode) -> Tcln:
    """Add a fresh researcher with no papers. Mutates and returns ``g``."""
    if r.id in g.researchers:
        raise GraphError(f"duplicate researcher id {r.id!r}")
    if r.papers:
        raise GraphError(
            f"researcher {r.id!r} must start with no papers; papers attach "
            "via publish_paper"
        )
    if r.total_cites != 0 or r.h_index != 0:
        raise GraphError(f"researcher {r.id!r} must start with zero aggregates")
    g.researchers[r.id] = replace(r, papers=[])
    return g


def publish_paper(g: Tcln, researcher_id: str, p: PaperNode) -> Tcln:
    """Attach a new paper to an existing researcher.

    Updates the researcher's citation total and recomputes the cached
    h-index. Rejects without modifying the graph on any precondition
    failure.
    """
    from .indices import compute_h_index

    if researcher_id not in g.researchers:
        raise GraphError(f"unknown researcher {researcher_id!r}")
    if p.id in g.papers:
        raise GraphError(f"duplicate paper id {p.id!r}")
    if p.owner != researcher_id:
        raise GraphError(
            f"paper {p.id!r} owner {p.owner!r} does not match researcher "
            f"{researcher_id!r}"
        )
    r = g.researchers[researcher_id]
    g.papers[p.id] = p
    g.edges.add((researcher_id, p.id))
    r.papers.append(p.id)
    r.total_cites += p.citations
    r.h_index = compute_h_index(g.citation_vector(researcher_id))
    return g


def record_citations(g: Tcln, paper_id: str, delta: int) -> Tcln:
    """Add ``delta`` citations to a paper; citations are cumulative only."""
    from .indices import compute_h_index

    if delta < 0:
        raise GraphError(f"citations may only increase (delta={delta})")
    if paper_id not in g.papers:
        raise GraphError(f"unknown paper {paper_id!r}")
    if delta == 0:
        return g
    p = g.papers[paper_id]
    p.citations += delta
    r = g.researchers[p.owner]
    r.total_cites += delta
    r.h_index = compute_h_index(g.citation_vector(p.owner))
    return g


def audit(g: Tcln) -> list[str]:
    """Re-verify every structural and state invariant; return violations."""
    from .indices import compute_h_index

    problems: list[str] = []
    for rid, pid in g.edges:
        if rid not in g.researchers:
            problems.append(f"edge ({rid}, {pid}) references unknown researcher")
            continue
        if pid not in g.papers:
            problems.append(f"edge ({rid}, {pid}) references unknown paper")
            continue
        if pid not in g.researchers[rid].papers:
            problems.append(f"edge ({rid}, {pid}) missing from researcher paper list")
        if g.papers[pid].owner != rid:
            problems.append(f"edge ({rid}, {pid}) contradicts paper owner")

    incident: dict[str, int] = {pid: 0 for pid in g.papers}
    for _, pid in g.edges:
        if pid in incident:
            incident[pid] += 1
    for pid, n in incident.items():
        if n != 1:
            problems.append(f"paper {pid} has {n} incident edges, expected 1")

    if len(g.edges) != len(g.papers):
        problems.append(f"|edges| = {len(g.edges)} but |papers| = {len(g.papers)}")

    seen: set[str] = set()
    for rid, r in g.researchers.items():
        for pid in r.papers:
            if pid in seen:
                problems.append(f"paper {pid} claimed by multiple researchers")
            seen.add(pid)
            if pid not in g.papers:
                problems.append(f"researcher {rid} lists unknown paper {pid}")
        vec = [g.papers[pid].citations for pid in r.papers if pid in g.papers]
        if r.total_cites != sum(vec):
            problems.append(
                f"researcher {rid}: total_cites cache {r.total_cites} != {sum(vec)}"
            )
        if r.h_index != compute_h_index(vec):
            problems.append(
                f"researcher {rid}: h_index cache {r.h_index} != "
                f"{compute_h_index(vec)}"
            )
        if not g.bounds.contains(*r.pos):
            problems.append(f"researcher {rid}: position {r.pos} outside bounds")

    for pid, p in g.papers.items():
        if p.citations < 0:
            problems.append(f"paper {pid}: negative citations")
        if not (TEND_MIN <= p.tend_to_be_cited <= TEND_MAX):
            problems.append(f"paper {pid}: tendency {p.tend_to_be_cited} out of range")
        if p.pos is not None and not g.bounds.contains(*p.pos):
            problems.append(f"paper {pid}: position {p.pos} outside bounds")

    return problems
