"""Seeded discrete-year simulator for researcher-paper network growth.

Randomness comes from a single numpy PCG64 generator seeded from the
config, with a fixed draw order: researchers in id-insertion order, papers
in per-researcher insertion order. Identical configs therefore yield
bit-identical graphs and trajectories on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import PaperNode, ResearcherNode, Tcln, WorldBounds, new_tcln
from .model import add_researcher, publish_paper, record_citations
from .trajectory import Trajectory, TrajectoryPoint

__all__ = ["SimulationConfig", "SimState", "init_random_researchers", "step_year", "run"]

INIT_CITES_RANGE = 10  # initial per-paper citations drawn uniformly from 0..9


@dataclass(frozen=True)
class SimulationConfig:
    n_researchers: int = 60
    max_init_papers: int = 10
    years: int = 10
    seed: int = 0
    citation_rate_scale: float = 1.0
    max_new_papers_per_year: int = 1
    new_researchers_per_year: int = 0
    bounds: WorldBounds = field(default_factory=WorldBounds)

    def __post_init__(self) -> None:
        if self.n_researchers < 1:
            raise ValueError(f"n_researchers must be >= 1, got {self.n_researchers}")
        if self.max_init_papers < 1:
            raise ValueError(f"max_init_papers must be >= 1, got {self.max_init_papers}")
        if self.years < 0:
            raise ValueError(f"years must be >= 0, got {self.years}")
        if self.citation_rate_scale < 0:
            raise ValueError("citation_rate_scale must be >= 0")
        if self.max_new_papers_per_year < 0:
            raise ValueError("max_new_papers_per_year must be >= 0")
        if self.new_researchers_per_year < 0:
            raise ValueError("new_researchers_per_year must be >= 0")


@dataclass
class SimState:
    graph: Tcln
    year: int
    rng: np.random.Generator
    paper_seq: dict[str, int] = field(default_factory=dict)

    def next_paper_id(self, researcher_id: str) -> str:
        j = self.paper_seq.get(researcher_id, 0)
        self.paper_seq[researcher_id] = j + 1
        return f"{researcher_id}-p{j}"


def _draw_tendency(rng: np.random.Generator) -> float:
    # (u + 1) / 100 with u uniform on 0..99 -> [0.01, 1.00]
    return (int(rng.integers(100)) + 1) / 100


def _make_papers(state: SimState, researcher_id: str, count: int, *,
                 initial_cites: bool) -> None:
    for _ in range(count):
        cites = int(state.rng.integers(INIT_CITES_RANGE)) if initial_cites else 0
        tend = _draw_tendency(state.rng)
        paper = PaperNode(
            id=state.next_paper_id(researcher_id),
            pub_year=state.year,
            citations=cites,
            tend_to_be_cited=tend,
            owner=researcher_id,
        )
        publish_paper(state.graph, researcher_id, paper)


def _add_fresh_researcher(state: SimState, index: int) -> str:
    rid = f"r{index}"
    add_researcher(state.graph, ResearcherNode(id=rid, label=rid))
    return rid


def init_random_researchers(cfg: SimulationConfig) -> SimState:
    """Create the starting population: each researcher gets k initial papers,
    k uniform on 0..max_init_papers-1, with citations drawn from 0..9."""
    state = SimState(
        graph=new_tcln(cfg.bounds),
        year=0,
        rng=np.random.Generator(np.random.PCG64(cfg.seed)),
    )
    for i in range(cfg.n_researchers):
        rid = _add_fresh_researcher(state, i)
        k = int(state.rng.integers(cfg.max_init_papers))
        _make_papers(state, rid, k, initial_cites=True)
    return state


def step_year(state: SimState, cfg: SimulationConfig) -> SimState:
    """Advance one year: grow citations, publish new papers, admit arrivals.

    Citation growth per paper is a Poisson draw with mean
    ``citation_rate_scale * tend_to_be_cited``; papers born mid-simulation
    start uncited.
    """
    state.year += 1
    g = state.graph
    existing = list(g.researchers)
    for rid in existing:
        for pid in list(g.researchers[rid].papers):
            mean = cfg.citation_rate_scale * g.papers[pid].tend_to_be_cited
            delta = int(state.rng.poisson(mean)) if mean > 0 else 0
            record_citations(g, pid, delta)
    for rid in existing:
        j = int(state.rng.integers(cfg.max_new_papers_per_year + 1))
        _make_papers(state, rid, j, initial_cites=False)
    for _ in range(cfg.new_researchers_per_year):
        _add_fresh_researcher(state, len(g.researchers))
    return state


def run(cfg: SimulationConfig) -> tuple[Tcln, dict[str, Trajectory]]:
    """Initialize, then step ``cfg.years`` times, snapshotting every year.

    Returns the final graph and one trajectory per researcher. Researchers
    admitted mid-run enter the record at their arrival year.
    """
    state = init_random_researchers(cfg)
    trajectories: dict[str, Trajectory] = {}

    def snapshot() -> None:
        for rid in state.graph.researchers:
            vec = state.graph.citation_vector(rid)
            h = state.graph.researchers[rid].h_index
            point = TrajectoryPoint(year=state.year, vector=tuple(vec), h=h)
            trajectories.setdefault(rid, Trajectory(points=[])).points.append(point)

    snapshot()
    for _ in range(cfg.years):
        step_year(state, cfg)
        snapshot()
    return state.graph, trajectories
