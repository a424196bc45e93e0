"""Temporal researcher-paper citation networks: model, simulation, replay."""

from .model import (
    GraphError,
    PaperNode,
    ResearcherNode,
    Tcln,
    WorldBounds,
    add_researcher,
    audit,
    new_tcln,
    publish_paper,
    record_citations,
)
from .indices import compute_h_index, h_index_backend, total_citations
from .trajectory import Trajectory, TrajectoryPoint
from .sim import SimulationConfig, SimState, init_random_researchers, run, step_year
from .ingest import (
    CitationRecord,
    ParseError,
    compute_trajectory,
    load_records,
    read_records,
    replay_into_tcln,
    serialize_records,
)
from .export import (
    ComplexityReport,
    compare_complexity,
    export_graph,
    import_graph,
    layout,
)

__version__ = "0.1.0"

__all__ = [
    "GraphError",
    "PaperNode",
    "ResearcherNode",
    "Tcln",
    "WorldBounds",
    "add_researcher",
    "audit",
    "new_tcln",
    "publish_paper",
    "record_citations",
    "compute_h_index",
    "h_index_backend",
    "total_citations",
    "Trajectory",
    "TrajectoryPoint",
    "SimulationConfig",
    "SimState",
    "init_random_researchers",
    "run",
    "step_year",
    "CitationRecord",
    "ParseError",
    "compute_trajectory",
    "load_records",
    "read_records",
    "replay_into_tcln",
    "serialize_records",
    "ComplexityReport",
    "compare_complexity",
    "export_graph",
    "import_graph",
    "layout",
]
