import pytest

from tcln.export import export_graph, layout
from tcln.model import audit
from tcln.sim import SimulationConfig, init_random_researchers, run, step_year


def test_invalid_config_rejected():
    with pytest.raises(ValueError):
        SimulationConfig(n_researchers=0)
    with pytest.raises(ValueError):
        SimulationConfig(max_init_papers=0)
    with pytest.raises(ValueError):
        SimulationConfig(citation_rate_scale=-1.0)


def test_init_sixty_researchers_ranges():
    cfg = SimulationConfig(n_researchers=60, max_init_papers=10, seed=5)
    state = init_random_researchers(cfg)
    g = state.graph
    assert len(g.researchers) == 60
    assert g.papers, "expected at least one initial paper"
    for p in g.papers.values():
        assert 0 <= p.citations <= 9
        assert 0.01 <= p.tend_to_be_cited <= 1.00
    assert audit(g) == []


def test_single_researcher_single_max_paper():
    # max_init_papers=1 forces a draw of 0 papers
    cfg = SimulationConfig(n_researchers=1, max_init_papers=1, seed=0)
    g = init_random_researchers(cfg).graph
    r = g.researchers["r0"]
    assert r.papers == [] and r.h_index == 0


def test_same_seed_identical_serialization():
    cfg = SimulationConfig(n_researchers=12, max_init_papers=6, years=4, seed=77)
    out = []
    for _ in range(2):
        g, _traj = run(cfg)
        layout(g)
        out.append(export_graph(g, "json"))
    assert out[0] == out[1]


def test_different_seeds_differ():
    a, _ = run(SimulationConfig(n_researchers=12, max_init_papers=6, seed=1))
    b, _ = run(SimulationConfig(n_researchers=12, max_init_papers=6, seed=2))
    assert export_graph(a, "json") != export_graph(b, "json")


def test_zero_citation_rate_freezes_state():
    cfg = SimulationConfig(n_researchers=8, max_init_papers=5, seed=3,
                           citation_rate_scale=0.0, max_new_papers_per_year=0)
    state = init_random_researchers(cfg)
    before = {pid: p.citations for pid, p in state.graph.papers.items()}
    h_before = {rid: r.h_index for rid, r in state.graph.researchers.items()}
    step_year(state, cfg)
    assert {pid: p.citations for pid, p in state.graph.papers.items()} == before
    assert {rid: r.h_index for rid, r in state.graph.researchers.items()} == h_before


def test_frozen_topology_config():
    cfg = SimulationConfig(n_researchers=8, max_init_papers=5, seed=3,
                           max_new_papers_per_year=0, new_researchers_per_year=0)
    state = init_random_researchers(cfg)
    n_papers = len(state.graph.papers)
    n_res = len(state.graph.researchers)
    for _ in range(5):
        step_year(state, cfg)
    assert len(state.graph.papers) == n_papers
    assert len(state.graph.researchers) == n_res


def test_researcher_arrivals():
    cfg = SimulationConfig(n_researchers=4, max_init_papers=2, seed=9,
                           new_researchers_per_year=2)
    state = init_random_researchers(cfg)
    step_year(state, cfg)
    step_year(state, cfg)
    assert len(state.graph.researchers) == 8
    assert audit(state.graph) == []


def test_run_zero_years_single_snapshot():
    _, trajectories = run(SimulationConfig(n_researchers=5, max_init_papers=4,
                                           years=0, seed=11))
    assert all(len(t.points) == 1 for t in trajectories.values())


def test_h_sequences_non_decreasing_across_seeds():
    for seed in range(20):
        cfg = SimulationConfig(n_researchers=6, max_init_papers=4, years=5, seed=seed)
        _, trajectories = run(cfg)
        for traj in trajectories.values():
            assert traj.validate() == []


def test_paper_experiment_scale_run_passes_audit():
    cfg = SimulationConfig(n_researchers=60, max_init_papers=10, years=10, seed=42)
    g, trajectories = run(cfg)
    assert audit(g) == []
    assert len(g.edges) == len(g.papers)
    assert len(g.papers) == sum(len(r.papers) for r in g.researchers.values())
    for traj in trajectories.values():
        assert traj.validate() == []


def test_conservation_at_every_tick():
    cfg = SimulationConfig(n_researchers=6, max_init_papers=5, years=6, seed=21)
    state = init_random_researchers(cfg)
    for _ in range(cfg.years):
        step_year(state, cfg)
        for rid, r in state.graph.researchers.items():
            assert r.total_cites == sum(state.graph.citation_vector(rid))


def test_golden_trajectories(data_dir, tmp_path):
    """Frozen regression for the full 60-researcher, 10-year run."""
    from tcln.cli import _write_trajectories

    cfg = SimulationConfig(n_researchers=60, max_init_papers=10, years=10, seed=42)
    _, trajectories = run(cfg)
    out = tmp_path / "trajectories.csv"
    _write_trajectories(out, trajectories, with_id=True)
    golden = data_dir / "golden_sim_n60_y10_seed42.csv"
    assert out.read_bytes() == golden.read_bytes()
