"""Command-line front end: simulate, replay, hindex, export, compare.

stdout carries data, stderr carries diagnostics. Exit codes: 0 success,
2 usage or flag errors, 1 runtime failures (missing files, bad input).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from collections import Counter
from pathlib import Path

from . import export as export_mod
from . import ingest
from .model import GraphError, audit
from .indices import compute_h_index
from .sim import SimulationConfig, run

CONFIG_KEYS = {
    "n_researchers",
    "max_init_papers",
    "years",
    "seed",
    "citation_rate_scale",
    "max_new_papers_per_year",
    "new_researchers_per_year",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tcln",
        description="Researcher-paper network simulation, replay and export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a seeded random-researcher simulation")
    p.add_argument("--researchers", type=int, default=60,
                   help="number of initial researchers (default: 60)")
    p.add_argument("--max-init-papers", type=int, default=10,
                   help="initial papers drawn uniformly from 0..N-1 (default: 10)")
    p.add_argument("--years", type=int, default=10,
                   help="simulated years after initialization (default: 10)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    p.add_argument("--citation-rate-scale", type=float, default=1.0,
                   help="mean yearly citations = scale * paper tendency (default: 1.0)")
    p.add_argument("--max-new-papers-per-year", type=int, default=1,
                   help="yearly new papers drawn uniformly from 0..N (default: 1)")
    p.add_argument("--new-researchers-per-year", type=int, default=0,
                   help="researchers admitted each year (default: 0)")
    p.add_argument("--config", type=Path,
                   help="JSON config file; explicit flags override its values")
    p.add_argument("--out", type=Path, default=None,
                   help="output directory (default: $TCLN_OUT_DIR or ./out)")

    p = sub.add_parser("replay", help="replay historic citation records")
    p.add_argument("--input", type=Path, required=True,
                   help="CSV with header paper_id,year,cumulative_citations")
    p.add_argument("--from", dest="from_year", type=int, required=True)
    p.add_argument("--to", dest="to_year", type=int, required=True)
    p.add_argument("--out", type=Path, help="write trajectory CSV here instead of stdout")
    p.add_argument("--snapshots", type=Path,
                   help="directory for per-year Pajek snapshots (year_YYYY.net)")
    p.add_argument("--label", default="researcher",
                   help="researcher label used in snapshots (default: researcher)")

    p = sub.add_parser("hindex", help="compute an h-index from citation counts")
    p.add_argument("--cites",
                   help="comma-separated non-negative integers; stdin if omitted")

    p = sub.add_parser("export", help="convert a graph JSON file to another format")
    p.add_argument("--input", type=Path, required=True, help="canonical graph JSON")
    p.add_argument("--format", choices=["json", "dot", "pajek"], default="pajek")
    p.add_argument("--out", type=Path, help="output file (stdout if omitted)")

    p = sub.add_parser("compare", help="node/edge counts vs a traditional network")
    p.add_argument("--input", type=Path, required=True, help="canonical graph JSON")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")

    return parser


def _load_config(args: argparse.Namespace, argv: list[str]) -> SimulationConfig:
    values = {
        "n_researchers": args.researchers,
        "max_init_papers": args.max_init_papers,
        "years": args.years,
        "seed": args.seed,
        "citation_rate_scale": args.citation_rate_scale,
        "max_new_papers_per_year": args.max_new_papers_per_year,
        "new_researchers_per_year": args.new_researchers_per_year,
    }
    if args.config is not None:
        file_values = json.loads(args.config.read_text(encoding="utf-8"))
        unknown = set(file_values) - CONFIG_KEYS
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
        flag_names = {
            "n_researchers": "--researchers",
            "max_init_papers": "--max-init-papers",
            "years": "--years",
            "seed": "--seed",
            "citation_rate_scale": "--citation-rate-scale",
            "max_new_papers_per_year": "--max-new-papers-per-year",
            "new_researchers_per_year": "--new-researchers-per-year",
        }
        for key, value in file_values.items():
            if flag_names[key] not in argv:
                values[key] = value
    return SimulationConfig(**values)


def _write_trajectories(path: Path, trajectories, with_id: bool) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        header = ["year", "h", "papers", "total_cites"]
        if with_id:
            header = ["researcher_id"] + header
        writer.writerow(header)
        for rid, traj in trajectories.items():
            for pt in traj.points:
                row = [pt.year, pt.h, len(pt.vector), sum(pt.vector)]
                if with_id:
                    row = [rid] + row
                writer.writerow(row)


def _cmd_simulate(args: argparse.Namespace, argv: list[str]) -> int:
    try:
        cfg = _load_config(args, argv)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    out_dir = args.out or Path(os.environ.get("TCLN_OUT_DIR", "out"))
    out_dir.mkdir(parents=True, exist_ok=True)

    graph, trajectories = run(cfg)
    export_mod.layout(graph)
    problems = audit(graph)
    if problems:
        print(f"error: graph audit failed: {problems[0]}", file=sys.stderr)
        return 1

    (out_dir / "graph.json").write_bytes(export_mod.export_graph(graph, "json"))
    _write_trajectories(out_dir / "trajectories.csv", trajectories, with_id=True)

    hist = Counter(r.h_index for r in graph.researchers.values())
    print(f"researchers: {len(graph.researchers)}")
    print(f"papers: {len(graph.papers)}")
    print(f"edges: {len(graph.edges)}")
    print("h-index histogram: "
          + " ".join(f"{h}:{hist[h]}" for h in sorted(hist)))
    return 0


def _cmd_replay(args: argparse.Namespace) -> int:
    if args.from_year > args.to_year:
        print(f"error: --from {args.from_year} > --to {args.to_year}", file=sys.stderr)
        return 2
    try:
        records = ingest.load_records(args.input)
        traj = ingest.compute_trajectory(records, args.from_year, args.to_year)
    except FileNotFoundError:
        print(f"error: no such file: {args.input}", file=sys.stderr)
        return 1
    except (ingest.ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    rows = ["year,h,papers,total_cites"]
    for pt in traj.points:
        rows.append(f"{pt.year},{pt.h},{len(pt.vector)},{sum(pt.vector)}")
    text = "\n".join(rows) + "\n"
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)

    if args.snapshots:
        args.snapshots.mkdir(parents=True, exist_ok=True)
        for point, graph in zip(traj.points, ingest.replay_into_tcln(traj, args.label)):
            path = args.snapshots / f"year_{point.year}.net"
            path.write_bytes(export_mod.export_graph(graph, "pajek"))
    return 0


def _cmd_hindex(args: argparse.Namespace) -> int:
    raw = args.cites if args.cites is not None else sys.stdin.read()
    tokens = [t for t in raw.replace(",", " ").split() if t]
    try:
        counts = [int(t) for t in tokens]
        h = compute_h_index(counts)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(h)
    return 0


def _read_graph(path: Path):
    try:
        return export_mod.import_graph(path.read_bytes())
    except FileNotFoundError:
        print(f"error: no such file: {path}", file=sys.stderr)
        return None
    except (ValueError, KeyError, GraphError) as exc:
        print(f"error: invalid graph file: {exc}", file=sys.stderr)
        return None


def _cmd_export(args: argparse.Namespace) -> int:
    graph = _read_graph(args.input)
    if graph is None:
        return 1
    data = export_mod.export_graph(graph, args.format)
    if args.out:
        args.out.write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    graph = _read_graph(args.input)
    if graph is None:
        return 1
    report = export_mod.compare_complexity(graph)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        for key, value in report.to_dict().items():
            print(f"{key}: {value}")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "simulate":
        return _cmd_simulate(args, argv)
    if args.command == "replay":
        return _cmd_replay(args)
    if args.command == "hindex":
        return _cmd_hindex(args)
    if args.command == "export":
        return _cmd_export(args)
    if args.command == "compare":
        return _cmd_compare(args)
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
