"""Command-line surface: detect / components / motif / bench subcommands."""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .components import fragmentation_report
from .graph import (EdgeListError, Graph, LabelMap, graph_stats,
                    largest_connected_component, parse_edge_list,
                    parse_label_file)
from .metrics import evaluate, nmi, pairwise_f_score
from .motif import build_motif_adjacency
from .partition import Partition, PartitionerConfig, modularity
from .pipeline import METHODS, PipelineError, detect_communities

METHOD_LABELS = {"plain": "Louvain", "motif": "Motif-Louvain", "edmot": "EdMot-Louvain"}
BENCH_METRICS = ("nmi", "f_score", "modularity")


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation, embedded verbatim in every report."""
    subcommand: str
    input: str | None = None
    labels: str | None = None
    method: str = "edmot"
    k: int = 1
    seed: int = 0
    runs: int = 20
    output: str | None = None
    output_format: str = "json"
    weighted: bool = False
    largest_cc: bool = True
    manifest: str | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"K must be at least 1, got {self.k}")
        if self.runs < 1:
            raise ValueError(f"runs must be at least 1, got {self.runs}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")


def _load_graph(path_str: str, weighted: bool, largest_cc: bool,
                ) -> tuple[Graph, list[str]]:
    """Read an edge-list file; returns the graph and per-node external ids."""
    path = Path(path_str)
    if not path.is_file():
        raise FileNotFoundError(f"input file not found: {path}")
    g, lm = parse_edge_list(path.read_bytes(), weighted=weighted)
    ext = list(lm.labels)
    if largest_cc:
        g, keep = largest_connected_component(g)
        ext = [ext[old] for old in keep]
    return g, ext


def _load_truth(path_str: str, ext: list[str]) -> Partition:
    path = Path(path_str)
    if not path.is_file():
        raise FileNotFoundError(f"labels file not found: {path}")
    mapping = parse_label_file(path.read_text())
    missing = [tok for tok in ext if tok not in mapping]
    if missing:
        raise EdgeListError(
            f"{len(missing)} graph nodes lack ground-truth labels "
            f"(first missing: {missing[0]!r})")
    return Partition.from_labels(mapping[tok] for tok in ext)


def _write_output(path_str: str | None, text: str) -> None:
    if path_str is None or path_str == "-":
        sys.stdout.write(text)
    else:
        Path(path_str).write_text(text)


def cmd_detect(cfg: RunConfig) -> dict:
    g, ext = _load_graph(cfg.input, cfg.weighted, cfg.largest_cc)
    truth = _load_truth(cfg.labels, ext) if cfg.labels else None
    pcfg = PartitionerConfig(seed=cfg.seed)
    t0 = time.perf_counter()
    part, trace, rewired = detect_communities(g, method=cfg.method, k=cfg.k, cfg=pcfg)
    wall = time.perf_counter() - t0
    report = evaluate(Path(cfg.input).stem, METHOD_LABELS[cfg.method], part, g,
                      rewired=rewired, truth=truth, k=cfg.k, seed=cfg.seed,
                      trace=trace, wall_time=wall)
    payload = {
        "config": asdict(cfg),
        "report": report.to_dict(),
        "partition": {
            "community_count": part.community_count,
            "assignment": {ext[u]: part.assignment[u] for u in range(g.node_count)},
        },
    }
    _write_output(cfg.output, json.dumps(payload, indent=2) + "\n")
    return payload


def cmd_components(cfg: RunConfig) -> dict:
    g, _ = _load_graph(cfg.input, cfg.weighted, cfg.largest_cc)
    h = build_motif_adjacency(g)
    payload = {
        "config": asdict(cfg),
        "stats": graph_stats(g),
        "fragmentation": fragmentation_report(g, h),
    }
    _write_output(cfg.output, json.dumps(payload, indent=2) + "\n")
    return payload


def cmd_motif(cfg: RunConfig) -> None:
    g, ext = _load_graph(cfg.input, cfg.weighted, cfg.largest_cc)
    h = build_motif_adjacency(g)
    lines = [f"{ext[u]} {ext[v]} {int(w)}\n" for u, v, w in h.edges()]
    _write_output(cfg.output, "".join(lines))


def _mean_std(values: list[float]) -> str:
    return f"{statistics.fmean(values):.4f}±{statistics.pstdev(values):.4f}"


def _run_cells(g: Graph, truth: Partition | None, method: str, k: int,
               seeds: range) -> dict[str, str]:
    """Aggregate one (dataset, method, K) cell over seeded runs."""
    scores: dict[str, list[float]] = {m: [] for m in BENCH_METRICS}
    for seed in seeds:
        part, _, _ = detect_communities(g, method=method, k=k,
                                        cfg=PartitionerConfig(seed=seed))
        scores["modularity"].append(modularity(g, part))
        if truth is not None:
            scores["nmi"].append(nmi(part, truth))
            scores["f_score"].append(pairwise_f_score(part, truth))
    return {m: (_mean_std(v) if v else "n/a") for m, v in scores.items()}


def _load_manifest(cfg: RunConfig) -> list[tuple[str, dict]]:
    path = Path(cfg.manifest)
    if not path.is_file():
        raise FileNotFoundError(f"manifest file not found: {path}")
    spec = json.loads(path.read_text())
    if not isinstance(spec, dict) or not spec:
        raise ValueError(f"manifest must be a non-empty JSON object: {path}")
    base = path.parent
    out = []
    for name, entry in spec.items():
        entry = dict(entry)
        entry["edges"] = str(base / entry["edges"])
        if entry.get("labels"):
            entry["labels"] = str(base / entry["labels"])
        out.append((name, entry))
    return out


def _parse_k_arg(text: str | None) -> tuple[int, int] | int | None:
    """--top-k accepts a single K or an inclusive sweep range ``A..B``."""
    if text is None:
        return None
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if lo < 1 or hi < lo:
            raise ValueError(f"bad K sweep range: {text!r}")
        return lo, hi
    k = int(text)
    if k < 1:
        raise ValueError(f"K must be at least 1, got {k}")
    return k


def cmd_bench(cfg: RunConfig, k_arg: tuple[int, int] | int | None) -> str:
    """Benchmark CSV over the manifest datasets.

    Normal mode: rows are (metric, method) for plain / motif / edmot; cells
    hold mean and std over ``runs`` consecutive seeds. Sweep mode (``A..B``):
    rows are (metric, K) for the edge-enhanced method only. Per-dataset
    failures land in the affected cells as ``error``; other cells proceed.
    """
    datasets = _load_manifest(cfg)
    names = [name for name, _ in datasets]
    seeds = range(cfg.seed, cfg.seed + cfg.runs)
    sweep = isinstance(k_arg, tuple)

    loaded: dict[str, tuple[Graph, Partition | None] | Exception] = {}
    for name, entry in datasets:
        try:
            g, ext = _load_graph(entry["edges"], bool(entry.get("weighted", False)),
                                 cfg.largest_cc)
            truth = _load_truth(entry["labels"], ext) if entry.get("labels") else None
            loaded[name] = (g, truth)
        except Exception as exc:  # recorded in-cell, other datasets proceed
            print(f"bench: dataset {name!r} failed to load: {exc}", file=sys.stderr)
            loaded[name] = exc

    def dataset_k(entry: dict) -> int:
        if isinstance(k_arg, int):
            return k_arg
        return int(entry.get("k", 1))

    def cells_for(name: str, entry: dict, method: str, k: int) -> dict[str, str]:
        got = loaded[name]
        if isinstance(got, Exception):
            return {m: "error" for m in BENCH_METRICS}
        g, truth = got
        try:
            return _run_cells(g, truth, method, k, seeds)
        except Exception as exc:
            print(f"bench: {method} on {name!r} failed: {exc}", file=sys.stderr)
            return {m: "error" for m in BENCH_METRICS}

    rows: list[list[str]] = []
    if sweep:
        lo, hi = k_arg
        header = ["metric", "K", *names]
        results = {(name, k): cells_for(name, entry, "edmot", k)
                   for k in range(lo, hi + 1) for name, entry in datasets}
        for metric in BENCH_METRICS:
            for k in range(lo, hi + 1):
                rows.append([metric, str(k),
                             *(results[(name, k)][metric] for name in names)])
        comment = (f"# bench sweep method={METHOD_LABELS['edmot']} "
                   f"seed={cfg.seed} runs={cfg.runs} top_k={lo}..{hi}")
    else:
        header = ["metric", "method", *names]
        results = {(name, method): cells_for(name, entry, method, dataset_k(entry))
                   for method in METHODS for name, entry in datasets}
        for metric in BENCH_METRICS:
            for method in METHODS:
                rows.append([metric, METHOD_LABELS[method],
                             *(results[(name, method)][metric] for name in names)])
        k_note = k_arg if isinstance(k_arg, int) else "manifest"
        comment = f"# bench seed={cfg.seed} runs={cfg.runs} top_k={k_note}"

    out = [comment, ",".join(header)]
    out.extend(",".join(row) for row in rows)
    text = "\n".join(out) + "\n"
    _write_output(cfg.output, text)
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edmot",
        description="Motif-aware community detection via clique edge enhancement.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_io(p: argparse.ArgumentParser, with_input: bool = True):
        if with_input:
            p.add_argument("--input", required=True, help="edge-list file")
        p.add_argument("--weighted", action="store_true",
                       help="input lines carry a third weight column")
        p.add_argument("--no-largest-cc", dest="largest_cc", action="store_false",
                       help="analyze the full graph instead of its largest component")
        p.add_argument("--output", default=None, help="output file (default: stdout)")

    p = sub.add_parser("detect", help="run one community detection method")
    add_io(p)
    p.add_argument("--labels", default=None, help="ground-truth label file")
    p.add_argument("--method", choices=METHODS, default="edmot")
    p.add_argument("--top-k", type=int, default=1, dest="k",
                   help="number of hypergraph components to partition")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("components", help="hypergraph fragmentation report (JSON)")
    add_io(p)

    p = sub.add_parser("motif", help="write the motif adjacency as a weighted edge list")
    add_io(p)

    p = sub.add_parser("bench", help="benchmark CSV over a dataset manifest")
    add_io(p, with_input=False)
    p.add_argument("--manifest", required=True,
                   help="JSON file mapping dataset name -> {edges, labels?, k?}")
    p.add_argument("--runs", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--top-k", default=None, dest="k_text",
                   help="override K for all datasets, or sweep as A..B")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.subcommand == "bench":
            k_arg = _parse_k_arg(args.k_text)
            cfg = RunConfig(subcommand="bench", manifest=args.manifest,
                            seed=args.seed, runs=args.runs, output=args.output,
                            output_format="csv", weighted=args.weighted,
                            largest_cc=args.largest_cc,
                            k=k_arg if isinstance(k_arg, int) else 1)
            cmd_bench(cfg, k_arg)
        elif args.subcommand == "detect":
            cfg = RunConfig(subcommand="detect", input=args.input, labels=args.labels,
                            method=args.method, k=args.k, seed=args.seed,
                            output=args.output, output_format="json",
                            weighted=args.weighted, largest_cc=args.largest_cc)
            cmd_detect(cfg)
        elif args.subcommand == "components":
            cfg = RunConfig(subcommand="components", input=args.input,
                            output=args.output, output_format="json",
                            weighted=args.weighted, largest_cc=args.largest_cc)
            cmd_components(cfg)
        elif args.subcommand == "motif":
            cfg = RunConfig(subcommand="motif", input=args.input, output=args.output,
                            output_format="edgelist", weighted=args.weighted,
                            largest_cc=args.largest_cc)
            cmd_motif(cfg)
        else:  # pragma: no cover - argparse enforces choices
            raise ValueError(f"unknown subcommand {args.subcommand!r}")
    except EdgeListError as exc:
        print(f"error [parse]: {exc}", file=sys.stderr)
        return 1
    except (FileNotFoundError, OSError) as exc:
        print(f"error [io]: {exc}", file=sys.stderr)
        return 1
    except PipelineError as exc:
        print(f"error [pipeline]: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error [config]: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
