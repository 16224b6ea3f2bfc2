"""Undirected simple graphs, edge-list ingestion, and connectivity helpers."""

from __future__ import annotations

import math
from bisect import bisect_left
from typing import IO, Iterable, Iterator, Sequence

COMMENT_PREFIXES = ("#", "%")


class EdgeListError(ValueError):
    """Malformed edge-list or label-file input."""


class Graph:
    """Undirected simple graph over dense node ids ``0..node_count-1``.

    Edges carry positive weights (1.0 for unweighted input). Self-loops and
    parallel edges are rejected here; raw input is canonicalized by
    :func:`parse_edge_list` before construction. Instances are immutable
    after construction and safe to read from multiple threads.
    """

    __slots__ = ("node_count", "edge_count", "total_weight",
                 "neighbors", "edge_weights", "weighted_degrees")

    def __init__(self, node_count: int, edges: Iterable[tuple[int, int, float]]):
        if node_count < 0:
            raise ValueError("node_count must be non-negative")
        nbrs: list[list[int]] = [[] for _ in range(node_count)]
        wts: list[list[float]] = [[] for _ in range(node_count)]
        m = 0
        total = 0.0
        for u, v, w in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {node_count} nodes")
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            w = float(w)
            if not math.isfinite(w) or w <= 0:
                raise ValueError(f"edge ({u}, {v}) has non-positive weight {w}")
            nbrs[u].append(v)
            wts[u].append(w)
            nbrs[v].append(u)
            wts[v].append(w)
            m += 1
            total += w
        for u in range(node_count):
            if len(nbrs[u]) > 1:
                order = sorted(range(len(nbrs[u])), key=nbrs[u].__getitem__)
                nbrs[u] = [nbrs[u][i] for i in order]
                wts[u] = [wts[u][i] for i in order]
                for a, b in zip(nbrs[u], nbrs[u][1:]):
                    if a == b:
                        raise ValueError(f"duplicate edge between {u} and {a}")
        self.node_count = node_count
        self.edge_count = m
        self.total_weight = total
        self.neighbors = nbrs
        self.edge_weights = wts
        self.weighted_degrees = [math.fsum(w) for w in wts]

    @classmethod
    def from_pairs(cls, node_count: int, pairs: Iterable[tuple[int, int]],
                   weight: float = 1.0) -> "Graph":
        return cls(node_count, ((u, v, weight) for u, v in pairs))

    def degree(self, u: int) -> int:
        return len(self.neighbors[u])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors[u]
        i = bisect_left(nb, v)
        return i < len(nb) and nb[i] == v

    def weight(self, u: int, v: int) -> float:
        """Weight of edge {u, v}, or 0.0 if absent."""
        nb = self.neighbors[u]
        i = bisect_left(nb, v)
        if i < len(nb) and nb[i] == v:
            return self.edge_weights[u][i]
        return 0.0

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """All edges as (u, v, weight) with u < v, in lexicographic order."""
        for u in range(self.node_count):
            nb = self.neighbors[u]
            wt = self.edge_weights[u]
            for i in range(len(nb)):
                if nb[i] > u:
                    yield u, nb[i], wt[i]

    def edge_pairs(self) -> Iterator[tuple[int, int]]:
        for u, v, _ in self.edges():
            yield u, v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.node_count == other.node_count
                and self.neighbors == other.neighbors
                and self.edge_weights == other.edge_weights)

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={self.edge_count})"


class LabelMap:
    """Bidirectional map between external node tokens and dense ids."""

    def __init__(self, labels: Sequence[str]):
        self.labels = list(labels)
        self._ids = {tok: i for i, tok in enumerate(self.labels)}
        if len(self._ids) != len(self.labels):
            raise ValueError("duplicate external labels")

    def label_of(self, node: int) -> str:
        return self.labels[node]

    def id_of(self, token: str) -> int:
        return self._ids[token]

    def __contains__(self, token: str) -> bool:
        return token in self._ids

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabelMap):
            return NotImplemented
        return self.labels == other.labels


def _read_text(source: str | bytes | IO) -> str:
    if hasattr(source, "read"):
        source = source.read()  # type: ignore[union-attr]
    if isinstance(source, bytes):
        return source.decode("utf-8")
    return source  # type: ignore[return-value]


def parse_edge_list(source: str | bytes | IO, *, weighted: bool = False,
                    delimiter: str | None = None,
                    comment_prefixes: tuple[str, ...] = COMMENT_PREFIXES,
                    ) -> tuple[Graph, LabelMap]:
    """Parse a whitespace-delimited edge list into a canonical Graph.

    One edge per line, ``u v`` (or ``u v w`` when ``weighted``); external ids
    are arbitrary tokens mapped to dense ids in first-appearance order. Lines
    starting with a comment prefix are skipped. Canonicalization: self-loops
    are dropped (their endpoints still become nodes), duplicate unweighted
    edges collapse to weight 1, duplicate weighted edges sum. Directed input
    is thereby symmetrized.

    Raises EdgeListError, with the offending line number, for wrong field
    counts or bad weights, and for input containing no data lines at all.
    """
    text = _read_text(source)
    expected = 3 if weighted else 2
    ids: dict[str, int] = {}
    acc: dict[tuple[int, int], float] = {}
    saw_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(comment_prefixes):
            continue
        parts = line.split(delimiter)
        if len(parts) != expected:
            raise EdgeListError(
                f"line {lineno}: expected {expected} fields, got {len(parts)}: {raw!r}")
        saw_data = True
        if weighted:
            try:
                w = float(parts[2])
            except ValueError:
                raise EdgeListError(
                    f"line {lineno}: weight is not a number: {parts[2]!r}") from None
            if not math.isfinite(w) or w <= 0:
                raise EdgeListError(
                    f"line {lineno}: weight must be positive and finite: {parts[2]!r}")
        else:
            w = 1.0
        u = ids.setdefault(parts[0], len(ids))
        v = ids.setdefault(parts[1], len(ids))
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if weighted:
            acc[key] = acc.get(key, 0.0) + w
        else:
            acc[key] = 1.0
    if not saw_data:
        raise EdgeListError("no edges found in input")
    g = Graph(len(ids), ((u, v, w) for (u, v), w in sorted(acc.items())))
    return g, LabelMap(list(ids))


def write_edge_list(g: Graph, label_map: LabelMap | None = None, *,
                    weighted: bool = False) -> str:
    """Serialize edges as text, one ``u v [w]`` line per edge, u-side sorted.

    Round-trips through :func:`parse_edge_list` (isolated nodes cannot be
    represented in this format and are dropped).
    """
    def name(u: int) -> str:
        return label_map.label_of(u) if label_map is not None else str(u)

    lines = []
    for u, v, w in g.edges():
        if weighted:
            ws = str(int(w)) if w.is_integer() else repr(w)
            lines.append(f"{name(u)} {name(v)} {ws}")
        else:
            lines.append(f"{name(u)} {name(v)}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_label_file(source: str | bytes | IO, *,
                     comment_prefixes: tuple[str, ...] = COMMENT_PREFIXES,
                     ) -> dict[str, str]:
    """Parse ground-truth labels: one ``node_id community_label`` pair per line."""
    text = _read_text(source)
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(comment_prefixes):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(
                f"line {lineno}: expected 2 fields, got {len(parts)}: {raw!r}")
        if parts[0] in out:
            raise EdgeListError(f"line {lineno}: duplicate label for node {parts[0]!r}")
        out[parts[0]] = parts[1]
    if not out:
        raise EdgeListError("no labels found in input")
    return out


def connected_node_sets(g: Graph) -> list[set[int]]:
    """Connected components as node sets, discovered in ascending id order."""
    seen = bytearray(g.node_count)
    out: list[set[int]] = []
    for start in range(g.node_count):
        if seen[start]:
            continue
        seen[start] = 1
        comp = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.neighbors[u]:
                    if not seen[v]:
                        seen[v] = 1
                        comp.add(v)
                        nxt.append(v)
            frontier = nxt
        out.append(comp)
    return out


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``nodes`` with re-densified ids.

    Returns the subgraph and a map ``new_id -> old_id`` (new ids follow the
    sorted order of the kept old ids).
    """
    keep = sorted(set(nodes))
    if keep and not (0 <= keep[0] and keep[-1] < g.node_count):
        raise ValueError("node ids out of range for induced subgraph")
    pos = {old: new for new, old in enumerate(keep)}
    edges = []
    for new_u, old_u in enumerate(keep):
        nb = g.neighbors[old_u]
        wt = g.edge_weights[old_u]
        for i in range(len(nb)):
            old_v = nb[i]
            if old_v > old_u and old_v in pos:
                edges.append((new_u, pos[old_v], wt[i]))
    return Graph(len(keep), edges), keep


def largest_connected_component(g: Graph) -> tuple[Graph, list[int]]:
    """Induced subgraph on the largest component, plus a new->old id map.

    Ties on component size break toward the component containing the
    smallest node id. A connected graph is returned as-is with the
    identity map.
    """
    if g.node_count == 0:
        raise ValueError("cannot extract a component from an empty graph")
    comps = connected_node_sets(g)
    best = min(comps, key=lambda c: (-len(c), min(c)))
    if len(best) == g.node_count:
        return g, list(range(g.node_count))
    return induced_subgraph(g, best)


def graph_stats(g: Graph) -> dict:
    """Basic size statistics: n, m, total weight, degree summary."""
    degs = [len(nb) for nb in g.neighbors]
    n = g.node_count
    return {
        "n": n,
        "m": g.edge_count,
        "total_weight": g.total_weight,
        "degrees": {
            "min": min(degs, default=0),
            "max": max(degs, default=0),
            "mean": (sum(degs) / n) if n else 0.0,
        },
    }
