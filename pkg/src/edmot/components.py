"""Connected components and isolated nodes of the motif hypergraph."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, connected_node_sets


@dataclass(frozen=True)
class ComponentSet:
    """Hypergraph components (each with >= 2 nodes) plus the isolated nodes.

    Components are sorted by node count descending, ties broken by smallest
    member id; together with ``isolated`` they partition the node set.
    """
    components: tuple[frozenset[int], ...]
    isolated: frozenset[int]

    @property
    def component_count(self) -> int:
        return len(self.components)


def connected_components(h: Graph) -> ComponentSet:
    """Split a weighted graph into sorted components and isolated nodes."""
    comps = []
    isolated = set()
    for nodes in connected_node_sets(h):
        if len(nodes) >= 2:
            comps.append(frozenset(nodes))
        else:
            isolated.update(nodes)
    comps.sort(key=lambda c: (-len(c), min(c)))
    return ComponentSet(components=tuple(comps), isolated=frozenset(isolated))


def top_k_components(cs: ComponentSet, k: int) -> list[set[int]]:
    """First min(k, component_count) components under the deterministic sort."""
    if k < 1:
        raise ValueError(f"K must be at least 1, got {k}")
    return [set(c) for c in cs.components[:k]]


def fragmentation_report(g: Graph, h: Graph) -> dict:
    """Quantify how far the hypergraph ``h`` fragments the network ``g``.

    Reports the component count, a size histogram, and how many nodes lost
    every higher-order connection.
    """
    if g.node_count != h.node_count:
        raise ValueError(
            f"node-set mismatch: graph has {g.node_count} nodes, "
            f"hypergraph has {h.node_count}")
    cs = connected_components(h)
    sizes = [len(c) for c in cs.components]
    histogram: dict[int, int] = {}
    for s in sizes:
        histogram[s] = histogram.get(s, 0) + 1
    n = g.node_count
    iso = len(cs.isolated)
    return {
        "node_count": n,
        "component_count": cs.component_count,
        "component_size_histogram": dict(sorted(histogram.items(), reverse=True)),
        "largest_component_size": sizes[0] if sizes else 0,
        "isolated_count": iso,
        "isolated_fraction": (iso / n) if n else 0.0,
    }
