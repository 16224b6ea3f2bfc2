"""Shared test helpers: random-graph builders and independent oracles.

The oracles here are deliberately naive (triple scans, exhaustive set
partitions, O(n^2) pair enumeration) so they share no code path with the
implementations they check.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from itertools import combinations

from edmot.graph import Graph
from edmot.partition import Partition, modularity


def graph_from_pairs(n, pairs, weights=None) -> Graph:
    if weights is None:
        return Graph.from_pairs(n, pairs)
    return Graph(n, ((u, v, w) for (u, v), w in zip(pairs, weights)))


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Bernoulli random graph; fine for small n."""
    pairs = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_pairs(n, pairs)


def gnm(n: int, m: int, rng: random.Random) -> Graph:
    """Uniform random graph with exactly m distinct edges."""
    if m > n * (n - 1) // 2:
        raise ValueError("too many edges requested")
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            chosen.add((u, v) if u < v else (v, u))
    return Graph.from_pairs(n, sorted(chosen))


def triangle_triples_scan(g: Graph) -> set[tuple[int, int, int]]:
    """Independent triangle listing by checking every node triple."""
    nbr = [set(ns) for ns in g.neighbors]
    return {(a, b, c) for a, b, c in combinations(range(g.node_count), 3)
            if b in nbr[a] and c in nbr[a] and c in nbr[b]}


def pair_weight_map(g: Graph) -> dict[tuple[int, int], float]:
    return {(u, v): w for u, v, w in g.edges()}


def set_partitions(n: int):
    """All set partitions of range(n) as label tuples (restricted growth)."""
    if n == 0:
        yield ()
        return
    labels = [0] * n

    def rec(i: int, width: int):
        if i == n:
            yield tuple(labels)
            return
        for lab in range(width + 1):
            labels[i] = lab
            yield from rec(i + 1, width if lab < width else width + 1)

    yield from rec(0, 0)


def best_partition_bruteforce(g: Graph) -> tuple[float, tuple[int, ...]]:
    """Exhaustive-search modularity optimum; only viable for n <= ~9."""
    best_q = -math.inf
    best = None
    for labels in set_partitions(g.node_count):
        q = modularity(g, Partition(labels))
        if q > best_q:
            best_q = q
            best = labels
    assert best is not None
    return best_q, best


def nmi_reference(p: Partition, truth: Partition) -> float:
    """Direct contingency-table NMI with arithmetic-mean normalization."""
    n = len(p.assignment)
    joint = Counter(zip(p.assignment, truth.assignment))
    pa = Counter(p.assignment)
    pb = Counter(truth.assignment)
    hp = -sum(c / n * math.log(c / n) for c in pa.values())
    ht = -sum(c / n * math.log(c / n) for c in pb.values())
    if hp == 0.0 and ht == 0.0:
        return 1.0
    mi = 0.0
    for (a, b), c in joint.items():
        mi += (c / n) * math.log((c * n) / (pa[a] * pb[b]))
    if mi <= 0.0:
        return 0.0
    return 2.0 * mi / (hp + ht)


def f_score_reference(p: Partition, truth: Partition) -> float:
    """Pairwise F by explicit O(n^2) enumeration of node pairs."""
    n = len(p.assignment)
    tp = pred = true = 0
    for u, v in combinations(range(n), 2):
        same_p = p.assignment[u] == p.assignment[v]
        same_t = truth.assignment[u] == truth.assignment[v]
        pred += same_p
        true += same_t
        tp += same_p and same_t
    if tp == 0 or pred == 0 or true == 0:
        return 0.0
    precision = tp / pred
    recall = tp / true
    return 2 * precision * recall / (precision + recall)


def communities_of(p: Partition) -> set[frozenset[int]]:
    """Partition as a labeling-independent set of node sets."""
    return {frozenset(c) for c in p.communities()}
