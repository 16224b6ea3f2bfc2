"""Fixtures, notably dataset loading that skips when files are absent.

Real benchmark networks are not bundled; run scripts/fetch_datasets.py (needs
network access) to populate data/, or point EDMOT_DATA_DIR elsewhere.
"""

from __future__ import annotations

import os
from pathlib import Path

import pytest

from edmot.graph import largest_connected_component, parse_edge_list, parse_label_file
from edmot.partition import Partition

REPO_ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = Path(os.environ.get("EDMOT_DATA_DIR", REPO_ROOT / "data"))


def dataset_paths(name: str, labeled: bool = True) -> tuple[Path, Path | None]:
    edges = DATA_DIR / f"{name}.edges"
    labels = DATA_DIR / f"{name}.labels"
    if not edges.is_file() or (labeled and not labels.is_file()):
        pytest.skip(f"dataset {name!r} not available under {DATA_DIR}; "
                    f"run scripts/fetch_datasets.py first")
    return edges, labels if labeled else None


@pytest.fixture(scope="session")
def load_dataset():
    """Session-cached loader: name -> (lcc_graph, external_ids, truth|None)."""
    cache: dict = {}

    def _load(name: str, labeled: bool = True):
        key = (name, labeled)
        if key not in cache:
            edges_path, labels_path = dataset_paths(name, labeled)
            g, lm = parse_edge_list(edges_path.read_bytes())
            g, keep = largest_connected_component(g)
            ext = [lm.labels[old] for old in keep]
            truth = None
            if labels_path is not None:
                mapping = parse_label_file(labels_path.read_text())
                missing = [tok for tok in ext if tok not in mapping]
                assert not missing, f"{len(missing)} unlabeled nodes in {name}"
                truth = Partition.from_labels(mapping[tok] for tok in ext)
            cache[key] = (g, ext, truth)
        return cache[key]

    return _load


@pytest.fixture(scope="session")
def load_raw_dataset():
    """Like load_dataset but without largest-component extraction."""
    cache: dict = {}

    def _load(name: str):
        if name not in cache:
            edges_path, _ = dataset_paths(name, labeled=False)
            cache[name] = parse_edge_list(edges_path.read_bytes())
        return cache[name]

    return _load
