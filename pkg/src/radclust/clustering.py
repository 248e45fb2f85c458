"""Mask-based cluster labeling and size-ranked cluster tables.

Labeling walks the node indices once.  Each still-unlabeled node becomes the
seed of a fresh cluster and its row of the power matrix becomes the mask; any
later unlabeled node whose own row shares at least one set bit with the mask
joins the cluster.  Because the power matrix covers at least ``floor(n / 2)``
hops, two nodes of the same radius-graph component always see each other
through a common mid-path node, and nodes of different components never
overlap, so the produced partition is exactly the connected components.

Label numbers are dense, starting at 1, in order of each cluster's
lowest-index node.  ``connected_components_oracle`` computes the same
partition by plain graph traversal and serves as independent ground truth.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .geometry import ClusteringConfig, PointSet, build_adjacency
from .matpower import BinaryMatrix, power_fast

__all__ = [
    "LabelVector",
    "ClusterTable",
    "cluster_labels",
    "connected_components_oracle",
    "build_cluster_table",
    "cluster_pointset",
    "cluster_color_names",
    "RANK_COLOR_NAMES",
    "EXTRA_COLOR_NAMES",
]

# Ranks 1-3 are fixed; further clusters cycle through the extra palette.
RANK_COLOR_NAMES = ("red", "green", "blue")
EXTRA_COLOR_NAMES = (
    "orange",
    "purple",
    "brown",
    "deeppink",
    "teal",
    "olive",
    "navy",
    "maroon",
    "darkcyan",
    "goldenrod",
)


@dataclass(frozen=True, eq=False)
class LabelVector:
    """Per-node cluster labels: entry i is the 1-based label of node i.

    Labels of a finished run form the contiguous range 1..C; 0 exists only as
    the transient "unassigned" state inside the algorithms.
    """

    labels: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.labels, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("labels must be a non-empty 1-d sequence")
        top = int(arr.max(initial=0))
        if arr.min(initial=1) < 1 or not np.array_equal(
            np.unique(arr), np.arange(1, top + 1)
        ):
            raise ValueError("labels must cover the contiguous range 1..C")
        arr.setflags(write=False)
        object.__setattr__(self, "labels", arr)

    @property
    def n_clusters(self) -> int:
        return int(self.labels.max())

    def __len__(self) -> int:
        return self.labels.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelVector):
            return NotImplemented
        return np.array_equal(self.labels, other.labels)

    __hash__ = None

    def __repr__(self) -> str:
        return f"LabelVector(n={len(self)}, clusters={self.n_clusters})"


@dataclass(frozen=True)
class ClusterTable:
    """Cluster sizes and the size ranking.

    ``frequencies`` maps label -> node count.  ``ranking`` lists labels by
    descending size, ties broken by ascending label.  ``color_ranks`` tags the
    top three labels with ranks 1 (red), 2 (green), 3 (blue).
    """

    frequencies: dict[int, int]
    ranking: tuple[int, ...] = field(default=())
    color_ranks: dict[int, int] = field(default_factory=dict)

    @property
    def sizes_ranked(self) -> tuple[int, ...]:
        return tuple(self.frequencies[c] for c in self.ranking)


def cluster_labels(g: BinaryMatrix) -> LabelVector:
    """Assign cluster labels from the (binarized) power matrix ``g``.

    Scans nodes in index order; an unlabeled node i opens cluster c, its row
    becomes the mask, and every unlabeled node j > i whose row ANDs with the
    mask to a non-zero vector gets label c.  Nodes j < i are already labeled
    by the time i is an unlabeled seed, so the forward scan drops nothing.
    """
    bits = g.bits
    if not bits.any(axis=1).all():
        raise ValueError("power matrix has an all-zero row")
    n = g.n
    labels = np.zeros(n, dtype=np.int64)
    c = 0
    for i in range(n):
        if labels[i] != 0:
            continue
        c += 1
        labels[i] = c
        mask = bits[i]
        open_js = np.flatnonzero(labels[i + 1 :] == 0) + (i + 1)
        if open_js.size:
            hits = (bits[open_js] & mask).any(axis=1)
            labels[open_js[hits]] = c
    # Every index is either a seed or labeled by an earlier seed.
    assert not (labels == 0).any(), "unlabeled node survived the scan"
    return LabelVector(labels)


def connected_components_oracle(a: BinaryMatrix) -> LabelVector:
    """Connected components of the adjacency graph, by breadth-first search.

    Independent of the matrix-power path; uses the same numbering convention
    (the component of the lowest-index unlabeled node gets the next label).
    """
    bits = a.bits
    if not np.array_equal(bits, bits.T):
        raise ValueError("adjacency matrix must be symmetric")
    n = a.n
    labels = np.zeros(n, dtype=np.int64)
    c = 0
    for start in range(n):
        if labels[start] != 0:
            continue
        c += 1
        labels[start] = c
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in np.flatnonzero(bits[v]):
                if labels[w] == 0:
                    labels[w] = c
                    queue.append(int(w))
    return LabelVector(labels)


def build_cluster_table(lv: LabelVector) -> ClusterTable:
    """Count nodes per label and rank clusters by descending size."""
    counts = np.bincount(lv.labels, minlength=lv.n_clusters + 1)[1:]
    frequencies = {c + 1: int(f) for c, f in enumerate(counts)}
    ranking = tuple(sorted(frequencies, key=lambda c: (-frequencies[c], c)))
    color_ranks = {c: rank for rank, c in enumerate(ranking[:3], start=1)}
    return ClusterTable(
        frequencies=frequencies, ranking=ranking, color_ranks=color_ranks
    )


def cluster_pointset(
    ps: PointSet, cfg: ClusteringConfig
) -> tuple[LabelVector, ClusterTable]:
    """Full pipeline: adjacency -> matrix power -> labels -> cluster table.

    The semiring power is already 0/1, so no separate binarize pass is needed.
    Deterministic in the input order.
    """
    adjacency = build_adjacency(ps, cfg)
    g, _ = power_fast(adjacency)
    lv = cluster_labels(g)
    return lv, build_cluster_table(lv)


def cluster_color_names(table: ClusterTable) -> dict[int, str]:
    """Map every label to its display color name.

    Ranks 1-3 are red, green, blue; later ranks cycle the extra palette.
    """
    colors: dict[int, str] = {}
    for rank, label in enumerate(table.ranking, start=1):
        if rank <= len(RANK_COLOR_NAMES):
            colors[label] = RANK_COLOR_NAMES[rank - 1]
        else:
            colors[label] = EXTRA_COLOR_NAMES[
                (rank - len(RANK_COLOR_NAMES) - 1) % len(EXTRA_COLOR_NAMES)
            ]
    return colors
