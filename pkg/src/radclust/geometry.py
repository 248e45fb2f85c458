"""Point containers, Euclidean distance, and radius-graph adjacency.

Two nodes are adjacent when their Euclidean distance is strictly below the
clustering radius ``r``.  The boundary is exact: no tolerance band is applied,
so a pair at distance exactly ``r`` is not adjacent.  Every node is adjacent
to itself (distance 0), which puts an all-ones diagonal on the adjacency
matrix; powers of such a matrix then encode "reachable within that many hops
or fewer", the property the labeling step depends on.

Dimension is arbitrary (>= 1) and must be uniform within a point set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .matpower import BinaryMatrix

__all__ = [
    "NodeId",
    "Point",
    "PointSet",
    "ClusteringConfig",
    "euclidean_distance",
    "build_adjacency",
]

NodeId = Union[int, str]


@dataclass(frozen=True)
class Point:
    """A labeled point in d-dimensional space.

    The id is the node's identity, stable across trajectory frames.
    Coordinates are stored as a read-only float64 vector.
    """

    id: NodeId
    coords: np.ndarray

    def __post_init__(self) -> None:
        coords = np.array(self.coords, dtype=np.float64)
        if coords.ndim != 1 or coords.size == 0:
            raise ValueError(
                f"point {self.id!r}: coords must be a non-empty 1-d sequence"
            )
        if not np.all(np.isfinite(coords)):
            raise ValueError(f"point {self.id!r}: coordinates must be finite")
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    @property
    def dimension(self) -> int:
        return self.coords.size


class PointSet:
    """An ordered collection of uniquely labeled points of one dimension.

    The point order is the canonical node index order: row/column ``i`` of the
    adjacency matrix, entry ``i`` of the label vector, and row ``i`` of any
    report all refer to ``points[i]``.
    """

    __slots__ = ("_points", "ids", "coords")

    def __init__(self, points: Iterable[Point]) -> None:
        pts = tuple(points)
        if not pts:
            raise ValueError("a point set needs at least one point")
        d = pts[0].dimension
        for p in pts:
            if p.dimension != d:
                raise ValueError(
                    f"point {p.id!r} has dimension {p.dimension}, expected {d}"
                )
        ids = tuple(p.id for p in pts)
        seen = set()
        for i in ids:
            if i in seen:
                raise ValueError(f"duplicate point id {i!r}")
            seen.add(i)
        coords = np.vstack([p.coords for p in pts])
        coords.setflags(write=False)
        self._points = pts
        self.ids = ids
        self.coords = coords

    @classmethod
    def from_coords(
        cls, coords, ids: Sequence[NodeId] | None = None
    ) -> "PointSet":
        """Build a set from an (N, d) coordinate array; ids default to 0..N-1."""
        arr = np.asarray(coords, dtype=np.float64)
        if arr.ndim != 2:
            raise ValueError(f"coords must be 2-d (N, d), got shape {arr.shape}")
        if ids is None:
            ids = range(arr.shape[0])
        return cls(Point(i, row) for i, row in zip(ids, arr, strict=True))

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    @property
    def dimension(self) -> int:
        return self.coords.shape[1]

    def __len__(self) -> int:
        return self.coords.shape[0]

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __getitem__(self, i: int) -> Point:
        return self._points[i]

    def __repr__(self) -> str:
        return f"PointSet(n={len(self)}, d={self.dimension})"


@dataclass(frozen=True)
class ClusteringConfig:
    """Clustering parameters: the neighbor-search radius ``r``."""

    radius: float

    def __post_init__(self) -> None:
        r = float(self.radius)
        if not np.isfinite(r) or r <= 0.0:
            raise ValueError(f"radius must be positive and finite, got {self.radius}")
        object.__setattr__(self, "radius", r)


def euclidean_distance(a: Point, b: Point) -> float:
    """Euclidean distance between two points of equal dimension."""
    if a.dimension != b.dimension:
        raise ValueError(
            f"dimension mismatch: {a.dimension} vs {b.dimension}"
        )
    return float(np.sqrt(((a.coords - b.coords) ** 2).sum()))


def build_adjacency(ps: PointSet, cfg: ClusteringConfig) -> BinaryMatrix:
    """N x N adjacency: entry (i, j) is 1 iff distance(p_i, p_j) < r.

    Symmetric by construction, diagonal all ones (0 < r always holds).
    """
    diff = ps.coords[:, None, :] - ps.coords[None, :, :]
    dist = np.sqrt((diff**2).sum(axis=-1))
    return BinaryMatrix(dist < cfg.radius)
