"""File formats: point and trajectory CSV, JSON reports, lat/lon projection.

Point CSV: header ``id,x,y[,z...]``, one row per node, at least one
coordinate column.  Trajectory CSV: header ``t,id,x,y[,...]``, rows grouped
by non-decreasing timestamp; every timestamp group must contain the same ids.

The id column is parsed as integers when every value in the file is an
integer literal, otherwise all ids stay strings; the column-level rule keeps
ids mutually comparable for deterministic event ordering.

All output is UTF-8 with LF line endings and fixed key order, so identical
inputs produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
import math
import re
from typing import Sequence

import numpy as np

from .clustering import ClusterTable, LabelVector, cluster_color_names
from .geometry import Point, PointSet
from .trajectory import ClusterEvent, Frame

__all__ = [
    "read_points_csv",
    "write_points_csv",
    "read_trajectory_csv",
    "write_trajectory_csv",
    "project_equirect",
    "cluster_payload",
    "frames_payload",
    "events_payload",
    "write_json",
    "EARTH_RADIUS_M",
]

EARTH_RADIUS_M = 6371000.0

_INT_RE = re.compile(r"[+-]?\d+\Z")


def _parse_ids(raw_ids: list[str]) -> list:
    if all(_INT_RE.match(token) for token in raw_ids):
        return [int(token) for token in raw_ids]
    return list(raw_ids)


def _parse_float(token: str, path: str, line_no: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ValueError(
            f"{path}: line {line_no}: invalid {what} {token!r}"
        ) from None
    if not math.isfinite(value):
        raise ValueError(f"{path}: line {line_no}: non-finite {what} {token!r}")
    return value


def _read_rows(path: str) -> list[tuple[int, list[str]]]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return [
            (line_no, row)
            for line_no, row in enumerate(csv.reader(fh), start=1)
            if row  # skip blank lines
        ]


def _coord_names(d: int) -> list[str]:
    names = ["x", "y", "z"]
    return [names[i] if i < 3 else f"c{i}" for i in range(d)]


def read_points_csv(path: str) -> PointSet:
    """Read a point CSV into a :class:`PointSet` (row order preserved)."""
    rows = _read_rows(path)
    if not rows:
        raise ValueError(f"{path}: empty file")
    header_no, header = rows[0]
    if len(header) < 2 or header[0].strip().lower() != "id":
        raise ValueError(
            f"{path}: line {header_no}: header must be id,<coord>,... "
            f"got {','.join(header)!r}"
        )
    width = len(header)
    raw_ids: list[str] = []
    coords: list[list[float]] = []
    for line_no, row in rows[1:]:
        if len(row) != width:
            raise ValueError(
                f"{path}: line {line_no}: expected {width} fields, got {len(row)}"
            )
        raw_ids.append(row[0].strip())
        coords.append(
            [_parse_float(tok, path, line_no, "coordinate") for tok in row[1:]]
        )
    if not raw_ids:
        raise ValueError(f"{path}: no data rows")
    try:
        return PointSet(
            Point(i, np.array(c)) for i, c in zip(_parse_ids(raw_ids), coords)
        )
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def write_points_csv(ps: PointSet, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("id," + ",".join(_coord_names(ps.dimension)) + "\n")
        for point in ps:
            values = ",".join(repr(float(v)) for v in point.coords)
            fh.write(f"{point.id},{values}\n")


def read_trajectory_csv(path: str) -> list[Frame]:
    """Read a trajectory CSV into time-ordered frames."""
    rows = _read_rows(path)
    if not rows:
        raise ValueError(f"{path}: empty file")
    header_no, header = rows[0]
    if (
        len(header) < 3
        or header[0].strip().lower() != "t"
        or header[1].strip().lower() != "id"
    ):
        raise ValueError(
            f"{path}: line {header_no}: header must be t,id,<coord>,... "
            f"got {','.join(header)!r}"
        )
    width = len(header)
    # (t, raw id, coords) per row, grouped into frames afterwards
    parsed: list[tuple[float, str, list[float]]] = []
    prev_t = None
    for line_no, row in rows[1:]:
        if len(row) != width:
            raise ValueError(
                f"{path}: line {line_no}: expected {width} fields, got {len(row)}"
            )
        t = _parse_float(row[0], path, line_no, "timestamp")
        if prev_t is not None and t < prev_t:
            raise ValueError(
                f"{path}: line {line_no}: timestamp {t} decreases "
                f"(previous was {prev_t})"
            )
        prev_t = t
        parsed.append(
            (
                t,
                row[1].strip(),
                [_parse_float(tok, path, line_no, "coordinate") for tok in row[2:]],
            )
        )
    if not parsed:
        raise ValueError(f"{path}: no data rows")
    ids = _parse_ids([raw for _, raw, _ in parsed])
    frames: list[Frame] = []
    group: list[Point] = []
    group_t = parsed[0][0]
    for (t, _, coords), node_id in zip(parsed, ids):
        if t != group_t:
            frames.append(_make_frame(group_t, group, path))
            group, group_t = [], t
        group.append(Point(node_id, np.array(coords)))
    frames.append(_make_frame(group_t, group, path))
    return frames


def _make_frame(t: float, points: list[Point], path: str) -> Frame:
    try:
        return Frame(t=t, points=PointSet(points))
    except ValueError as exc:
        raise ValueError(f"{path}: frame t={t}: {exc}") from None


def write_trajectory_csv(frames: Sequence[Frame], path: str) -> None:
    if not frames:
        raise ValueError("a trajectory needs at least one frame")
    d = frames[0].points.dimension
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("t,id," + ",".join(_coord_names(d)) + "\n")
        for frame in frames:
            for point in frame.points:
                values = ",".join(repr(float(v)) for v in point.coords)
                fh.write(f"{repr(float(frame.t))},{point.id},{values}\n")


def project_equirect(frames: Sequence[Frame]) -> list[Frame]:
    """Convert (lat, lon) degrees to planar meters about the first frame's centroid.

    Equirectangular approximation: good over the few kilometers a moving
    group spans; callers needing geodesic accuracy should pre-project.
    """
    if not frames:
        raise ValueError("a trajectory needs at least one frame")
    if frames[0].points.dimension != 2:
        raise ValueError(
            "equirectangular projection needs exactly 2 coordinate columns (lat, lon)"
        )
    lat0, lon0 = frames[0].points.coords.mean(axis=0)
    cos_lat0 = math.cos(math.radians(lat0))
    projected = []
    for frame in frames:
        lat = frame.points.coords[:, 0]
        lon = frame.points.coords[:, 1]
        x = EARTH_RADIUS_M * np.radians(lon - lon0) * cos_lat0
        y = EARTH_RADIUS_M * np.radians(lat - lat0)
        points = [
            Point(i, np.array([xi, yi]))
            for i, xi, yi in zip(frame.points.ids, x, y)
        ]
        projected.append(Frame(t=frame.t, points=PointSet(points)))
    return projected


def _cluster_records(table: ClusterTable) -> list[dict]:
    colors = cluster_color_names(table)
    return [
        {
            "label": int(label),
            "size": int(table.frequencies[label]),
            "rank": rank,
            "color": colors[label],
        }
        for rank, label in enumerate(table.ranking, start=1)
    ]


def cluster_payload(radius: float, lv: LabelVector, table: ClusterTable) -> dict:
    """The labels JSON document: per-node labels plus the size-ranked clusters."""
    return {
        "radius": float(radius),
        "n": len(lv),
        "labels": [int(v) for v in lv.labels],
        "clusters": _cluster_records(table),
    }


def frames_payload(
    radius: float,
    frames: Sequence[Frame],
    results: Sequence[tuple[LabelVector, ClusterTable]],
) -> dict:
    per_frame = [
        {
            "t": float(frame.t),
            "ids": list(frame.points.ids),
            "labels": [int(v) for v in lv.labels],
            "clusters": _cluster_records(table),
        }
        for frame, (lv, table) in zip(frames, results)
    ]
    return {"radius": float(radius), "n_frames": len(per_frame), "frames": per_frame}


def events_payload(events: Sequence[ClusterEvent]) -> list[dict]:
    return [
        {
            "t": float(e.t),
            "kind": e.kind,
            "parents": list(e.parents),
            "children": list(e.children),
            "member_ids": list(e.member_ids),
        }
        for e in events
    ]


def write_json(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(obj, indent=2))
        fh.write("\n")
