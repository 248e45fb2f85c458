import math

import numpy as np
import pytest

from radclust.geometry import (
    ClusteringConfig,
    Point,
    PointSet,
    build_adjacency,
    euclidean_distance,
)

from helpers import pairwise_adjacency


def test_distance_3_4_5_triangle():
    assert euclidean_distance(Point(0, (0.0, 0.0)), Point(1, (3.0, 4.0))) == 5.0


def test_distance_of_point_to_itself_is_zero():
    p = Point("a", (1.25, -7.5, 3.0))
    assert euclidean_distance(p, p) == 0.0


def test_distance_single_differing_axis():
    a = Point(0, (1.0, 2.0, 3.0))
    b = Point(1, (1.0, 2.0, 3.5))
    assert euclidean_distance(a, b) == pytest.approx(0.5, abs=0.0)


def test_distance_rejects_dimension_mismatch():
    with pytest.raises(ValueError):
        euclidean_distance(Point(0, (0.0, 0.0)), Point(1, (0.0, 0.0, 0.0)))


def test_point_rejects_bad_coords():
    with pytest.raises(ValueError):
        Point(0, ())
    with pytest.raises(ValueError):
        Point(0, (1.0, float("nan")))
    with pytest.raises(ValueError):
        Point(0, (float("inf"),))


def test_point_coords_are_read_only():
    p = Point(0, (1.0, 2.0))
    with pytest.raises(ValueError):
        p.coords[0] = 9.0


def test_pointset_from_coords_assigns_sequential_ids():
    ps = PointSet.from_coords([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]])
    assert ps.ids == (0, 1, 2)
    assert len(ps) == 3
    assert ps.dimension == 2


def test_pointset_rejects_duplicate_ids():
    with pytest.raises(ValueError):
        PointSet([Point(3, (0.0, 0.0)), Point(3, (1.0, 0.0))])


def test_pointset_rejects_mixed_dimensions():
    with pytest.raises(ValueError):
        PointSet([Point(0, (0.0, 0.0)), Point(1, (1.0, 0.0, 0.0))])


def test_pointset_rejects_empty():
    with pytest.raises(ValueError):
        PointSet([])


@pytest.mark.parametrize("radius", [0.0, -1.0, float("inf"), float("nan")])
def test_config_rejects_non_positive_or_non_finite_radius(radius):
    with pytest.raises(ValueError):
        ClusteringConfig(radius=radius)


def test_chain_adjacency_is_tridiagonal():
    # Seven collinear points at unit spacing: radius 1.5 reaches exactly the
    # immediate neighbours on each side.
    coords = [[float(i), 0.0] for i in range(7)]
    ps = PointSet.from_coords(coords)
    adj = build_adjacency(ps, ClusteringConfig(radius=1.5))
    expected = np.zeros((7, 7), dtype=bool)
    for i in range(7):
        for j in range(7):
            expected[i, j] = abs(i - j) <= 1
    assert np.array_equal(adj.to_array(), expected)


def test_adjacency_matches_pairwise_oracle():
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = int(rng.integers(2, 40))
        coords = rng.random((n, 2)) * 3.0
        radius = float(rng.uniform(0.1, 1.5))
        ps = PointSet.from_coords(coords)
        got = build_adjacency(ps, ClusteringConfig(radius=radius)).to_array()
        assert np.array_equal(got, pairwise_adjacency(coords, radius))


def test_single_point_adjacency():
    ps = PointSet.from_coords([[4.0, -2.0]])
    adj = build_adjacency(ps, ClusteringConfig(radius=0.001))
    assert np.array_equal(adj.to_array(), [[True]])


def test_distance_exactly_at_radius_is_not_adjacent():
    # The threshold is strict: d < r, so d == r stays disconnected.
    ps = PointSet.from_coords([[0.0, 0.0], [1.5, 0.0]])
    adj = build_adjacency(ps, ClusteringConfig(radius=1.5)).to_array()
    assert not adj[0, 1] and not adj[1, 0]
    assert adj[0, 0] and adj[1, 1]
    # 3-4-5 again, at the boundary.
    ps = PointSet.from_coords([[0.0, 0.0], [3.0, 4.0]])
    adj = build_adjacency(ps, ClusteringConfig(radius=5.0)).to_array()
    assert not adj[0, 1]


def test_adjacency_symmetric_with_unit_diagonal():
    rng = np.random.default_rng(123)
    for seed in range(10):
        coords = np.random.default_rng(seed).random((25, 3))
        ps = PointSet.from_coords(coords)
        bits = build_adjacency(ps, ClusteringConfig(radius=0.4)).to_array()
        assert np.array_equal(bits, bits.T)
        assert bits.diagonal().all()
    del rng


def test_adjacency_monotonic_in_radius():
    coords = np.random.default_rng(5).random((30, 2))
    ps = PointSet.from_coords(coords)
    small = build_adjacency(ps, ClusteringConfig(radius=0.2)).to_array()
    large = build_adjacency(ps, ClusteringConfig(radius=0.5)).to_array()
    assert not (small & ~large).any()


def test_adjacency_invariant_under_rigid_motion():
    rng = np.random.default_rng(99)
    radius = 0.3
    for _ in range(10):
        coords = rng.random((20, 2))
        # Skip configurations with a pair sitting numerically on the
        # threshold; rotation can legitimately flip those.
        diffs = coords[:, None, :] - coords[None, :, :]
        dists = np.sqrt((diffs**2).sum(axis=-1))
        if (np.abs(dists - radius) < 1e-9).any():
            continue
        theta = 0.7
        rot = np.array(
            [[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]]
        )
        moved = coords @ rot.T + np.array([5.0, -3.0])
        cfg = ClusteringConfig(radius=radius)
        before = build_adjacency(PointSet.from_coords(coords), cfg).to_array()
        after = build_adjacency(PointSet.from_coords(moved), cfg).to_array()
        assert np.array_equal(before, after)
