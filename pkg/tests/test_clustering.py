import numpy as np
import pytest

from radclust.clustering import (
    ClusterTable,
    LabelVector,
    build_cluster_table,
    cluster_color_names,
    cluster_labels,
    cluster_pointset,
    connected_components_oracle,
)
from radclust.geometry import ClusteringConfig, PointSet, build_adjacency
from radclust.matpower import BinaryMatrix, power_fast, power_naive_oracle
from radclust.scenarios import blob_points, chain_points, ring_points

from helpers import chain_bits, partition_sets, random_adjacency


# ---------------------------------------------------------------------------
# Label extraction from row masks
# ---------------------------------------------------------------------------


def test_chain_power_labels_single_cluster():
    g, _ = power_fast(BinaryMatrix(chain_bits(7)))
    lv = cluster_labels(g)
    assert lv.labels.tolist() == [1] * 7
    assert lv.n_clusters == 1


def test_identity_labels_are_singletons():
    lv = cluster_labels(BinaryMatrix.identity(2))
    assert lv.labels.tolist() == [1, 2]


def test_labels_match_component_oracle_on_random_points():
    for seed in range(50):
        coords = np.random.default_rng(seed).random((50, 2))
        ps = PointSet.from_coords(coords)
        cfg = ClusteringConfig(radius=0.15)
        a = build_adjacency(ps, cfg)
        g, _ = power_fast(a)
        assert cluster_labels(g) == connected_components_oracle(a)


def test_labels_reject_zero_rows():
    bits = np.eye(3, dtype=bool)
    bits[1, 1] = False
    with pytest.raises(ValueError):
        cluster_labels(BinaryMatrix(bits))


def test_oracle_identity_and_all_ones():
    assert connected_components_oracle(BinaryMatrix.identity(4)).labels.tolist() == [
        1,
        2,
        3,
        4,
    ]
    ones = BinaryMatrix(np.ones((5, 5), dtype=bool))
    assert connected_components_oracle(ones).labels.tolist() == [1] * 5


def test_oracle_chain_is_one_component():
    assert connected_components_oracle(BinaryMatrix(chain_bits(7))).n_clusters == 1


def test_oracle_rejects_asymmetric_matrix():
    bits = np.eye(3, dtype=bool)
    bits[0, 1] = True
    with pytest.raises(ValueError):
        connected_components_oracle(BinaryMatrix(bits))


# ---------------------------------------------------------------------------
# LabelVector / ClusterTable
# ---------------------------------------------------------------------------


def test_label_vector_requires_contiguous_positive_labels():
    with pytest.raises(ValueError):
        LabelVector(np.array([1, 3]))  # gap
    with pytest.raises(ValueError):
        LabelVector(np.array([0, 1]))  # zero is "unlabeled"
    with pytest.raises(ValueError):
        LabelVector(np.array([2, 3]))  # must start at 1
    lv = LabelVector(np.array([2, 1, 2]))
    assert lv.n_clusters == 2


def test_cluster_table_sizes_ranking_and_colors():
    lv = LabelVector(np.array([1, 1, 2, 1, 3]))
    table = build_cluster_table(lv)
    assert table.frequencies == {1: 3, 2: 1, 3: 1}
    assert table.ranking == (1, 2, 3)
    assert table.color_ranks == {1: 1, 2: 2, 3: 3}
    assert table.sizes_ranked == (3, 1, 1)
    assert cluster_color_names(table) == {1: "red", 2: "green", 3: "blue"}


def test_cluster_table_breaks_size_ties_by_label():
    lv = LabelVector(np.array([1, 2, 2, 3, 3, 4]))
    table = build_cluster_table(lv)
    assert table.ranking == (2, 3, 1, 4)
    assert table.color_ranks == {2: 1, 3: 2, 1: 3}
    assert cluster_color_names(table)[4] == "orange"


def test_cluster_table_single_cluster():
    table = build_cluster_table(LabelVector(np.array([1, 1, 1])))
    assert table.frequencies == {1: 3}
    assert table.ranking == (1,)
    assert table.color_ranks == {1: 1}


def test_color_names_cycle_beyond_palette():
    labels = np.repeat(np.arange(1, 16), 1)
    table = build_cluster_table(LabelVector(labels))
    names = cluster_color_names(table)
    assert len(names) == 15
    assert names[table.ranking[0]] == "red"
    assert len(set(names.values())) > 3  # extra clusters get distinct names


# ---------------------------------------------------------------------------
# Full pipeline
# ---------------------------------------------------------------------------


def test_pipeline_chain_single_cluster():
    ps = PointSet.from_coords([[float(i), 0.0] for i in range(7)])
    lv, table = cluster_pointset(ps, ClusteringConfig(radius=1.5))
    assert lv.labels.tolist() == [1] * 7
    assert table.sizes_ranked == (7,)


def test_pipeline_single_point():
    lv, table = cluster_pointset(
        PointSet.from_coords([[0.0, 0.0]]), ClusteringConfig(radius=1.0)
    )
    assert lv.labels.tolist() == [1]
    assert table.frequencies == {1: 1}


def test_pipeline_matches_oracle_many_random_sets():
    rng = np.random.default_rng(2024)
    for _ in range(60):
        n = int(rng.integers(1, 90))
        coords = rng.random((n, 2))
        for radius in (0.05, 0.12, 0.3):
            ps = PointSet.from_coords(coords)
            cfg = ClusteringConfig(radius=radius)
            lv, table = cluster_pointset(ps, cfg)
            oracle = connected_components_oracle(build_adjacency(ps, cfg))
            assert lv == oracle
            assert sum(table.frequencies.values()) == n


def test_pipeline_permutation_equivariant():
    rng = np.random.default_rng(8)
    coords = rng.random((40, 2))
    cfg = ClusteringConfig(radius=0.18)
    lv, _ = cluster_pointset(PointSet.from_coords(coords), cfg)
    perm = rng.permutation(40)
    lv_p, _ = cluster_pointset(PointSet.from_coords(coords[perm]), cfg)
    # the partition of underlying rows must match after undoing the shuffle
    original = partition_sets(lv.labels.tolist())
    unshuffled = [0] * 40
    for new_row, old_row in enumerate(perm):
        unshuffled[old_row] = int(lv_p.labels[new_row])
    assert partition_sets(unshuffled) == original


def test_pipeline_groups_by_connectivity_not_shape():
    # A ring, a chain, and a blob of equal point count each come out as one
    # cluster: nothing in the pipeline favours round or centroid-tight groups.
    radius = 1.0
    shapes = [
        ring_points(24, ring_radius=3.0),
        chain_points(24, spacing=0.9),
        blob_points(24, spacing=0.6, jitter=0.15, seed=4),
    ]
    for ps in shapes:
        lv, _ = cluster_pointset(ps, ClusteringConfig(radius=radius))
        assert lv.n_clusters == 1


def test_naive_and_fast_powers_give_identical_partitions():
    rng = np.random.default_rng(99)
    for _ in range(20):
        n = int(rng.integers(2, 65))
        a = BinaryMatrix(random_adjacency(rng, n, 0.06))
        fast_g, _ = power_fast(a)
        naive_g = power_naive_oracle(a)
        assert cluster_labels(fast_g) == cluster_labels(naive_g)


def test_cluster_table_is_frozen():
    table = build_cluster_table(LabelVector(np.array([1, 1])))
    assert isinstance(table, ClusterTable)
    with pytest.raises(AttributeError):
        table.ranking = ()
