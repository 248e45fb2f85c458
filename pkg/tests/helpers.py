"""Independent oracles and fixture builders shared across the test suite.

Everything here is deliberately written against different primitives than
the library under test: hop distances come from per-source BFS, integer
matrix products come straight from numpy, and adjacency patterns are
spelled out index-by-index.
"""

from collections import deque

import numpy as np


def chain_bits(n):
    """Adjacency of n collinear points with only nearest neighbours in range."""
    idx = np.arange(n)
    return (np.abs(np.subtract.outer(idx, idx)) <= 1).astype(bool)


def random_adjacency(rng, n, p):
    """Random symmetric boolean matrix with an all-ones diagonal."""
    upper = rng.random((n, n)) < p
    bits = upper | upper.T
    np.fill_diagonal(bits, True)
    return bits


def bfs_hop_distances(bits):
    """All-pairs hop counts by repeated BFS; unreachable pairs get n + 1."""
    bits = np.asarray(bits, dtype=bool)
    n = bits.shape[0]
    dist = np.full((n, n), n + 1, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in np.flatnonzero(bits[v]):
                if dist[s, w] > dist[s, v] + 1:
                    dist[s, w] = dist[s, v] + 1
                    queue.append(w)
    return dist


def binarized_int_power(bits, k):
    """Binarize the k-fold integer matrix power (k >= 1)."""
    mat = np.asarray(bits, dtype=np.int64)
    return np.linalg.matrix_power(mat, k) > 0


def pairwise_adjacency(coords, radius):
    """Adjacency built from explicit per-pair distance checks (no broadcasting)."""
    coords = np.asarray(coords, dtype=float)
    n = coords.shape[0]
    bits = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            d = float(np.sqrt(((coords[i] - coords[j]) ** 2).sum()))
            bits[i, j] = d < radius
    return bits


def partition_sets(labels):
    """Turn a label sequence into a frozenset-of-frozensets partition."""
    groups = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, set()).add(i)
    return frozenset(frozenset(g) for g in groups.values())
