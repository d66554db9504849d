"""Seeded graph generators for the five benchmark families.

Every generator is a pure function of its parameters: the same inputs always
produce the identical graph (see :mod:`chordalkit.rng` for the stream
construction). Each family uses its own stream label so, e.g., a sparse and
a dense graph built from the same seed do not share random draws.
"""

from __future__ import annotations

import numpy as np

from . import rng as _rng
from .errors import InvalidProbability, InvalidSize
from .graph import DEFAULT_VERTEX_CAP, Graph, _check_size, row_width


def gen_clique(n: int, *, cap: int | None = None) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise InvalidSize("clique needs at least one vertex")
    _check_size(n, cap)
    w = row_width(n)
    packed = np.full((n, w), 0xFF, dtype=np.uint8)
    if n & 7:
        packed[:, -1] = (1 << (n & 7)) - 1
    idx = np.arange(n)
    packed[idx, idx >> 3] &= np.uint8(0xFF) ^ (np.uint8(1) << (idx & 7).astype(np.uint8))
    return Graph._from_packed(n, packed)


def gen_dense_random(n: int, p: float, seed: int, *, cap: int | None = None) -> Graph:
    """Include each unordered pair independently with probability p.

    Sampling runs over row blocks of the upper triangle and mirrors the
    packed bits, so no edge list is ever materialized.
    """
    if not 0.0 < p <= 1.0:
        raise InvalidProbability(f"edge probability must be in (0, 1], got {p}")
    _check_size(n, cap)
    if n <= 1:
        return Graph._from_packed(n, np.zeros((n, row_width(n)), dtype=np.uint8))
    gen = _rng.stream(seed, "dense-random")
    w = row_width(n)
    packed = np.zeros((n, w), dtype=np.uint8)
    cols = np.arange(n, dtype=np.int64)
    block = 1024  # multiple of 8 keeps the mirrored bytes aligned
    for u0 in range(0, n, block):
        u1 = min(u0 + block, n)
        hit = gen.random((u1 - u0, n)) < p
        hit &= cols[None, :] > np.arange(u0, u1, dtype=np.int64)[:, None]
        packed[u0:u1] |= np.packbits(hit, axis=1, bitorder="little")[:, :w]
        mirrored = np.packbits(hit.T, axis=1, bitorder="little")
        b0 = u0 >> 3
        packed[:, b0 : b0 + mirrored.shape[1]] |= mirrored
    return Graph._from_packed(n, packed)


def gen_sparse_random(n: int, seed: int, *, cap: int | None = None) -> Graph:
    """Exactly 20n distinct edges, sampled uniformly without replacement."""
    if n < 41:
        raise InvalidSize(f"need n >= 41 so that 20n edges fit, got {n}")
    _check_size(n, cap)
    gen = _rng.stream(seed, "sparse-random")
    need = 20 * n
    seen: set[int] = set()
    picked: list[int] = []
    while len(picked) < need:
        batch = max(4096, 2 * (need - len(picked)))
        u = gen.integers(0, n, size=batch, dtype=np.int64)
        v = gen.integers(0, n, size=batch, dtype=np.int64)
        ok = u != v
        lo = np.minimum(u[ok], v[ok])
        hi = np.maximum(u[ok], v[ok])
        for code in (lo * n + hi).tolist():
            if code not in seen:
                seen.add(code)
                picked.append(code)
                if len(picked) == need:
                    break
    codes = np.asarray(picked, dtype=np.int64)
    return Graph._from_numpy_edges(n, codes // n + 1, codes % n + 1)


def gen_tree(n: int, seed: int, *, cap: int | None = None) -> Graph:
    """Uniform random labeled tree (decoded from a uniform length-(n-2) code)."""
    if n < 1:
        raise InvalidSize("tree needs at least one vertex")
    _check_size(n, cap)
    if n == 1:
        return Graph.from_edge_list(1, [])
    if n == 2:
        return Graph.from_edge_list(2, [(1, 2)])
    gen = _rng.stream(seed, "tree")
    seq = gen.integers(0, n, size=n - 2, dtype=np.int64).tolist()
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    us = np.empty(n - 1, dtype=np.int64)
    vs = np.empty(n - 1, dtype=np.int64)
    ptr = 0
    leaf = -1
    for i, v in enumerate(seq):
        if leaf < 0:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        us[i], vs[i] = leaf, v
        deg[leaf] = 0
        deg[v] -= 1
        # v may have just become the smallest-index leaf; reuse it directly
        leaf = v if deg[v] == 1 and v < ptr else -1
    last = [v for v in range(n) if deg[v] == 1]
    us[n - 2], vs[n - 2] = last
    return Graph._from_numpy_edges(n, us + 1, vs + 1)


def gen_chordal_random(n: int, k: int, seed: int, *, cap: int | None = None) -> Graph:
    """Chordal graph grown vertex by vertex.

    Vertex i joins a clique of roughly k earlier vertices: a random earlier
    vertex j is picked and i attaches to a random subset of {j} plus the
    clique j itself attached to. Every attachment set is therefore a clique,
    so the insertion order certifies the output chordal. While k >= i-1 the
    whole prefix is one clique and vertex i joins all of it, which makes
    k = n-1 produce the complete graph and k = 0 the edgeless one.
    """
    if n < 1:
        raise InvalidSize("need at least one vertex")
    if not 0 <= k < n:
        raise InvalidSize(f"attachment size must satisfy 0 <= k < n, got {k}")
    _check_size(n, cap)
    if k == 0 or n == 1:
        return Graph.from_edge_list(n, [])
    gen = _rng.stream(seed, "chordal-random")
    cliques: list[np.ndarray] = [np.empty(0, dtype=np.int64)]
    us: list[np.ndarray] = []
    vs: list[np.ndarray] = []
    for i in range(1, n):
        if k >= i:  # k >= i-1 in 1-based terms: join the full prefix clique
            attach = np.arange(i, dtype=np.int64)
        else:
            want = int(np.clip(k + gen.integers(-1, 2), 1, i))
            j = int(gen.integers(0, i))
            pool = np.append(cliques[j], j)
            if want >= pool.size:
                attach = pool
            else:
                attach = pool[gen.choice(pool.size, size=want, replace=False)]
        cliques.append(attach)
        us.append(np.full(attach.size, i, dtype=np.int64))
        vs.append(attach)
    u = np.concatenate(us)
    v = np.concatenate(vs)
    return Graph._from_numpy_edges(n, u + 1, v + 1)
