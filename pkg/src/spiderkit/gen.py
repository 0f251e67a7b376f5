"""Seeded graph generators for property tests and benchmarks.

All randomness goes through ``numpy.random.default_rng`` (PCG64); the same
seed always yields the same graph. Spiders place the body at ids
``0..s-1``, the legs at ``s..2s-1`` and the head from ``2s`` on.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from .graph import INDEX_DTYPE, INDPTR_DTYPE, Graph, complement, disjoint_union, join
from .spider import SpiderPartition

__all__ = [
    "GenSpec",
    "generate",
    "random_thin_spider",
    "random_thick_spider",
    "random_graph",
    "random_sparse_graph",
    "random_p4_sparse",
    "random_cograph",
    "all_graphs",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
]


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_thin_spider(s: int, head: Graph, seed) -> tuple[Graph, SpiderPartition]:
    """Thin spider with body ``K``, legs matched by a random bijection, and ``head`` as ``R``.

    Built straight into CSR form so large heads stay cheap.
    """
    if s < 2:
        raise ValueError(f"a spider needs s >= 2 legs, got {s}")
    rng = _rng(seed)
    perm = rng.permutation(s)
    h = head.n
    n = 2 * s + h
    hdeg = head.degrees()

    row_len = np.concatenate([np.full(s, s + h), np.ones(s, dtype=np.int64), s + hdeg])
    indptr = np.zeros(n + 1, dtype=INDPTR_DTYPE)
    np.cumsum(row_len, out=indptr[1:])
    indices = np.empty(int(indptr[-1]), dtype=INDEX_DTYPE)

    # body rows: other body vertices, own leg, whole head (already in id order)
    body = np.empty((s, s + h), dtype=INDEX_DTYPE)
    others = np.tile(np.arange(s, dtype=INDEX_DTYPE), (s, 1))
    body[:, : s - 1] = others[~np.eye(s, dtype=bool)].reshape(s, s - 1)
    body[:, s - 1] = s + perm
    body[:, s:] = np.arange(2 * s, n, dtype=INDEX_DTYPE)
    indices[: s * (s + h)] = body.ravel()
    del body, others

    # leg rows: the owning body vertex
    owner = np.empty(s, dtype=INDEX_DTYPE)
    owner[perm] = np.arange(s, dtype=INDEX_DTYPE)
    base = s * (s + h)
    indices[base : base + s] = owner

    # head rows: whole body, then own head neighbours shifted by 2s
    base += s
    if h:
        starts = indptr[2 * s : n] - base
        block = np.ones(int(indptr[-1]) - base, dtype=bool)
        row_of = np.repeat(np.arange(h), hdeg)
        pos = starts[row_of] + s + (np.arange(len(head.indices)) - head.indptr[row_of])
        block[pos] = False
        sub = indices[base:]
        sub[pos] = head.indices + 2 * s
        sub[block] = np.tile(np.arange(s, dtype=INDEX_DTYPE), h)

    g = Graph.from_csr(indptr, indices, check=False)
    part = SpiderPartition(
        "thin",
        range(s),
        range(s, 2 * s),
        range(2 * s, n),
        [(k, s + int(perm[k])) for k in range(s)],
    )
    return g, part


def random_thick_spider(s: int, head: Graph, seed) -> tuple[Graph, SpiderPartition]:
    """Complement of :func:`random_thin_spider` (so its head is the complement of ``head``)."""
    g, p = random_thin_spider(s, head, seed)
    return complement(g), p.swapped()


def random_graph(n: int, p: float, seed) -> Graph:
    """Erdős–Rényi G(n, p): each pair, in lexicographic order, kept with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = _rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    return Graph.from_edge_arrays(n, iu[keep], ju[keep])


def random_sparse_graph(n: int, m: int, seed) -> Graph:
    """Uniformly random simple graph with exactly ``m`` edges, without enumerating all pairs."""
    if m > n * (n - 1) // 2:
        raise ValueError(f"{m} edges do not fit on {n} vertices")
    rng = _rng(seed)
    keys = np.empty(0, dtype=np.int64)
    while len(keys) < m:
        need = m - len(keys)
        u = rng.integers(0, n, size=need + need // 8 + 16)
        v = rng.integers(0, n, size=len(u))
        ok = u != v
        lo, hi = np.minimum(u[ok], v[ok]), np.maximum(u[ok], v[ok])
        fresh = np.setdiff1d(lo * n + hi, keys)
        # keep first-drawn order so the result depends only on the seed
        fresh = rng.permutation(fresh)[:need]
        keys = np.concatenate([keys, fresh])
    return Graph.from_edge_arrays(n, keys // n, keys % n)


def random_p4_sparse(n_target: int, depth: int, seed, spiders: bool = True) -> Graph:
    """Random P4-sparse graph built by inverting the union / join / spider decomposition.

    ``n_target`` bounds the vertex count; a branch that runs out of
    ``depth`` stops at a single vertex. With ``spiders=False`` only unions
    and joins are used, which yields a cograph.
    """
    if n_target < 1:
        raise ValueError("n_target must be at least 1")
    return _build(n_target, depth, _rng(seed), spiders)


def _build(n: int, depth: int, rng: np.random.Generator, spiders: bool) -> Graph:
    if depth <= 0 or n <= 1:
        return Graph(1)
    ops = ["union", "join"]
    if spiders and n >= 4:
        ops.append("spider")
    op = ops[int(rng.integers(len(ops)))]
    if op == "spider":
        s = int(rng.integers(2, n // 2 + 1))
        h = n - 2 * s
        head = _build(h, depth - 1, rng, spiders) if h else Graph(0)
        g, _ = random_thin_spider(s, head, rng)
        return complement(g) if rng.random() < 0.5 else g
    n1 = int(rng.integers(1, n))
    a = _build(n1, depth - 1, rng, spiders)
    b = _build(n - n1, depth - 1, rng, spiders)
    return disjoint_union(a, b) if op == "union" else join(a, b)


def random_cograph(n_target: int, depth: int, seed) -> Graph:
    return random_p4_sparse(n_target, depth, seed, spiders=False)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, ``2**(n choose 2)`` of them."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star_graph(t: int) -> Graph:
    """K_{1,t}: centre 0 joined to leaves ``1..t``."""
    return Graph(t + 1, [(0, i) for i in range(1, t + 1)])


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generator call; echoed into output headers."""

    kind: str
    seed: int
    s: int = 2
    head_size: int = 0
    p: float = 0.5
    depth: int = 4
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("thin_spider", "thick_spider", "random", "p4_sparse"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"edge probability must lie in [0, 1], got {self.p}")
        if self.kind in ("thin_spider", "thick_spider") and self.s < 2:
            raise ValueError(f"spiders need s >= 2, got {self.s}")

    def describe(self) -> str:
        return "generate " + " ".join(f"{k}={v}" for k, v in asdict(self).items())


def generate(spec: GenSpec, head: Graph | None = None) -> tuple[Graph, SpiderPartition | None]:
    """Run the generator named by ``spec``; spiders get a G(head_size, p) head unless given one."""
    rng = _rng(spec.seed)
    if spec.kind in ("thin_spider", "thick_spider"):
        if head is None:
            head = random_graph(spec.head_size, spec.p, rng)
        fn = random_thin_spider if spec.kind == "thin_spider" else random_thick_spider
        return fn(spec.s, head, rng)
    if spec.kind == "random":
        return random_graph(spec.n, spec.p, rng), None
    return random_p4_sparse(max(spec.n, 1), spec.depth, rng), None
