"""Induced P4 detection and two independent P4-sparseness checks.

``is_p4_sparse_bruteforce`` scans every 5-subset for two induced P4s.
``is_p4_sparse_recursive`` peels the graph apart instead: split into
components, or into co-components, or strip a spider down to its head.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable

import numpy as np

from . import kernels
from .graph import Graph, complement, connected_components, induced_subgraph
from .spider import GuardError, guard_limit, recognize_thick, recognize_thin

__all__ = [
    "P4SparseResult",
    "induces_p4",
    "count_induced_p4",
    "is_p4_sparse_bruteforce",
    "is_p4_sparse_recursive",
    "BRUTE_FORCE_MAX_N",
]

BRUTE_FORCE_MAX_N = 40


@dataclass(frozen=True)
class P4SparseResult:
    p4_sparse: bool
    violating_set: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.p4_sparse


def induces_p4(g: Graph, four: Iterable[int]) -> tuple[int, int, int, int] | None:
    """Ordering ``(a, b, c, d)`` with ``a < d`` of an induced path a-b-c-d, or ``None``."""
    quad = sorted(set(four))
    if len(quad) != 4:
        raise ValueError(f"need exactly 4 distinct vertices, got {list(four)}")
    for v in quad:
        g._check_vertex(v)
    adj = g.adjacency
    for a, b, c, d in permutations(quad):
        if a > d:
            continue
        if b in adj[a] and c in adj[b] and d in adj[c]:
            if c not in adj[a] and d not in adj[a] and d not in adj[b]:
                return a, b, c, d
    return None


def count_induced_p4(g: Graph, vertices: Iterable[int]) -> int:
    """Number of 4-subsets of ``vertices`` that induce a P4."""
    return sum(induces_p4(g, q) is not None for q in combinations(sorted(set(vertices)), 4))


def is_p4_sparse_bruteforce(g: Graph) -> P4SparseResult:
    """True iff no 5 vertices induce two P4s; reports the first offending 5-set."""
    limit = guard_limit(BRUTE_FORCE_MAX_N)
    if g.n > limit:
        raise GuardError(f"brute-force P4-sparse check limited to n <= {limit}, got n={g.n}")
    masks = np.array(g.masks(), dtype=np.uint64) if g.n else np.zeros(0, dtype=np.uint64)
    bad = kernels.first_p4_violation(masks)
    if bad is None:
        return P4SparseResult(True)
    return P4SparseResult(False, tuple(int(v) for v in bad))


def is_p4_sparse_recursive(g: Graph) -> bool:
    stack = [g]
    while stack:
        h = stack.pop()
        if h.n <= 3:
            continue
        comps = connected_components(h)
        co_comps = connected_components(complement(h))
        # a graph and its complement are never both disconnected
        assert len(comps) == 1 or len(co_comps) == 1
        if len(comps) > 1:
            stack.extend(induced_subgraph(h, c)[0] for c in comps)
        elif len(co_comps) > 1:
            stack.extend(induced_subgraph(h, c)[0] for c in co_comps)
        else:
            p = recognize_thin(h) or recognize_thick(h)
            if p is None:
                return False
            stack.append(induced_subgraph(h, p.R)[0])
    return True
