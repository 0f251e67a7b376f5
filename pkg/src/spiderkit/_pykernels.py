"""Fallback kernels used when the compiled extension is unavailable.

Same signatures and return values as ``_kernels.pyx``.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


def thin_census(indptr: np.ndarray, indices: np.ndarray):
    n = len(indptr) - 1
    if n < 4:
        return None
    deg = np.diff(indptr)
    hist = np.bincount(deg, minlength=n + 1)
    s = int(hist[1])
    t = n - s
    if s < 2 or t < 2 or hist[t] != s:
        return None
    body = np.flatnonzero(deg == t).astype(np.int64)
    legs = np.flatnonzero(deg == 1).astype(np.int64)
    owner = indices[indptr[legs]].astype(np.int64)
    order = np.argsort(owner, kind="stable")
    if not np.array_equal(owner[order], body):
        raise RuntimeError("leg neighbourhoods inconsistent with a thin spider; adjacency corrupt")
    return body, legs, legs[order]


def thick_census(indptr: np.ndarray, indices: np.ndarray):
    n = len(indptr) - 1
    if n < 4:
        return None
    deg = np.diff(indptr)
    hist = np.bincount(deg, minlength=n + 1)
    s = int(hist[n - 2])
    if s < 2 or n - s < 2 or hist[s - 1] != s:
        return None
    clique = np.flatnonzero(deg == n - 2).astype(np.int64)
    stable = np.flatnonzero(deg == s - 1).astype(np.int64)
    # the single non-neighbour is whatever the row sum is missing
    csum = np.concatenate(([0], np.cumsum(indices, dtype=np.int64)))
    row_sums = csum[indptr[clique + 1]] - csum[indptr[clique]]
    partner = n * (n - 1) // 2 - clique - row_sums
    if not np.array_equal(np.sort(partner), stable):
        raise RuntimeError("clique non-neighbours inconsistent with a thick spider; adjacency corrupt")
    return clique, stable, partner.astype(np.int64)


def _p4_masks(masks: list[int]) -> list[int]:
    """Bitmasks of all 4-subsets inducing a P4."""
    found = []
    n = len(masks)
    for quad in combinations(range(n), 4):
        sub = 0
        for v in quad:
            sub |= 1 << v
        degs = [bin(masks[v] & sub).count("1") for v in quad]
        if sum(degs) == 6 and all(1 <= d <= 2 for d in degs):
            found.append(sub)
    return found


def first_p4_violation(masks):
    masks = [int(m) for m in masks]
    n = len(masks)
    if n > 64:
        raise ValueError("bitmask kernel supports at most 64 vertices")
    p4s = _p4_masks(masks)
    lookup = set(p4s)
    best = None
    for quad in p4s:
        for x in range(n):
            bit = 1 << x
            if quad & bit:
                continue
            five = quad | bit
            # another 4-subset of the same 5-set that is also a P4
            if any((five & ~(1 << y)) in lookup for y in range(n) if quad >> y & 1):
                members = tuple(y for y in range(n) if five >> y & 1)
                if best is None or members < best:
                    best = members
    return best
