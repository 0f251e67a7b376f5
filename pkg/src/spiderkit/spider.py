"""Thin and thick spider recognition, partition verification and a brute-force oracle.

A thin spider splits its vertices into a clique ``K`` (body), a stable set
``S`` (legs) of the same size ``s >= 2`` and a head ``R`` joined to all of
``K`` and none of ``S``, with a perfect body-leg matching. A thick spider is
the complement of a thin one.

Recognition needs only the degree census: a graph is a thin spider exactly
when, for ``s`` = number of degree-1 vertices, ``s >= 2``, ``n - s >= 2`` and
exactly ``s`` vertices have degree ``n - s``.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from . import kernels
from .graph import Graph, complement

__all__ = [
    "SpiderPartition",
    "SpiderClass",
    "Verdict",
    "GuardError",
    "recognize_thin",
    "recognize_thick",
    "verify_thin",
    "verify_thick",
    "brute_force_recognize",
    "classify",
    "BRUTE_FORCE_MAX_N",
]

BRUTE_FORCE_MAX_N = 12


class GuardError(ValueError):
    """Input too large for an exponential-time routine."""


def guard_limit(default: int) -> int:
    """``default`` lowered (never raised) by ``SPIDERKIT_MAX_N``."""
    raw = os.environ.get("SPIDERKIT_MAX_N")
    if not raw:
        return default
    try:
        return min(default, int(raw))
    except ValueError:
        return default


@dataclass(frozen=True)
class SpiderPartition:
    """Body ``K``, legs ``S``, head ``R`` and the body-to-leg ``matching``.

    For ``kind == "thick"`` the matching pairs each clique vertex with its
    unique non-neighbour in ``S``. Sets are stored as sorted tuples and the
    matching as ``(body, leg)`` pairs sorted by body. No invariant is
    enforced on construction; use :func:`verify_thin` / :func:`verify_thick`.
    """

    kind: str
    K: tuple[int, ...]
    S: tuple[int, ...]
    R: tuple[int, ...]
    matching: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.kind not in ("thin", "thick"):
            raise ValueError(f"kind must be 'thin' or 'thick', got {self.kind!r}")
        for name in ("K", "S", "R"):
            object.__setattr__(self, name, tuple(sorted(int(v) for v in getattr(self, name))))
        pairs = tuple(sorted((int(k), int(s)) for k, s in self.matching))
        object.__setattr__(self, "matching", pairs)

    @property
    def s(self) -> int:
        return len(self.S)

    @property
    def matching_map(self) -> dict[int, int]:
        return dict(self.matching)

    def swapped(self) -> "SpiderPartition":
        """The partition of the complement graph: kind flipped, K and S exchanged."""
        return SpiderPartition(
            kind="thick" if self.kind == "thin" else "thin",
            K=self.S,
            S=self.K,
            R=self.R,
            matching=[(leg, body) for body, leg in self.matching],
        )

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "K": list(self.K),
            "S": list(self.S),
            "R": list(self.R),
            "matching": [list(p) for p in self.matching],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SpiderPartition":
        try:
            return cls(
                kind=data["kind"],
                K=data["K"],
                S=data["S"],
                R=data["R"],
                matching=[tuple(p) for p in data["matching"]],
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed partition JSON: {exc}") from None


class SpiderClass(enum.Enum):
    THIN_ONLY = "thin"
    THICK_ONLY = "thick"
    BOTH = "both"
    NOT_SPIDER = "neither"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a partition check; ``violated`` names the first failed condition."""

    ok: bool
    violated: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _partition_from_census(kind: str, n: int, census) -> SpiderPartition:
    body, legs, partner = census
    rest = np.ones(n, dtype=bool)
    rest[body] = False
    rest[legs] = False
    # census arrays come back sorted, so skip the normalizing constructor
    p = object.__new__(SpiderPartition)
    for name, value in (
        ("kind", kind),
        ("K", tuple(body.tolist())),
        ("S", tuple(legs.tolist())),
        ("R", tuple(np.flatnonzero(rest).tolist())),
        ("matching", tuple(zip(body.tolist(), partner.tolist()))),
    ):
        object.__setattr__(p, name, value)
    return p


def recognize_thin(g: Graph) -> SpiderPartition | None:
    """Thin-spider partition of ``g`` from its degrees, or ``None``. O(n + s)."""
    census = kernels.thin_census(g.indptr, g.indices)
    if census is None:
        return None
    return _partition_from_census("thin", g.n, census)


def recognize_thick(g: Graph) -> SpiderPartition | None:
    """Thick-spider partition read off the degrees of ``g`` (no complement is built)."""
    census = kernels.thick_census(g.indptr, g.indices)
    if census is None:
        return None
    return _partition_from_census("thick", g.n, census)


def _check_ids(g: Graph, p: SpiderPartition) -> None:
    for v in (*p.K, *p.S, *p.R, *(x for pair in p.matching for x in pair)):
        if not 0 <= v < g.n:
            raise ValueError(f"partition vertex {v} out of range for n={g.n}")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(vs: Iterable[int]) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def _mask_violation(masks, n, K, S, R, matching) -> str | None:
    """Bitmask version of the thin-spider check, used inside the brute-force search."""
    kb, sb, rb = _bits(K), _bits(S), _bits(R)
    if (
        len(K) + len(S) + len(R) != n
        or kb & sb
        or kb & rb
        or sb & rb
        or (kb | sb | rb) != (1 << n) - 1
    ):
        return "partition"
    if len(K) != len(S) or len(K) < 2:
        return "iii"
    for k in K:
        if masks[k] & kb != kb & ~(1 << k):
            return "i"
    for x in S:
        if masks[x] & sb:
            return "ii"
    for r in R:
        if masks[r] & kb != kb or masks[r] & sb:
            return "iv"
    for k in K:
        if _popcount(masks[k] & sb) != 1:
            return "v"
    for x in S:
        if _popcount(masks[x] & kb) != 1:
            return "v"
    pairs = dict(matching)
    if len(pairs) != len(matching) or set(pairs) != set(K):
        return "v"
    for k, x in pairs.items():
        if not (sb >> x & 1 and masks[k] >> x & 1):
            return "v"
    return None


def _row_counts(g: Graph, member: np.ndarray) -> np.ndarray:
    """Per-vertex number of neighbours with ``member`` set."""
    csum = np.zeros(len(g.indices) + 1, dtype=np.int64)
    np.cumsum(member[g.indices], out=csum[1:])
    return csum[g.indptr[1:]] - csum[g.indptr[:-1]]


def _adjacent(g: Graph, u: int, v: int) -> bool:
    row = g.indices[g.indptr[u] : g.indptr[u + 1]]
    i = int(np.searchsorted(row, v))
    return i < len(row) and row[i] == v


def _violation(g: Graph, K, S, R, matching, co: bool) -> str | None:
    """First violated thin-spider condition of (K, S, R, matching).

    With ``co=True`` adjacency is read as non-adjacency, i.e. the check runs
    on the complement of ``g`` without building it.
    """
    n = g.n
    K, S, R = (np.asarray(x, dtype=np.int64) for x in (K, S, R))
    ids = np.concatenate([K, S, R])
    if len(ids) != n or (n and not (np.bincount(ids, minlength=n) == 1).all()):
        return "partition"
    s = len(K)
    if s != len(S) or s < 2:
        return "iii"
    label = np.full(n, 2, dtype=np.int8)
    label[K] = 0
    label[S] = 1
    in_k = _row_counts(g, label == 0)
    in_s = _row_counts(g, label == 1)
    if co:
        in_k = s - in_k - (label == 0)
        in_s = s - in_s - (label == 1)
    if not (in_k[K] == s - 1).all():
        return "i"
    if in_s[S].any():
        return "ii"
    if not (in_k[R] == s).all() or in_s[R].any():
        return "iv"
    if not ((in_s[K] == 1).all() and (in_k[S] == 1).all()):
        return "v"
    pairs = dict(matching)
    if len(pairs) != len(matching) or set(pairs) != set(K.tolist()):
        return "v"
    for k, x in pairs.items():
        if not 0 <= x < n or label[x] != 1 or _adjacent(g, k, x) == co:
            return "v"
    return None


def verify_thin(g: Graph, p: SpiderPartition) -> Verdict:
    """Check ``p`` against the thin-spider definition.

    Conditions are tested in the order partition, iii, i, ii, iv, v and the
    first failure is reported.
    """
    _check_ids(g, p)
    bad = _violation(g, p.K, p.S, p.R, p.matching, co=False)
    return Verdict(bad is None, bad)


def verify_thick(g: Graph, p: SpiderPartition) -> Verdict:
    """Check ``p`` as a thick spider: its swap must be a thin partition of the complement."""
    _check_ids(g, p)
    q = p.swapped()
    bad = _violation(g, q.K, q.S, q.R, q.matching, co=True)
    return Verdict(bad is None, bad)


def brute_force_recognize(g: Graph, kind: str) -> SpiderPartition | None:
    """Exhaustive search for a spider partition of the given kind.

    Candidates are tried with ``s`` ascending, then ``K`` and ``S`` in
    lexicographic order; the first one passing the definition check is
    returned. Candidates that fail an individual condition outright (a
    non-clique ``K``, a leg without exactly one attachment into ``K``) are
    skipped early, which does not change which candidate comes first.
    """
    if kind not in ("thin", "thick"):
        raise ValueError(f"kind must be 'thin' or 'thick', got {kind!r}")
    n = g.n
    limit = guard_limit(BRUTE_FORCE_MAX_N)
    if n > limit:
        raise GuardError(f"brute-force recognition limited to n <= {limit}, got n={n}")
    gm = g.masks()
    cm = complement(g).masks() if kind == "thick" else None
    for s in range(2, n // 2 + 1):
        for K in combinations(range(n), s):
            kb = _bits(K)
            if any(gm[k] & kb != kb & ~(1 << k) for k in K):
                continue
            if kind == "thin":
                cand = [v for v in range(n) if not kb >> v & 1 and _popcount(gm[v] & kb) == 1]
            else:
                cand = [v for v in range(n) if not kb >> v & 1 and _popcount(~gm[v] & kb) == 1]
            for S in combinations(cand, s):
                sb = _bits(S)
                R = [v for v in range(n) if not (kb | sb) >> v & 1]
                if kind == "thin":
                    match = [(k, (gm[k] & sb).bit_length() - 1) for k in K]
                    if _mask_violation(gm, n, K, S, R, match) is None:
                        return SpiderPartition("thin", K, S, R, match)
                else:
                    # thin view on the complement: body = S, legs = K
                    match = [(x, (cm[x] & kb).bit_length() - 1) for x in S]
                    if _mask_violation(cm, n, S, K, R, match) is None:
                        return SpiderPartition("thick", K, S, R, [(k, x) for x, k in match])
    return None


def classify(g: Graph) -> SpiderClass:
    thin = recognize_thin(g) is not None
    thick = recognize_thick(g) is not None
    if thin and thick:
        return SpiderClass.BOTH
    if thin:
        return SpiderClass.THIN_ONLY
    if thick:
        return SpiderClass.THICK_ONLY
    return SpiderClass.NOT_SPIDER
