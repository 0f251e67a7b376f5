"""Degree sequences: counts/list conversion, Erdős–Gallai, Havel–Hakimi."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence, Union

from .graph import Graph

__all__ = [
    "DegreeSequence",
    "counts_to_list",
    "list_to_counts",
    "is_graphical",
    "havel_hakimi_realize",
    "reverse_counts",
    "parse_sequence",
]


@dataclass(frozen=True)
class DegreeSequence:
    """Counts form ``(n_0, n_1, ..., n_w)``: ``n_k`` vertices have degree ``k``.

    Trailing zero counts are trimmed on construction, so equal sequences
    compare equal regardless of padding.
    """

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = [int(c) for c in self.counts]
        if any(c < 0 for c in counts):
            raise ValueError(f"counts must be non-negative: {counts}")
        while counts and counts[-1] == 0:
            counts.pop()
        object.__setattr__(self, "counts", tuple(counts))

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "DegreeSequence":
        return list_to_counts(degrees)

    @property
    def v(self) -> int:
        """Number of vertices."""
        return sum(self.counts)

    @property
    def degree_sum(self) -> int:
        return sum(k * c for k, c in enumerate(self.counts))

    def count(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def degrees(self) -> list[int]:
        return counts_to_list(self)

    def __iter__(self):
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __str__(self) -> str:
        return "counts:" + ",".join(map(str, self.counts))


SequenceLike = Union[DegreeSequence, Sequence[int]]


def _as_degrees(seq: SequenceLike) -> list[int]:
    if isinstance(seq, DegreeSequence):
        return counts_to_list(seq)
    return sorted((int(d) for d in seq), reverse=True)


def counts_to_list(seq: DegreeSequence) -> list[int]:
    """Degrees sorted non-increasing, e.g. ``(0,2,2) -> [2, 2, 1, 1]``."""
    out: list[int] = []
    for k in range(len(seq.counts) - 1, -1, -1):
        out.extend([k] * seq.counts[k])
    return out


def list_to_counts(degrees: Iterable[int]) -> DegreeSequence:
    degrees = [int(d) for d in degrees]
    if any(d < 0 for d in degrees):
        raise ValueError(f"degrees must be non-negative: {degrees}")
    counts = [0] * (max(degrees) + 1 if degrees else 0)
    for d in degrees:
        counts[d] += 1
    return DegreeSequence(tuple(counts))


def is_graphical(seq: SequenceLike) -> bool:
    """Erdős–Gallai test. Accepts counts form or a plain list of degrees."""
    if not isinstance(seq, DegreeSequence) and any(int(d) < 0 for d in seq):
        return False
    d = _as_degrees(seq)
    v = len(d)
    if v == 0:
        return True
    if d[0] >= v:
        return False
    total = sum(d)
    if total % 2:
        return False
    prefix = [0, *accumulate(d)]
    ascending = d[::-1]
    for k in range(1, v + 1):
        # number of entries >= k; they occupy positions 0..p-1
        p = v - bisect.bisect_left(ascending, k)
        tail = k * max(0, p - k) + (total - prefix[max(p, k)])
        if prefix[k] > k * (k - 1) + tail:
            return False
    return True


def havel_hakimi_realize(seq: SequenceLike) -> Graph | None:
    """Realize ``seq`` greedily; ``None`` when it is not graphical.

    Vertex ``i`` receives the ``i``-th largest degree. Each round takes the
    vertex of maximum residual degree (smallest id on ties) and joins it to
    the next-highest residual degrees, again preferring smaller ids.
    """
    if not isinstance(seq, DegreeSequence) and any(int(d) < 0 for d in seq):
        return None
    degs = _as_degrees(seq)
    v = len(degs)
    residual = list(degs)
    edges = []
    while True:
        u = min(range(v), key=lambda i: (-residual[i], i), default=None)
        if u is None or residual[u] == 0:
            break
        r = residual[u]
        others = sorted(
            (i for i in range(v) if i != u and residual[i] > 0),
            key=lambda i: (-residual[i], i),
        )
        if len(others) < r:
            return None
        for w in others[:r]:
            residual[w] -= 1
            edges.append((u, w))
        residual[u] = 0
    return Graph(v, edges)


def reverse_counts(seq: DegreeSequence, v: int) -> DegreeSequence:
    """Counts of the complement's degrees: ``m_k = n_{v-1-k}``."""
    if seq.v != v:
        raise ValueError(f"counts sum to {seq.v}, expected v={v}")
    if len(seq.counts) > v:
        raise ValueError(f"degree {len(seq.counts) - 1} impossible on {v} vertices")
    return DegreeSequence(tuple(seq.count(v - 1 - k) for k in range(v)))


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``counts:0,3,0,...`` or ``degrees:7,7,...`` into counts form."""
    form, sep, body = text.strip().partition(":")
    if not sep or form not in ("counts", "degrees"):
        raise ValueError(f"sequence must start with 'counts:' or 'degrees:', got {text!r}")
    try:
        values = [int(t) for t in body.split(",") if t.strip()]
    except ValueError:
        raise ValueError(f"non-integer entry in {text!r}") from None
    if any(x < 0 for x in values):
        raise ValueError(f"negative entry in {text!r}")
    if form == "counts":
        return DegreeSequence(tuple(values))
    return list_to_counts(values)
