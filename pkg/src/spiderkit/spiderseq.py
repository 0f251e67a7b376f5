"""Which degree sequences are realized by thin or thick spiders, and a realization.

A sequence on ``v`` vertices with ``s = n_1`` is thin-spider realizable iff
``s >= 2``, ``2s <= v``, ``v >= 4``, ``n_{v-s} = s``, no other degree lies
outside the head window ``s..v-s-1``, and the head degrees shifted down by
``s`` form a graphical sequence. Thick spiders are handled by reversing the
counts (complementing) and asking the thin question.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degseq import DegreeSequence, havel_hakimi_realize, is_graphical, reverse_counts
from .graph import Graph, complement
from .spider import SpiderPartition

__all__ = [
    "ThinWitness",
    "thin_spider_realizable",
    "thick_spider_realizable",
    "construct_thin_spider",
    "construct_thick_spider",
]


@dataclass(frozen=True)
class ThinWitness:
    """Leg count ``s``, vertex count ``v`` and the head's own degree sequence.

    ``kind == "thick"`` marks a witness obtained from the reversed counts;
    its graph is the complement of the thin construction.
    """

    s: int
    v: int
    head_sequence: DegreeSequence
    kind: str = "thin"

    def __post_init__(self):
        if self.s < 2 or 2 * self.s > self.v:
            raise ValueError(f"need 2 <= s and 2s <= v, got s={self.s}, v={self.v}")
        if self.head_sequence.v != self.v - 2 * self.s:
            raise ValueError("head sequence must cover exactly v - 2s vertices")
        if self.kind not in ("thin", "thick"):
            raise ValueError(f"kind must be 'thin' or 'thick', got {self.kind!r}")

    def to_json(self) -> dict:
        return {
            "realizable": True,
            "kind": self.kind,
            "s": self.s,
            "v": self.v,
            "head_sequence": list(self.head_sequence.counts),
        }


def thin_spider_realizable(seq: DegreeSequence) -> ThinWitness | None:
    v = seq.v
    s = seq.count(1)
    if v < 4 or s < 2 or 2 * s > v:
        return None
    top = v - s
    if seq.count(top) != s or seq.count(0):
        return None
    if any(seq.count(k) for k in range(2, s)):
        return None
    if len(seq.counts) > top + 1:
        return None
    head = DegreeSequence(tuple(seq.count(j + s) for j in range(v - 2 * s)))
    assert head.v == v - 2 * s, "head counts must cover exactly the non-body, non-leg vertices"
    if not is_graphical(head):
        return None
    return ThinWitness(s, v, head)


def thick_spider_realizable(seq: DegreeSequence, v: int) -> ThinWitness | None:
    w = thin_spider_realizable(reverse_counts(seq, v))
    if w is None:
        return None
    return ThinWitness(w.s, w.v, w.head_sequence, kind="thick")


def construct_thin_spider(w: ThinWitness) -> tuple[Graph, SpiderPartition]:
    """Body ``0..s-1``, legs ``s..2s-1`` (body ``i`` takes leg ``s+i``), head ``2s..``."""
    s, v = w.s, w.v
    head = havel_hakimi_realize(w.head_sequence)
    if head is None:
        raise ValueError(f"head sequence {w.head_sequence} is not graphical")
    K = range(s)
    S = range(s, 2 * s)
    R = range(2 * s, v)
    edges = [(a, b) for a in K for b in range(a + 1, s)]
    edges += [(i, s + i) for i in K]
    edges += [(a, r) for a in K for r in R]
    edges += [(2 * s + a, 2 * s + b) for a, b in head.edges()]
    g = Graph(v, edges)
    return g, SpiderPartition("thin", K, S, R, [(i, s + i) for i in K])


def construct_thick_spider(w: ThinWitness) -> tuple[Graph, SpiderPartition]:
    g, p = construct_thin_spider(w)
    return complement(g), p.swapped()
