"""Exhaustive cross-checks of the fast paths against brute force on small graphs.

Each ``check_*`` function returns an :class:`OracleReport`; ``mismatches``
holds up to ``keep`` offending inputs for diagnostics.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .degseq import DegreeSequence, havel_hakimi_realize, is_graphical, list_to_counts
from .gen import all_graphs
from .graph import Graph, complement, degree_sequence
from .p4sparse import is_p4_sparse_bruteforce, is_p4_sparse_recursive
from .spider import brute_force_recognize, recognize_thick, recognize_thin
from .spiderseq import construct_thin_spider, thin_spider_realizable


@dataclass
class OracleReport:
    name: str
    checked: int = 0
    mismatches: list = field(default_factory=list)
    keep: int = 10

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def fail(self, item) -> None:
        if len(self.mismatches) < self.keep:
            self.mismatches.append(item)
        else:
            self.mismatches.append(None)

    def to_json(self) -> dict:
        shown = [m for m in self.mismatches if m is not None]
        return {
            "name": self.name,
            "checked": self.checked,
            "ok": self.ok,
            "mismatches": len(self.mismatches),
            "examples": [repr(m) for m in shown],
        }


def check_spider_recognition(graphs, name="spider-recognition") -> OracleReport:
    """recognize_thin / recognize_thick agree exactly with the brute-force search."""
    rep = OracleReport(name)
    for g in graphs:
        rep.checked += 1
        for kind, fast in (("thin", recognize_thin), ("thick", recognize_thick)):
            if fast(g) != brute_force_recognize(g, kind):
                rep.fail((kind, g.n, list(g.edges())))
    return rep


def check_p4_sparse(graphs, name="p4-sparse") -> OracleReport:
    rep = OracleReport(name)
    for g in graphs:
        rep.checked += 1
        if bool(is_p4_sparse_bruteforce(g)) != is_p4_sparse_recursive(g):
            rep.fail((g.n, list(g.edges())))
    return rep


def degree_multisets(v: int, max_degree: int | None = None):
    """All non-increasing degree lists of length ``v`` with entries ``0..max_degree``."""
    top = v if max_degree is None else max_degree
    for combo in combinations_with_replacement(range(top, -1, -1), v):
        yield list(combo)


def check_graphicality(max_v: int) -> OracleReport:
    """Erdős–Gallai vs Havel–Hakimi vs the set of sequences realized by some graph."""
    rep = OracleReport(f"graphicality-v<={max_v}")
    for v in range(max_v + 1):
        realized = {degree_sequence(g) for g in all_graphs(v)}
        for degs in degree_multisets(v):
            rep.checked += 1
            seq = list_to_counts(degs)
            eg = is_graphical(seq)
            hh = havel_hakimi_realize(seq)
            if eg != (hh is not None) or eg != (seq in realized):
                rep.fail(degs)
            elif hh is not None and degree_sequence(hh) != seq:
                rep.fail(("realization", degs))
    return rep


def realization_table(v: int) -> dict[DegreeSequence, list[Graph]]:
    """Degree sequence -> every labelled graph on ``v`` vertices realizing it."""
    table: dict[DegreeSequence, list[Graph]] = defaultdict(list)
    for g in all_graphs(v):
        table[degree_sequence(g)].append(g)
    return table


def check_spider_sequences(max_v: int) -> OracleReport:
    """thin_spider_realizable agrees with "some realization is a thin spider", and
    every accepted sequence is reproduced by construct_thin_spider."""
    rep = OracleReport(f"spider-sequences-v<={max_v}")
    for v in range(max_v + 1):
        for seq, graphs in realization_table(v).items():
            rep.checked += 1
            truth = any(brute_force_recognize(g, "thin") is not None for g in graphs)
            w = thin_spider_realizable(seq)
            if truth != (w is not None):
                rep.fail(seq)
                continue
            if w is not None:
                g, p = construct_thin_spider(w)
                if degree_sequence(g) != seq or recognize_thin(g) != p:
                    rep.fail(("construction", seq))
    return rep


def check_duality(graphs, name="thin-thick-duality") -> OracleReport:
    """recognize_thick(g) is recognize_thin(complement(g)) with body and legs swapped."""
    rep = OracleReport(name)
    for g in graphs:
        rep.checked += 1
        thick = recognize_thick(g)
        thin_c = recognize_thin(complement(g))
        expected = None if thin_c is None else thin_c.swapped()
        if thick != expected:
            rep.fail((g.n, list(g.edges())))
    return rep


def run_selftest(max_n: int = 6) -> list[OracleReport]:
    graphs = [g for n in range(max_n + 1) for g in all_graphs(n)]
    return [
        check_spider_recognition(graphs, f"spider-recognition-n<={max_n}"),
        check_duality(graphs, f"thin-thick-duality-n<={max_n}"),
        check_p4_sparse(graphs, f"p4-sparse-n<={max_n}"),
        check_graphicality(max_n),
        check_spider_sequences(max_n),
    ]
