"""Simple undirected graphs over dense vertex ids, plus edge-list text I/O.

A :class:`Graph` is immutable. Its canonical storage is a CSR pair
(``indptr``, ``indices``) with every neighbor list sorted ascending; this is
the layout the compiled kernels consume. Neighbor sets and bitmasks are
derived lazily for the small-graph algorithms.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphParseError",
    "degree",
    "degree_sequence",
    "complement",
    "induced_subgraph",
    "disjoint_union",
    "join",
    "connected_components",
    "parse_graph",
    "serialize_graph",
    "read_graph",
    "write_graph",
]

INDPTR_DTYPE = np.int64
INDEX_DTYPE = np.int32


class GraphParseError(ValueError):
    """Malformed edge-list text. ``lineno`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Build one from an edge iterable (``Graph(4, [(0, 1), (1, 2), (2, 3)])``),
    from neighbor collections (:meth:`from_adjacency`) or from trusted CSR
    arrays (:meth:`from_csr`). Self-loops, duplicate edges and out-of-range
    ids raise ``ValueError``.

    ``labels`` optionally maps vertex ids to display names; it is carried
    through complement, induced subgraphs and serialization.
    """

    __slots__ = ("n", "indptr", "indices", "labels", "_adj", "_masks", "_hash")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Mapping[int, str] | None = None,
    ):
        n = int(n)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        indptr, indices = _csr_from_sets(nbrs)
        self._init(n, indptr, indices, labels)
        self._adj = tuple(frozenset(s) for s in nbrs)

    def _init(self, n, indptr, indices, labels):
        self.n = n
        self.indptr = indptr
        self.indices = indices
        self.indptr.flags.writeable = False
        self.indices.flags.writeable = False
        self.labels = _check_labels(labels, n)
        self._adj = None
        self._masks = None
        self._hash = None

    @classmethod
    def from_adjacency(
        cls, adjacency: Sequence[Iterable[int]], labels: Mapping[int, str] | None = None
    ) -> "Graph":
        """Build from per-vertex neighbor collections; symmetry is checked."""
        n = len(adjacency)
        nbrs = [frozenset(int(u) for u in a) for a in adjacency]
        for v, a in enumerate(nbrs):
            if v in a:
                raise ValueError(f"self-loop at vertex {v}")
            for u in a:
                if not 0 <= u < n:
                    raise ValueError(f"neighbor {u} of {v} out of range for n={n}")
                if v not in nbrs[u]:
                    raise ValueError(f"asymmetric adjacency: {u} in N({v}) but not vice versa")
        g = cls.__new__(cls)
        g._init(n, *_csr_from_sets(nbrs), labels)
        g._adj = tuple(nbrs)
        return g

    @classmethod
    def from_csr(
        cls,
        indptr,
        indices,
        labels: Mapping[int, str] | None = None,
        check: bool = True,
    ) -> "Graph":
        """Wrap CSR arrays. Rows must be sorted ascending.

        ``check=False`` skips the O(m log m) validation; only use it for
        arrays produced by this package's own constructors.
        """
        indptr = np.ascontiguousarray(indptr, dtype=INDPTR_DTYPE)
        indices = np.ascontiguousarray(indices, dtype=INDEX_DTYPE)
        n = len(indptr) - 1
        if n < 0:
            raise ValueError("indptr must have at least one entry")
        if check:
            _validate_csr(n, indptr, indices)
        g = cls.__new__(cls)
        g._init(n, indptr, indices, labels)
        return g

    @classmethod
    def from_edge_arrays(cls, n: int, u, v, labels: Mapping[int, str] | None = None) -> "Graph":
        """Vectorized constructor from parallel endpoint arrays."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.shape != v.shape:
            raise ValueError("endpoint arrays must have equal length")
        if len(u) and (min(u.min(), v.min()) < 0 or max(u.max(), v.max()) >= n):
            raise ValueError(f"edge endpoint out of range for n={n}")
        if (u == v).any():
            raise ValueError(f"self-loop at vertex {int(u[u == v][0])}")
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        key = lo * n + hi
        if len(np.unique(key)) != len(key):
            raise ValueError("duplicate edge")
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        order = np.lexsort((dst, src))
        indptr = np.zeros(n + 1, dtype=INDPTR_DTYPE)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls.from_csr(indptr, dst[order], labels, check=False)

    # basic queries

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        return v in self.adjacency[u]

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        if self._adj is None:
            ip = self.indptr.tolist()
            ix = self.indices.tolist()
            self._adj = tuple(frozenset(ix[ip[v] : ip[v + 1]]) for v in range(self.n))
        return self._adj

    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``u`` set iff ``u`` is a neighbor)."""
        if self._masks is None:
            out = []
            for a in self.adjacency:
                m = 0
                for u in a:
                    m |= 1 << u
                out.append(m)
            self._masks = tuple(out)
        return self._masks

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        ip = self.indptr.tolist()
        ix = self.indices.tolist()
        for u in range(self.n):
            for v in ix[ip[u] : ip[u + 1]]:
                if v > u:
                    yield u, v

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def _check_vertex(self, v) -> None:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self.n):
            raise ValueError(f"vertex {v!r} out of range for n={self.n}")

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.indices.tobytes(), self.indptr.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_labels(labels, n) -> dict[int, str]:
    out = {}
    for k, name in (labels or {}).items():
        k = int(k)
        if not 0 <= k < n:
            raise ValueError(f"label id {k} out of range for n={n}")
        out[k] = str(name)
    return out


def _csr_from_sets(nbrs: Sequence[Iterable[int]]) -> tuple[np.ndarray, np.ndarray]:
    rows = [sorted(a) for a in nbrs]
    indptr = np.zeros(len(rows) + 1, dtype=INDPTR_DTYPE)
    if rows:
        np.cumsum([len(r) for r in rows], out=indptr[1:])
    flat = [u for r in rows for u in r]
    return indptr, np.array(flat, dtype=INDEX_DTYPE)


def _validate_csr(n: int, indptr: np.ndarray, indices: np.ndarray) -> None:
    if indptr[0] != 0 or indptr[-1] != len(indices):
        raise ValueError("indptr must start at 0 and end at len(indices)")
    deg = np.diff(indptr)
    if (deg < 0).any():
        raise ValueError("indptr must be non-decreasing")
    if len(indices) == 0:
        return
    if indices.min() < 0 or indices.max() >= n:
        raise ValueError("neighbor id out of range")
    rows = np.repeat(np.arange(n, dtype=np.int64), deg)
    cols = indices.astype(np.int64)
    if (rows == cols).any():
        raise ValueError(f"self-loop at vertex {int(rows[rows == cols][0])}")
    fwd = rows * n + cols
    if (np.diff(fwd) <= 0).any():
        raise ValueError("neighbor lists must be strictly increasing (sorted, no duplicates)")
    if not np.array_equal(fwd, np.sort(cols * n + rows)):
        raise ValueError("adjacency is not symmetric")


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def degree_sequence(g: Graph):
    """Counts form ``(n_0, n_1, ...)`` of the degrees of ``g``."""
    from .degseq import DegreeSequence

    if g.n == 0:
        return DegreeSequence(())
    return DegreeSequence(tuple(np.bincount(g.degrees()).tolist()))


def complement(g: Graph) -> Graph:
    """Same vertex set, exactly the non-edges of ``g``. Labels are kept."""
    n = g.n
    if n <= 62:
        full = (1 << n) - 1
        rows = []
        for v, mk in enumerate(g.masks()):
            c = full & ~mk & ~(1 << v)
            rows.append([u for u in range(n) if c >> u & 1])
        h = Graph.__new__(Graph)
        h._init(n, *_csr_from_sets(rows), g.labels)
        return h
    deg = g.degrees()
    cdeg = (n - 1) - deg
    indptr = np.zeros(n + 1, dtype=INDPTR_DTYPE)
    np.cumsum(cdeg, out=indptr[1:])
    indices = np.empty(int(indptr[-1]), dtype=INDEX_DTYPE)
    keep = np.empty(n, dtype=bool)
    for v in range(n):
        keep.fill(True)
        keep[g.indices[g.indptr[v] : g.indptr[v + 1]]] = False
        keep[v] = False
        indices[indptr[v] : indptr[v + 1]] = np.flatnonzero(keep)
    return Graph.from_csr(indptr, indices, g.labels, check=False)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """``a`` on ids ``0..a.n-1`` and ``b`` shifted to follow it, no edges between."""
    indptr = np.concatenate([a.indptr, a.indptr[-1] + b.indptr[1:]])
    indices = np.concatenate([a.indices, b.indices + a.n]).astype(INDEX_DTYPE)
    return Graph.from_csr(indptr, indices, check=False)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    return complement(disjoint_union(complement(a), complement(b)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertices`` with ids renumbered by ascending old id.

    Returns the graph and the old->new id mapping.
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        g._check_vertex(v)
    remap = {old: new for new, old in enumerate(chosen)}
    adj = g.adjacency
    rows = [[remap[u] for u in adj[old] if u in remap] for old in chosen]
    labels = {remap[k]: name for k, name in g.labels.items() if k in remap}
    h = Graph.__new__(Graph)
    h._init(len(chosen), *_csr_from_sets(rows), labels)
    return h, remap


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    ip = g.indptr.tolist()
    ix = g.indices.tolist()
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in ix[ip[v] : ip[v + 1]]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(frozenset(comp))
    return comps


# text I/O


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Comment lines start with ``#``; ``# label <id> <name>`` lines attach
    names. The first data line is ``n m`` followed by exactly ``m`` lines
    ``u v``.
    """
    labels: dict[int, str] = {}
    label_lines: dict[int, int] = {}
    header = None
    n = m = 0
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(None, 2)
            if parts and parts[0] == "label":
                if len(parts) < 3:
                    raise GraphParseError("label line needs '# label <id> <name>'", lineno)
                lid, name = _parse_int(parts[1], lineno), parts[2]
                if lid in labels:
                    raise GraphParseError(f"duplicate label for vertex {lid}", lineno)
                labels[lid] = name.strip()
                label_lines[lid] = lineno
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphParseError(f"header must be 'n m', got {line!r}", lineno)
            n, m = (_parse_int(f, lineno) for f in fields)
            if n < 0 or m < 0:
                raise GraphParseError("n and m must be non-negative", lineno)
            header = lineno
            continue
        if len(fields) != 2:
            raise GraphParseError(f"edge line must be 'u v', got {line!r}", lineno)
        if len(edges) == m:
            raise GraphParseError(f"more than the declared {m} edges", lineno)
        u, v = (_parse_int(f, lineno) for f in fields)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex id out of range for n={n}: {u} {v}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphParseError("missing 'n m' header line")
    if len(edges) != m:
        raise GraphParseError(f"expected {m} edges, found {len(edges)}")
    for lid, lineno in label_lines.items():
        if not 0 <= lid < n:
            raise GraphParseError(f"label id {lid} out of range for n={n}", lineno)
    return Graph(n, edges, labels)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {tok!r}", lineno) from None


def serialize_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    """Edge-list text: comments, label lines, ``n m``, then sorted ``u v`` lines."""
    out = [f"# {c}" for c in comments]
    out += [f"# label {k} {g.labels[k]}" for k in sorted(g.labels)]
    out.append(f"{g.n} {g.m}")
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g, comments))
