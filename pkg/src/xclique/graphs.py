"""Immutable simple-graph core: adjacency lists, I/O, components, bipartiteness,
and exhaustive enumeration of small connected graphs.

Vertices are 0-based ints internally; the text file format is 1-based
(DIMACS convention). Graph values never change after construction, so they
are safe to share across threads and to use as dict keys.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph construction or malformed graph data."""


class GraphParseError(GraphError):
    """Graph file rejected; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """Finite simple undirected graph with sorted adjacency lists.

    Invariants (enforced by the public constructor):
      * no self-loops, no parallel edges
      * u in adj[v]  iff  v in adj[u]
      * every adj[v] strictly ascending, sum of lengths == 2*m
    """

    __slots__ = ("n", "m", "adj", "_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        lists: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            lists[u].append(v)
            lists[v].append(u)
            m += 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in lists))
        object.__setattr__(self, "_bits", None)

    @classmethod
    def _raw(cls, n: int, adj: tuple[tuple[int, ...], ...], m: int) -> "Graph":
        # Trusted fast path for generators that construct valid sorted
        # adjacency directly; skips the O(n+m) validation pass.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "m", m)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_bits", None)
        return g

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]]) -> "Graph":
        """Build from adjacency lists (any order), validating symmetry."""
        n = len(adj)
        pairs = set()
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if not 0 <= v < n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"self-loop at vertex {u}")
                pairs.add((u, v))
        for u, v in pairs:
            if (v, u) not in pairs:
                raise GraphError(f"asymmetric adjacency: {u}->{v} without {v}->{u}")
        return cls(n, [(u, v) for (u, v) in pairs if u < v])

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return len(self.adj[v])

    def is_adjacent(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"vertex pair ({u}, {v}) out of range")
        a = self.adj[u]
        if len(self.adj[v]) < len(a):
            a, u, v = self.adj[v], v, u
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def neighbor_bits(self) -> tuple[int, ...]:
        """Per-vertex neighborhood bitmasks, cached (desk-scale helper)."""
        bits = self._bits
        if bits is None:
            bits = tuple(sum(1 << w for w in nbrs) for nbrs in self.adj)
            object.__setattr__(self, "_bits", bits)
        return bits


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def is_adjacent(g: Graph, u: int, v: int) -> bool:
    return g.is_adjacent(u, v)


def connected_components(g: Graph) -> list[list[int]]:
    """Partition of V into maximal connected parts, each sorted, ordered by
    smallest member."""
    seen = bytearray(g.n)
    out: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        queue = deque((s,))
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque((0,))
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == g.n


def is_bipartite(g: Graph) -> tuple[bool, list[int]]:
    """BFS 2-coloring.

    Returns (True, coloring) with colors in {0, 1}, or (False, walk) where
    walk is a closed odd walk: consecutive vertices adjacent, first == last,
    odd number of edges.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque((s,))
        while queue:
            u = queue.popleft()
            cu = color[u]
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = cu ^ 1
                    parent[v] = u
                    queue.append(v)
                elif color[v] == cu:
                    pu = [u]
                    while pu[-1] != s:
                        pu.append(parent[pu[-1]])
                    pv = [v]
                    while pv[-1] != s:
                        pv.append(parent[pv[-1]])
                    walk = pu[::-1] + pv  # s..u, v..s; edge (u,v) closes it
                    return False, walk
    return True, color


def _connected_bits(nbr: list[int], n: int) -> bool:
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= nbr[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def _graph_from_bits(n: int, nbr: list[int]) -> Graph:
    adj = []
    m2 = 0
    for v in range(n):
        row = []
        b = nbr[v]
        while b:
            low = b & -b
            row.append(low.bit_length() - 1)
            b ^= low
        m2 += len(row)
        adj.append(tuple(row))
    return Graph._raw(n, tuple(adj), m2 // 2)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple connected graph on n vertices, exactly once, in
    upper-triangle bitmask order (bit k is the k-th pair (i, j), i < j,
    lexicographic). No isomorphism reduction. Limited to n <= 7.
    """
    if not 1 <= n <= 7:
        raise GraphError("enumeration supported for 1 <= n <= 7")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        nbr = [0] * n
        mm = mask
        while mm:
            low = mm & -mm
            i, j = pairs[low.bit_length() - 1]
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i
            mm ^= low
        if _connected_bits(nbr, n):
            yield _graph_from_bits(n, nbr)


def read_graph_file(text: str) -> tuple[Graph, Optional[tuple[int, ...]]]:
    """Parse the graph file format; returns (graph, f) where f is the
    per-vertex clique-size vector carried by "f" lines, or None.

    Format (text, UTF-8, LF): a line "p <n> <m>", then m lines "e <u> <v>"
    with 1-based endpoints; comment lines start with "c"; optional lines
    "f <v> <k>" attach an expansion size to vertex v. If any f line is
    present, every vertex must receive one.
    """
    n = -1
    m_declared = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    fvals: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n != -1:
                raise GraphParseError("duplicate p line", lineno)
            if len(parts) != 3:
                raise GraphParseError("expected 'p <n> <m>'", lineno)
            try:
                n, m_declared = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError("non-integer counts in p line", lineno) from None
            if n < 0 or m_declared < 0:
                raise GraphParseError("negative counts in p line", lineno)
        elif tag == "e":
            if n == -1:
                raise GraphParseError("e line before p line", lineno)
            if len(parts) != 3:
                raise GraphParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError("non-integer endpoint", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", lineno)
            key = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if key in seen:
                raise GraphParseError(f"duplicate edge ({u}, {v})", lineno)
            seen.add(key)
            edges.append(key)
        elif tag == "f":
            if n == -1:
                raise GraphParseError("f line before p line", lineno)
            if len(parts) != 3:
                raise GraphParseError("expected 'f <v> <k>'", lineno)
            try:
                v, k = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError("non-integer f line", lineno) from None
            if not 1 <= v <= n:
                raise GraphParseError(f"vertex out of range 1..{n}", lineno)
            if v - 1 in fvals:
                raise GraphParseError(f"duplicate f line for vertex {v}", lineno)
            if k < 1:
                raise GraphParseError("expansion size must be >= 1", lineno)
            fvals[v - 1] = k
        else:
            raise GraphParseError(f"unknown line tag {tag!r}", lineno)
    if n == -1:
        raise GraphParseError("missing p line", 1)
    if len(edges) != m_declared:
        raise GraphParseError(
            f"p line declares {m_declared} edges, found {len(edges)}", 1
        )
    g = Graph(n, edges)
    f: Optional[tuple[int, ...]] = None
    if fvals:
        missing = [v for v in range(n) if v not in fvals]
        if missing:
            raise GraphParseError(
                f"f lines present but vertex {missing[0] + 1} has none", 1
            )
        f = tuple(fvals[v] for v in range(n))
    return g, f


def read_graph(text: str) -> Graph:
    return read_graph_file(text)[0]


def write_graph(g: Graph, f: Optional[Sequence[int]] = None) -> str:
    """Canonical text form: p line, then edges in lexicographic order,
    then f lines if given. 1-based ids, LF line endings."""
    out = [f"p {g.n} {g.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    if f is not None:
        if len(f) != g.n:
            raise GraphError("f vector length must equal vertex count")
        out.extend(f"f {v + 1} {k}" for v, k in enumerate(f))
    return "\n".join(out) + "\n"


def to_dot(g: Graph, clusters: Optional[Sequence[Sequence[int]]] = None,
           name: str = "G") -> str:
    """DOT export; vertex labels are 1-based ids. With clusters, each vertex
    group becomes a subgraph cluster (one per expanded clique)."""
    lines = [f"graph {name} {{"]
    if clusters is not None:
        for i, part in enumerate(clusters):
            lines.append(f"  subgraph cluster_{i} {{")
            for v in part:
                lines.append(f"    {v + 1};")
            lines.append("  }")
    else:
        for v in range(g.n):
            lines.append(f"  {v + 1};")
    for u, v in g.edges():
        lines.append(f"  {u + 1} -- {v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
