"""Constructions: expanded-clique graphs from (G, f) with full labelings,
plus the generator families (Sierpinski, line graph, subdivision,
subdivided-line, paths/cycles/completes).

Labeling convention: the clique for root vertex i occupies a contiguous id
block; within the block, ports toward neighbors j1 < j2 < ... come first in
that order, then the extra (simplicial) slots. Deterministic by design so
goldens are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, GraphError


@dataclass(frozen=True)
class ExpansionSpec:
    """Per-vertex clique sizes f with f(v) >= max(1, deg(v))."""

    values: tuple[int, ...]

    @classmethod
    def uniform(cls, g: Graph, k: int) -> "ExpansionSpec":
        return cls(tuple([k] * g.n))

    @classmethod
    def degrees(cls, g: Graph) -> "ExpansionSpec":
        return cls(tuple(len(a) for a in g.adj))

    def validate(self, g: Graph) -> None:
        if len(self.values) != g.n:
            raise GraphError("spec length must equal vertex count")
        for v, k in enumerate(self.values):
            if k < 1:
                raise GraphError(f"f({v}) = {k} < 1; empty cliques are rejected")
            if k < len(g.adj[v]):
                raise GraphError(f"f({v}) = {k} < deg({v}) = {len(g.adj[v])}")


@dataclass
class ExpansionLabeling:
    """Maps between a root (G, f) and its expansion H.

    clique_of[h]  -> root vertex whose clique contains h
    cliques[i]    -> the id block of root vertex i (ports first, then slots)
    port_to[h]    -> root neighbor j if h is the port of its clique toward j,
                     else None (simplicial slot)
    slot_index[h] -> 0-based slot number for simplicial vertices, else None
    port_of[(i,j)] (root edge, i < j) -> (h in V_i, h in V_j), the single
                     H-edge realizing that root edge
    """

    clique_of: tuple[int, ...]
    cliques: tuple[tuple[int, ...], ...]
    port_to: tuple[Optional[int], ...]
    slot_index: tuple[Optional[int], ...]
    port_of: dict[tuple[int, int], tuple[int, int]]

    def role(self, h: int) -> tuple[str, int]:
        j = self.port_to[h]
        if j is not None:
            return ("port", j)
        return ("slot", self.slot_index[h])


def expand(g: Graph, spec: ExpansionSpec) -> tuple[Graph, ExpansionLabeling]:
    """Expanded-clique graph of (g, spec): each root vertex i becomes a
    clique of f(i) vertices; each root edge becomes one edge between the
    dedicated ports."""
    spec.validate(g)
    f = spec.values
    start = [0] * (g.n + 1)
    for i in range(g.n):
        start[i + 1] = start[i] + f[i]
    total = start[g.n]

    clique_of = [0] * total
    port_to: list[Optional[int]] = [None] * total
    slot_index: list[Optional[int]] = [None] * total
    cliques = []
    port_id: dict[tuple[int, int], int] = {}
    for i in range(g.n):
        base = start[i]
        block = tuple(range(base, base + f[i]))
        cliques.append(block)
        for h in block:
            clique_of[h] = i
        for r, j in enumerate(g.adj[i]):
            port_to[base + r] = j
            port_id[(i, j)] = base + r
        for s in range(len(g.adj[i]), f[i]):
            slot_index[base + s] = s - len(g.adj[i])

    partner = [-1] * total
    port_of: dict[tuple[int, int], tuple[int, int]] = {}
    for i, j in g.edges():
        hi, hj = port_id[(i, j)], port_id[(j, i)]
        partner[hi] = hj
        partner[hj] = hi
        port_of[(i, j)] = (hi, hj)

    adj = []
    m = 0
    for i in range(g.n):
        base, k = start[i], f[i]
        for h in range(base, base + k):
            row = [x for x in range(base, base + k) if x != h]
            p = partner[h]
            if p >= 0:
                if p < base:
                    row.insert(0, p)
                else:
                    row.append(p)
            m += len(row)
            adj.append(tuple(row))
    h_graph = Graph._raw(total, tuple(adj), m // 2)
    labeling = ExpansionLabeling(
        clique_of=tuple(clique_of),
        cliques=tuple(cliques),
        port_to=tuple(port_to),
        slot_index=tuple(slot_index),
        port_of=port_of,
    )
    return h_graph, labeling


def inflate(g: Graph) -> tuple[Graph, ExpansionLabeling]:
    """Expansion with f = degree sequence; rejects isolated vertices."""
    if g.n == 0 or g.min_degree() < 1:
        raise GraphError("inflation requires minimum degree >= 1")
    return expand(g, ExpansionSpec.degrees(g))


def k_expand(g: Graph, k: int) -> tuple[Graph, ExpansionLabeling]:
    """Expansion with f == k; requires k >= max(1, max degree)."""
    if k < 1 or k < g.max_degree():
        raise GraphError(f"k = {k} must be >= max degree {g.max_degree()} and >= 1")
    return expand(g, ExpansionSpec.uniform(g, k))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path requires n >= 1")
    adj = tuple(
        tuple(x for x in (v - 1, v + 1) if 0 <= x < n) for v in range(n)
    )
    return Graph._raw(n, adj, n - 1)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle requires n >= 3")
    adj = tuple(tuple(sorted(((v - 1) % n, (v + 1) % n))) for v in range(n))
    return Graph._raw(n, adj, n)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph requires n >= 1")
    adj = tuple(tuple(x for x in range(n) if x != v) for v in range(n))
    return Graph._raw(n, adj, n * (n - 1) // 2)


_SIERPINSKI_CAP = 5_000_000


def sierpinski(p: int, q: int) -> Graph:
    """Sierpinski graph S(p, q): vertices are the p-tuples over {1..q}, id =
    base-q value of the tuple (digits shifted to 0..q-1), edges per the
    recursive adjacency rule (blocks of S(p-1, q) plus one connector edge
    between copy s and copy t for each pair s != t)."""
    if p < 1 or q < 1:
        raise GraphError("sierpinski requires p >= 1 and q >= 1")
    n = q**p
    if n > _SIERPINSKI_CAP:
        raise GraphError(f"S({p},{q}) has {n} vertices; exceeds generator cap")
    edges: list[tuple[int, int]] = []
    # rep(x, r): value of digit x repeated r times in base q
    for h in range(1, p + 1):
        tail = p - h
        if q > 1:
            repunit = (q**tail - 1) // (q - 1)
        else:
            repunit = tail  # q == 1: digits all 0, value 0; loop below is empty
        block = q**tail
        for prefix in range(q ** (h - 1)):
            head = prefix * q
            for a in range(q):
                ua = (head + a) * block
                for b in range(a + 1, q):
                    edges.append((ua + b * repunit, (head + b) * block + a * repunit))
    return Graph(n, edges)


def line_graph(g: Graph) -> Graph:
    """L(g): one vertex per edge of g (in lexicographic edge order), two
    vertices adjacent iff the edges share an endpoint."""
    if g.m < 1:
        raise GraphError("line graph requires at least one edge")
    edge_ids: dict[tuple[int, int], int] = {}
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges()):
        edge_ids[(u, v)] = idx
        incident[u].append(idx)
        incident[v].append(idx)
    lg_edges = []
    for ids in incident:
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                a, b = ids[i], ids[j]
                lg_edges.append((a, b) if a < b else (b, a))
    return Graph(g.m, lg_edges)


def subdivision(g: Graph) -> Graph:
    """S(g): each edge (u, v) replaced by a new vertex x adjacent to u and v.
    Original ids keep 0..n-1; the vertex for the k-th edge is n + k."""
    edges = []
    for k, (u, v) in enumerate(g.edges()):
        x = g.n + k
        edges.append((u, x))
        edges.append((v, x))
    return Graph(g.n + g.m, edges)


def subdivided_line_graph(g: Graph) -> Graph:
    """L(S(g)); isomorphic to expand(g, degrees) via the port correspondence
    (edge (u, x_uv) of S(g) <-> port of u toward v)."""
    if g.m < 1:
        raise GraphError("subdivided-line graph requires at least one edge")
    return line_graph(subdivision(g))
