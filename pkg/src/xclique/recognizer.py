"""Linear-time recognition of expanded-clique graphs with root certificates.

The driver handles cycles by table, then sweeps vertices in id order: an
unmarked vertex of degree >= 3 triggers a clique scan (simplicial /
1-simplicial test that also discovers the expanded clique and the outsider
pairing), a vertex of degree <= 2 triggers a chain walk. An accepted graph
gets its vertex set partitioned into cliques, the quotient root computed,
and the recovered f attached; a rejected graph gets a reason plus the
offending vertices.

Total work is O(n + m): every vertex is marked once, a clique of size k is
scanned in O(k^2) which telescopes to O(m) because members have degree k-1
or k, and chain walks touch each degree-2 vertex once.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from .graphs import Graph, GraphError, connected_components


class Reason(str, Enum):
    BAD_CHAIN = "bad-chain"
    NOT_SIMPLICIAL_OR_1SIMPLICIAL = "not-simplicial-or-1-simplicial"
    ODD_CYCLE = "odd-cycle"
    C4_CYCLE = "c4"


@dataclass(frozen=True)
class Rejection:
    reason: Reason
    vertices: tuple[int, ...]


@dataclass
class RootCertificate:
    """Witness that the recognized graph is the expansion of (quotient, f).

    All vertex arrays are indexed by the recognized graph's own ids.
    cliques[i] is part i (sorted); clique_of maps a vertex to its part;
    port_to[v] names the part reached by v's single outside edge (None for
    simplicial vertices); slot_index numbers the simplicial vertices inside
    their part.
    """

    cliques: tuple[tuple[int, ...], ...]
    quotient: Graph
    f: tuple[int, ...]
    clique_of: tuple[int, ...]
    port_to: tuple[Optional[int], ...]
    slot_index: tuple[Optional[int], ...]

    def role(self, v: int) -> tuple[str, int]:
        j = self.port_to[v]
        if j is not None:
            return ("port", j)
        return ("slot", self.slot_index[v])

    def witness_map(self) -> tuple[tuple[int, tuple[str, int]], ...]:
        return tuple(
            (self.clique_of[v], self.role(v)) for v in range(len(self.clique_of))
        )


RecognitionResult = Union[RootCertificate, Rejection]


def counting_sort_adjacency(adj: Sequence[Sequence[int]]) -> list[list[int]]:
    """Sort all adjacency lists ascending in O(n + m): one bucket pass.

    For i ascending, append i to the bucket of each of its neighbors; bucket
    j then reads out the neighbors of j in ascending order. Requires
    symmetric adjacency (u lists v iff v lists u).
    """
    n = len(adj)
    buckets: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        for w in adj[u]:
            buckets[w].append(u)
    return buckets


class RecognizerState:
    """Mutable per-run working set: marks, outsider pairing, discovered
    cliques and chain runs, and the instrumentation step counter."""

    __slots__ = ("adj", "marked", "outsider", "clique_of", "cliques", "runs", "steps")

    def __init__(self, adj: Sequence[Sequence[int]]):
        n = len(adj)
        self.adj = adj
        self.marked = bytearray(n)
        self.outsider = [-1] * n
        self.clique_of = [-1] * n
        self.cliques: list[list[int]] = []
        self.runs: list[tuple[list[int], Optional[int], Optional[int]]] = []
        self.steps = 3 * n

    def _record_pair(self, a: int, b: int) -> bool:
        """Register b as a's outsider and vice versa; fails on conflict with
        an earlier, different registration."""
        if self.outsider[a] not in (-1, b) or self.outsider[b] not in (-1, a):
            return False
        self.outsider[a] = b
        self.outsider[b] = a
        return True


def is_simp_or_1simp(h: Graph, u: int, state: RecognizerState) -> bool:
    """Clique scan for a vertex of degree >= 3: determine u's outsider (or
    reuse a previously registered one), take the candidate clique N[u]
    minus the outsider, verify it is a clique whose members each have at
    most one consistent neighbor outside it, mark all members, and record
    the clique. False iff some involved vertex cannot be simplicial or
    1-simplicial in any expansion."""
    adj = state.adj
    nbrs = adj[u]
    out = state.outsider[u]
    if out == -1:
        w1, w2, w3 = nbrs[0], nbrs[1], nbrs[2]
        w1set = set(adj[w1])
        state.steps += len(w1set)
        if w2 not in w1set:
            out = w1 if w3 not in w1set else w2
        else:
            cands = [w for w in nbrs if w != w1 and w not in w1set]
            state.steps += len(nbrs)
            if len(cands) > 1:
                return False
            out = cands[0] if cands else -1
        if out != -1 and not state._record_pair(u, out):
            return False
    members = [w for w in nbrs if w != out]
    insort(members, u)
    kset = set(members)
    ksize = len(members)
    for z in members:
        state.steps += 1
        if z == u:
            continue
        if state.clique_of[z] != -1:
            return False
        az = adj[z]
        if len(az) > ksize:
            return False
        extra = -1
        inside = 0
        for w in az:
            if w in kset:
                inside += 1
            elif extra == -1:
                extra = w
            else:
                return False
        state.steps += len(az)
        if inside != ksize - 1:
            return False
        if extra != -1:
            if not state._record_pair(z, extra):
                return False
        elif state.outsider[z] != -1:
            return False
        state.marked[z] = 1
    idx = len(state.cliques)
    for z in members:
        state.clique_of[z] = idx
    state.cliques.append(members)
    return True


def is_good_chain(h: Graph, u: int, state: RecognizerState) -> bool:
    """Chain walk for a vertex of degree <= 2: collect the maximal run of
    degree <= 2 vertices through u, mark them, and decide goodness: good if
    an end of the chain is a pendant vertex, if the count of internal
    (degree-2) vertices is even, or if the run is a lone degree-2 vertex
    between two adjacent hubs (that trio is a 3-clique, not a chain)."""
    adj = state.adj
    marked = state.marked
    run = [u]
    q = 1 if len(adj[u]) == 2 else 0
    good = len(adj[u]) <= 1
    anchors: list[Optional[int]] = []
    for direction, w in enumerate(adj[u]):
        prev, cur = u, w
        seg: list[int] = []
        append = seg.append
        while True:
            nbrs = adj[cur]
            d = len(nbrs)
            if d >= 3:
                anchors.append(cur)
                break
            marked[cur] = 1
            append(cur)
            if d <= 1:
                good = True
                anchors.append(None)
                break
            a, b = nbrs
            prev, cur = cur, (b if a == prev else a)
        q += len(seg)
        state.steps += len(seg) + 1
        if direction == 0:
            run = seg[::-1] + run
        else:
            run = run + seg
    q -= sum(1 for x in anchors if x is None)  # pendant ends are not internal
    while len(anchors) < 2:
        anchors.append(None)
    left, right = anchors[0], anchors[1]
    state.runs.append((run, left, right))
    if good or q % 2 == 0:
        return True
    if (
        q == 1
        and left is not None
        and right is not None
        and left != right
        and h.is_adjacent(left, right)
    ):
        return True
    return False


def _cycle_order(h: Graph) -> list[int]:
    """Vertex order around a 2-regular connected graph, starting at 0."""
    order = [0]
    prev, cur = -1, 0
    for _ in range(h.n - 1):
        a, b = h.adj[cur]
        nxt = b if a == prev else a
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def _certificate_from_parts(h: Graph, parts: list[list[int]]) -> Optional[RootCertificate]:
    """Assemble quotient, f and roles from a partition into cliques; None
    means some pair of parts is joined by two edges, i.e. the graph
    contains an induced C4 and must be rejected."""
    n = h.n
    k = len(parts)
    clique_of = [-1] * n
    for i, part in enumerate(parts):
        for v in part:
            clique_of[v] = i
    port_to: list[Optional[int]] = [None] * n
    slot_index: list[Optional[int]] = [None] * n
    adj = h.adj
    seen_pairs: set[int] = set()
    qadj: list[list[int]] = [[] for _ in range(k)]
    qm = 0
    for v in range(n):
        pv = clique_of[v]
        for w in adj[v]:
            if w < v:
                continue
            pw = clique_of[w]
            if pv == pw:
                continue
            key = pv * k + pw if pv < pw else pw * k + pv
            if key in seen_pairs:
                return None
            seen_pairs.add(key)
            qm += 1
            port_to[v] = pw
            port_to[w] = pv
            qadj[pv].append(pw)
            qadj[pw].append(pv)
    for part in parts:
        slot = 0
        for v in part:
            if port_to[v] is None:
                slot_index[v] = slot
                slot += 1
    for row in qadj:
        row.sort()
    quotient = Graph._raw(k, tuple(tuple(row) for row in qadj), qm)
    return RootCertificate(
        cliques=tuple(tuple(p) for p in parts),
        quotient=quotient,
        f=tuple(len(p) for p in parts),
        clique_of=tuple(clique_of),
        port_to=tuple(port_to),
        slot_index=tuple(slot_index),
    )


def _quotient_conflict_witness(h: Graph, parts: list[list[int]]) -> tuple[int, ...]:
    """The induced C4 behind a doubled quotient edge: two distinct cross
    edges between one pair of parts, in cycle order."""
    n = h.n
    clique_of = [-1] * n
    for i, part in enumerate(parts):
        for v in part:
            clique_of[v] = i
    first: dict[tuple[int, int], tuple[int, int]] = {}
    for v in range(n):
        pv = clique_of[v]
        for w in h.adj[v]:
            if w < v or clique_of[w] == pv:
                continue
            pw = clique_of[w]
            key = (pv, pw) if pv < pw else (pw, pv)
            if key in first:
                a, b = first[key]
                # cycle a-b-w-v-a when a, v share a part, else a-b-v-w-a
                if clique_of[a] == clique_of[v]:
                    return (a, b, w, v)
                return (a, b, v, w)
            first[key] = (v, w)
    return ()


def _recognize_counted(h: Graph) -> tuple[RecognitionResult, int]:
    n = h.n
    if n == 0:
        raise GraphError("recognition requires at least one vertex")
    if n == 1:
        return _certificate_from_parts(h, [[0]]), 1
    if n == 2:
        return _certificate_from_parts(h, [[0, 1]]), 2
    if all(len(a) == 2 for a in h.adj):
        # connected and 2-regular: a cycle
        if n == 4:
            return Rejection(Reason.C4_CYCLE, tuple(range(4))), n
        if n >= 5 and n % 2 == 1:
            return Rejection(Reason.ODD_CYCLE, tuple(range(n))), n
        if n == 3:
            return _certificate_from_parts(h, [[0, 1, 2]]), n
        order = _cycle_order(h)
        parts = [
            sorted((order[i], order[i + 1])) for i in range(0, n, 2)
        ]
        return _certificate_from_parts(h, parts), 2 * n

    sorted_adj = counting_sort_adjacency(h.adj)
    state = RecognizerState(sorted_adj)
    state.steps += n + 2 * h.m
    marked = state.marked
    for u in range(n):
        if marked[u]:
            continue
        marked[u] = 1
        if len(sorted_adj[u]) >= 3:
            if not is_simp_or_1simp(h, u, state):
                loc = (u,) if state.outsider[u] == -1 else (u, state.outsider[u])
                return Rejection(Reason.NOT_SIMPLICIAL_OR_1SIMPLICIAL, loc), state.steps
        else:
            if not is_good_chain(h, u, state):
                run, left, right = state.runs[-1]
                loc = tuple(x for x in (left, *run, right) if x is not None)
                return Rejection(Reason.BAD_CHAIN, loc), state.steps

    parts = state.cliques
    assigned = state.clique_of
    no_cliques = not parts  # nothing was absorbed, runs are whole
    for run, left, right in state.runs:
        rem = run if no_cliques else [v for v in run if assigned[v] == -1]
        if not rem:
            continue
        state.steps += len(rem)
        # consecutive run members are adjacent by the walk; only a partially
        # absorbed run (invalid input) can break that
        check_pairs = len(rem) != len(run)
        if left is None and right is not None:
            rem.reverse()
        idx = len(parts)
        for a, b in zip(rem[0::2], rem[1::2]):
            if check_pairs and not h.is_adjacent(a, b):
                return Rejection(Reason.BAD_CHAIN, tuple(run)), state.steps
            parts.append([a, b] if a < b else [b, a])
            assigned[a] = idx
            assigned[b] = idx
            idx += 1
        if len(rem) % 2 == 1:
            v = rem[-1]
            if len(sorted_adj[v]) > 1:
                return Rejection(Reason.BAD_CHAIN, tuple(run)), state.steps
            idx = len(parts)
            parts.append([v])
            assigned[v] = idx
    for v in range(n):
        if assigned[v] == -1:
            return Rejection(Reason.NOT_SIMPLICIAL_OR_1SIMPLICIAL, (v,)), state.steps

    state.steps += n + h.m
    cert = _certificate_from_parts(h, parts)
    if cert is None:
        return (
            Rejection(Reason.C4_CYCLE, _quotient_conflict_witness(h, parts)),
            state.steps,
        )
    return cert, state.steps


def recognize(h: Graph) -> RecognitionResult:
    """Decide whether a connected graph is an expanded-clique graph.

    Precondition: h is connected (use recognize_multi for the general
    case). Returns a RootCertificate on acceptance, a Rejection naming the
    violated condition otherwise.
    """
    return _recognize_counted(h)[0]


def recognize_with_steps(h: Graph) -> tuple[RecognitionResult, int]:
    """recognize plus the instrumentation step count, for the linearity
    benchmarks."""
    return _recognize_counted(h)


@dataclass
class ComponentResult:
    """One component's outcome. vertices maps the component subgraph's
    local ids (positions) back to the original graph; certificates are in
    local ids, rejections already translated to original ids."""

    vertices: tuple[int, ...]
    result: RecognitionResult

    def global_cliques(self) -> tuple[tuple[int, ...], ...]:
        assert isinstance(self.result, RootCertificate)
        return tuple(
            tuple(self.vertices[v] for v in part) for part in self.result.cliques
        )


@dataclass
class MultiRecognition:
    components: list[ComponentResult]

    @property
    def accepted(self) -> bool:
        return all(isinstance(c.result, RootCertificate) for c in self.components)

    def first_rejection(self) -> Optional[ComponentResult]:
        for c in self.components:
            if isinstance(c.result, Rejection):
                return c
        return None


def recognize_multi(h: Graph) -> MultiRecognition:
    """Per-component recognition; a graph is expanded-clique iff every
    component is."""
    out = []
    for comp in connected_components(h):
        local = {v: i for i, v in enumerate(comp)}
        sub = Graph._raw(
            len(comp),
            tuple(tuple(local[w] for w in h.adj[v]) for v in comp),
            sum(len(h.adj[v]) for v in comp) // 2,
        )
        res = recognize(sub)
        if isinstance(res, Rejection):
            res = Rejection(res.reason, tuple(comp[v] for v in res.vertices))
        out.append(ComponentResult(tuple(comp), res))
    return MultiRecognition(out)


def verify_certificate(h: Graph, cert: RootCertificate) -> bool:
    """Check every certificate invariant directly against h and confirm the
    re-expansion reproduces E(h) exactly. Raises GraphError if the parts do
    not form a partition of V(h); returns False on any other violation.

    Independent of the recognizer internals: plain set arithmetic over the
    definition's clauses.
    """
    n = h.n
    part_of = [-1] * n
    for i, part in enumerate(cert.cliques):
        for v in part:
            if not 0 <= v < n or part_of[v] != -1:
                raise GraphError("certificate parts are not a partition of V")
            part_of[v] = i
    if any(p == -1 for p in part_of):
        raise GraphError("certificate parts are not a partition of V")

    adjsets = [set(a) for a in h.adj]
    quotient_pairs: dict[tuple[int, int], int] = {}
    for i, part in enumerate(cert.cliques):
        pset = set(part)
        for v in part:
            if not pset - {v} <= adjsets[v]:
                return False  # part is not a clique
            outside = adjsets[v] - pset
            if len(outside) > 1:
                return False
            if outside:
                w = next(iter(outside))
                if cert.port_to[v] != part_of[w]:
                    return False
                if v < w:
                    key = (i, part_of[w]) if i < part_of[w] else (part_of[w], i)
                    quotient_pairs[key] = quotient_pairs.get(key, 0) + 1
                    if quotient_pairs[key] > 1:
                        return False
            else:
                if cert.port_to[v] is not None or cert.slot_index[v] is None:
                    return False
    q = cert.quotient
    if q.n != len(cert.cliques) or set(q.edges()) != set(quotient_pairs):
        return False
    if cert.f != tuple(len(p) for p in cert.cliques):
        return False
    if any(cert.f[i] < len(q.adj[i]) for i in range(q.n)):
        return False
    # edge accounting: clique edges plus exactly one edge per quotient edge
    if h.m != sum(k * (k - 1) // 2 for k in cert.f) + q.m:
        return False
    return True


def certificate_from_labeling(root: Graph, labeling) -> RootCertificate:
    """Turn an ExpansionLabeling (from builders.expand) into the equivalent
    RootCertificate over the expansion's vertex ids."""
    return RootCertificate(
        cliques=tuple(tuple(part) for part in labeling.cliques),
        quotient=root,
        f=tuple(len(p) for p in labeling.cliques),
        clique_of=tuple(labeling.clique_of),
        port_to=tuple(labeling.port_to),
        slot_index=tuple(labeling.slot_index),
    )
