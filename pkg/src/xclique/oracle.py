"""Brute-force detectors for the forbidden structures (claw, diamond, C4,
butterfly, odd hole, bad chain) and the definition-level characterization
checker. Exhaustive over vertex tuples; meant for desk-scale refereeing of
the linear-time recognizer, not for production-size inputs.

Witness determinism: detectors return the first witness under the stated
scan order (ascending vertex ids / lexicographic subsets), so goldens are
stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

from .graphs import Graph, GraphError


class Pattern(str, Enum):
    CLAW = "claw"
    DIAMOND = "diamond"
    C4 = "c4"
    BUTTERFLY = "butterfly"
    ODD_HOLE = "odd-hole"
    BAD_CHAIN = "bad-chain"


class BudgetExceeded(GraphError):
    """Search refused: instance larger than the enumeration budget."""


@dataclass(frozen=True)
class ForbiddenWitness:
    """An induced occurrence of a forbidden pattern.

    Vertex-list conventions: claw = (center, leaf, leaf, leaf); diamond,
    c4 and butterfly = sorted vertex set; odd hole = cycle order starting
    at its smallest vertex; bad chain = (end, internal..., end) in chain
    order.
    """

    kind: Pattern
    vertices: tuple[int, ...]


def find_claw(h: Graph) -> Optional[ForbiddenWitness]:
    bits = h.neighbor_bits()
    for v in range(h.n):
        nbrs = h.adj[v]
        if len(nbrs) < 3:
            continue
        for ia in range(len(nbrs) - 2):
            a = nbrs[ia]
            ba = bits[a]
            for ib in range(ia + 1, len(nbrs) - 1):
                b = nbrs[ib]
                if ba >> b & 1:
                    continue
                cand = [c for c in nbrs[ib + 1:]
                        if not (ba >> c & 1) and not (bits[b] >> c & 1)]
                if cand:
                    return ForbiddenWitness(Pattern.CLAW, (v, a, b, cand[0]))
    return None


def _induced_edge_count(bits, subset) -> int:
    cnt = 0
    for i in range(len(subset)):
        bi = bits[subset[i]]
        for j in range(i + 1, len(subset)):
            cnt += bi >> subset[j] & 1
    return cnt


def find_diamond(h: Graph) -> Optional[ForbiddenWitness]:
    # 4 vertices inducing exactly 5 edges (K4 minus one edge)
    bits = h.neighbor_bits()
    for quad in combinations(range(h.n), 4):
        if _induced_edge_count(bits, quad) == 5:
            return ForbiddenWitness(Pattern.DIAMOND, quad)
    return None


def find_c4(h: Graph) -> Optional[ForbiddenWitness]:
    # 4 vertices, 4 induced edges, all induced degrees 2
    bits = h.neighbor_bits()
    for quad in combinations(range(h.n), 4):
        mask = 0
        for v in quad:
            mask |= 1 << v
        degs = [(bits[v] & mask).bit_count() for v in quad]
        if degs == [2, 2, 2, 2]:
            return ForbiddenWitness(Pattern.C4, quad)
    return None


def find_butterfly(h: Graph) -> Optional[ForbiddenWitness]:
    # 5 vertices, 6 induced edges, induced degrees {4, 2, 2, 2, 2}:
    # two triangles sharing exactly the center
    bits = h.neighbor_bits()
    for five in combinations(range(h.n), 5):
        mask = 0
        for v in five:
            mask |= 1 << v
        degs = sorted((bits[v] & mask).bit_count() for v in five)
        if degs == [2, 2, 2, 2, 4]:
            return ForbiddenWitness(Pattern.BUTTERFLY, five)
    return None


DEFAULT_ODD_HOLE_BUDGET = 12


def find_odd_hole(h: Graph, budget: int = DEFAULT_ODD_HOLE_BUDGET) -> Optional[ForbiddenWitness]:
    """Shortest induced odd cycle of length >= 5, or None. Iterative
    deepening over the cycle length with a DFS over induced paths anchored
    at the cycle's smallest vertex; hard budget on n."""
    if h.n > budget:
        raise BudgetExceeded(f"odd-hole search refused for n={h.n} > budget={budget}")
    bits = h.neighbor_bits()
    n = h.n

    for length in range(5, n + 1, 2):
        for v0 in range(n):
            b0 = 1 << v0
            # path = [v0, ...]; every vertex beyond v0 has id > v0
            stack: list[int] = [v0]
            path_mask = b0
            hole = _extend_hole(h, bits, stack, path_mask, v0, length)
            if hole is not None:
                return ForbiddenWitness(Pattern.ODD_HOLE, tuple(hole))
    return None


def _extend_hole(h: Graph, bits, path: list[int], path_mask: int,
                 v0: int, length: int) -> Optional[list[int]]:
    last = path[-1]
    if len(path) == length:
        if bits[last] >> v0 & 1 and (path[1] < path[-1]):
            return list(path)
        return None
    # forbidden neighbors for an induced extension: all path vertices except
    # `last`; v0 stays forbidden until the closing step
    blocked = path_mask & ~(1 << last)
    if len(path) + 1 == length:
        blocked &= ~(1 << v0)
    for w in h.adj[last]:
        if w <= v0 or path_mask >> w & 1:
            continue
        if bits[w] & blocked:
            continue
        path.append(w)
        res = _extend_hole(h, bits, path, path_mask | (1 << w), v0, length)
        path.pop()
        if res is not None:
            return res
    return None


def _chain_runs(h: Graph):
    """Maximal degree-2 runs: yields (run, anchor_left, anchor_right) where
    run lists the chain's degree <= 2 vertices in order and anchors are the
    adjacent degree >= 3 terminals (None when that end is a pendant).
    Pure-cycle components yield nothing."""
    adj = h.adj
    visited = bytearray(h.n)
    for u in range(h.n):
        if visited[u] or len(adj[u]) != 2:
            continue
        visited[u] = 1
        run = [u]
        anchors: list[Optional[int]] = []
        is_cycle = False
        for direction, w in enumerate(adj[u]):
            prev, cur = u, w
            seg: list[int] = []
            while True:
                d = len(adj[cur])
                if d >= 3:
                    anchors.append(cur)
                    break
                if cur == u:  # walked all the way around: cycle component
                    is_cycle = True
                    break
                visited[cur] = 1
                seg.append(cur)
                if d == 1:
                    anchors.append(None)
                    break
                a, b = adj[cur]
                prev, cur = cur, (b if a == prev else a)
            if is_cycle:
                break
            if direction == 0:
                run = seg[::-1] + run
            else:
                run = run + seg
        if is_cycle:
            continue
        yield run, anchors[0], anchors[1]
    # pendant vertices attached directly to hubs form no run (k < 3)


def _run_is_bad(h: Graph, run, left, right) -> bool:
    if left is None or right is None:
        return False
    q = sum(1 for v in run if len(h.adj[v]) == 2)
    if q % 2 == 0:
        return False
    # single internal vertex between two adjacent hubs: that trio is a
    # 3-clique, not a chain (the hub scan absorbs it)
    if q == 1 and left != right and h.is_adjacent(left, right):
        return False
    return True


def find_bad_chain(h: Graph) -> Optional[ForbiddenWitness]:
    """A maximal chain with an odd number of internal (degree-2) vertices
    whose both terminals have degree >= 3, or None."""
    for run, left, right in _chain_runs(h):
        if _run_is_bad(h, run, left, right):
            return ForbiddenWitness(Pattern.BAD_CHAIN, (left, *run, right))
    return None


def is_simplicial(h: Graph, v: int) -> bool:
    """True iff N(v) induces a clique."""
    bits = h.neighbor_bits()
    nb = bits[v]
    for w in h.adj[v]:
        if nb & ~(bits[w] | (1 << w)):
            return False
    return True


def is_1simplicial(h: Graph, v: int) -> Optional[int]:
    """If v has a neighbor u such that N(v) - u is a clique and u has no
    neighbor inside N(v), return the smallest such u; else None."""
    bits = h.neighbor_bits()
    nb = bits[v]
    for u in h.adj[v]:
        if bits[u] & nb:
            continue
        rest = nb & ~(1 << u)
        ok = True
        r = rest
        while r:
            low = r & -r
            w = low.bit_length() - 1
            if rest & ~(bits[w] | low):
                ok = False
                break
            r ^= low
        if ok:
            return u
    return None


def _is_cycle_graph(h: Graph) -> bool:
    return h.n >= 3 and all(len(a) == 2 for a in h.adj)


def characterization_accepts(h: Graph) -> bool:
    """Definition-level decision for a connected graph: cycles follow the
    cycle table (accept C3 and even C_n, n >= 6); otherwise every vertex
    must be simplicial or 1-simplicial, every chain good, and the graph
    C4-free. The C4 condition rules out a pair of cliques joined by two
    edges, which the vertex and chain conditions alone do not see."""
    if h.n <= 2:
        return True
    if _is_cycle_graph(h):
        return h.n == 3 or (h.n >= 6 and h.n % 2 == 0)
    for v in range(h.n):
        if not is_simplicial(h, v) and is_1simplicial(h, v) is None:
            return False
    if find_bad_chain(h) is not None:
        return False
    return find_c4(h) is None


def corollary_accepts(h: Graph, budget: int = DEFAULT_ODD_HOLE_BUDGET) -> bool:
    """Forbidden-structure decision: accept iff none of the six patterns
    occurs (bad chain, butterfly, claw, C4, diamond, odd hole)."""
    return (
        find_claw(h) is None
        and find_diamond(h) is None
        and find_c4(h) is None
        and find_butterfly(h) is None
        and find_bad_chain(h) is None
        and find_odd_hole(h, budget) is None
    )


def find_all(h: Graph, budget: int = DEFAULT_ODD_HOLE_BUDGET) -> dict[Pattern, Optional[ForbiddenWitness]]:
    """First witness per pattern (or None); the classify CLI surface."""
    return {
        Pattern.CLAW: find_claw(h),
        Pattern.DIAMOND: find_diamond(h),
        Pattern.C4: find_c4(h),
        Pattern.BUTTERFLY: find_butterfly(h),
        Pattern.ODD_HOLE: find_odd_hole(h, budget),
        Pattern.BAD_CHAIN: find_bad_chain(h),
    }


def validate_witness(h: Graph, w: ForbiddenWitness) -> bool:
    """Re-check that the witness vertices induce exactly the claimed
    structure (fixed-size check)."""
    vs = w.vertices
    if any(not 0 <= v < h.n for v in vs):
        return False
    if w.kind is Pattern.BAD_CHAIN:
        # a closed chain repeats its terminal; everything else is distinct
        body_ok = len(set(vs[:-1])) == len(vs) - 1
        if not body_ok or (vs[0] != vs[-1] and len(set(vs)) != len(vs)):
            return False
    elif len(set(vs)) != len(vs):
        return False
    bits = h.neighbor_bits()
    if w.kind is Pattern.CLAW:
        c, a, b, d = vs
        leaves = (a, b, d)
        return all(bits[c] >> x & 1 for x in leaves) and _induced_edge_count(
            bits, leaves
        ) == 0
    if w.kind is Pattern.DIAMOND:
        return len(vs) == 4 and _induced_edge_count(bits, vs) == 5
    if w.kind is Pattern.C4:
        if len(vs) != 4 or _induced_edge_count(bits, vs) != 4:
            return False
        mask = sum(1 << v for v in vs)
        return all((bits[v] & mask).bit_count() == 2 for v in vs)
    if w.kind is Pattern.BUTTERFLY:
        if len(vs) != 5 or _induced_edge_count(bits, vs) != 6:
            return False
        mask = sum(1 << v for v in vs)
        return sorted((bits[v] & mask).bit_count() for v in vs) == [2, 2, 2, 2, 4]
    if w.kind is Pattern.ODD_HOLE:
        k = len(vs)
        if k < 5 or k % 2 == 0:
            return False
        mask = sum(1 << v for v in vs)
        for i, v in enumerate(vs):
            if not bits[v] >> vs[(i + 1) % k] & 1:
                return False
            if (bits[v] & mask).bit_count() != 2:
                return False
        return True
    if w.kind is Pattern.BAD_CHAIN:
        if len(vs) < 3:
            return False
        left, run, right = vs[0], vs[1:-1], vs[-1]
        if len(h.adj[left]) < 3 or len(h.adj[right]) < 3:
            return False
        seq = [left, *run, right]
        for i in range(len(seq) - 1):
            if not h.is_adjacent(seq[i], seq[i + 1]):
                return False
        q = sum(1 for v in run if len(h.adj[v]) == 2)
        if any(len(h.adj[v]) > 2 for v in run):
            return False
        return q % 2 == 1 and not (q == 1 and left != right and h.is_adjacent(left, right))
    return False
