"""Exact and heuristic dominating-set solvers, the 2-independence solver,
canonicalization of dominating sets on expansions, and the checkers for the
domination identities and bounds.

Solvers are bitmask-based and budget-guarded: they exist to verify
identities at desk scale, not to compete on large instances.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .builders import ExpansionLabeling, ExpansionSpec, expand, k_expand
from .graphs import Graph, GraphError
from .recognizer import RootCertificate

BB_BUDGET_DEFAULT = 30
EXHAUSTIVE_BUDGET_DEFAULT = 22
BUDGET_ENV = "XCLIQUE_BUDGET"


class Method(str, Enum):
    EXHAUSTIVE = "exhaustive"
    BRANCH_AND_BOUND = "branch-and-bound"
    CLIQUE_HEURISTIC = "clique-heuristic"


class BudgetExceeded(GraphError):
    """Solver refused: instance larger than the active budget."""


@dataclass(frozen=True)
class DominationResult:
    set: frozenset[int]
    size: int
    exact: bool
    method: Method


@dataclass(frozen=True)
class TwoIndependenceResult:
    set: frozenset[int]
    size: int


def _env_budget() -> Optional[int]:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _resolve_budget(budget: Optional[int], default: int) -> int:
    if budget is not None:
        return budget
    env = _env_budget()
    return env if env is not None else default


def _cover_masks(g: Graph) -> list[int]:
    bits = g.neighbor_bits()
    return [bits[v] | (1 << v) for v in range(g.n)]


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    cover = _cover_masks(g)
    got = 0
    for v in vertices:
        got |= cover[v]
    return got == (1 << g.n) - 1


def _greedy_cover(cover: list[int], full: int) -> list[int]:
    chosen: list[int] = []
    dominated = 0
    while dominated != full:
        best_v, best_gain = -1, -1
        for v, cv in enumerate(cover):
            gain = (cv & ~dominated).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        dominated |= cover[best_v]
    return chosen


def _packing_bound(cover: list[int], undominated: int) -> int:
    # undominated vertices with pairwise disjoint closed neighborhoods need
    # pairwise distinct dominators
    count = 0
    used = 0
    mm = undominated
    while mm:
        low = mm & -mm
        v = low.bit_length() - 1
        if not cover[v] & used:
            used |= cover[v]
            count += 1
        mm ^= low
    return count


def dominate_exact(
    g: Graph,
    budget: Optional[int] = None,
    method: Method = Method.BRANCH_AND_BOUND,
) -> DominationResult:
    """Minimum dominating set.

    Branch and bound: branch on the lowest-id undominated vertex, trying
    each member of its closed neighborhood; prune with a greedy upper bound
    and the larger of ceil(undominated / (max degree + 1)) and a greedy
    disjoint-closed-neighborhood packing (both admissible). The exhaustive
    method tries subsets by increasing size and is the cross-check oracle.
    """
    if method is Method.CLIQUE_HEURISTIC:
        raise GraphError("clique heuristic needs a certificate; use clique_heuristic()")
    default = (
        BB_BUDGET_DEFAULT if method is Method.BRANCH_AND_BOUND else EXHAUSTIVE_BUDGET_DEFAULT
    )
    limit = _resolve_budget(budget, default)
    if g.n > limit:
        raise BudgetExceeded(f"n={g.n} exceeds solver budget {limit}")
    if g.n == 0:
        return DominationResult(frozenset(), 0, True, method)
    if method is Method.EXHAUSTIVE:
        return _dominate_exhaustive(g)
    return _dominate_bb(g)


def _dominate_exhaustive(g: Graph) -> DominationResult:
    cover = _cover_masks(g)
    full = (1 << g.n) - 1
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            got = 0
            for v in combo:
                got |= cover[v]
            if got == full:
                return DominationResult(frozenset(combo), k, True, Method.EXHAUSTIVE)
    raise AssertionError("unreachable: V itself dominates")


def _dominate_bb(g: Graph) -> DominationResult:
    n = g.n
    cover = _cover_masks(g)
    full = (1 << n) - 1
    maxcover = max(c.bit_count() for c in cover)

    best = _greedy_cover(cover, full)
    best_size = len(best)

    candidates = [
        sorted((v, *g.adj[v])) for v in range(n)
    ]

    def dfs(dominated: int, chosen: list[int]) -> None:
        nonlocal best, best_size
        if dominated == full:
            if len(chosen) < best_size:
                best = list(chosen)
                best_size = len(chosen)
            return
        undom = full & ~dominated
        cnt = undom.bit_count()
        lower = max(
            (cnt + maxcover - 1) // maxcover,
            _packing_bound(cover, undom),
        )
        if len(chosen) + lower >= best_size:
            return
        v = (undom & -undom).bit_length() - 1
        for u in candidates[v]:
            chosen.append(u)
            dfs(dominated | cover[u], chosen)
            chosen.pop()

    dfs(0, [])
    return DominationResult(frozenset(best), best_size, True, Method.BRANCH_AND_BOUND)


def enumerate_minimum_dominating_sets(g: Graph, budget: Optional[int] = None) -> list[frozenset[int]]:
    """All minimum dominating sets, by subset enumeration at the optimum
    size. Desk-scale test helper."""
    limit = _resolve_budget(budget, EXHAUSTIVE_BUDGET_DEFAULT + 8)
    if g.n > limit:
        raise BudgetExceeded(f"n={g.n} exceeds enumeration budget {limit}")
    gamma = dominate_exact(g, budget=limit).size
    cover = _cover_masks(g)
    full = (1 << g.n) - 1
    out = []
    for combo in combinations(range(g.n), gamma):
        got = 0
        for v in combo:
            got |= cover[v]
        if got == full:
            out.append(frozenset(combo))
    return out


def _parts_of(h: Graph, parts_source) -> list[list[int]]:
    if isinstance(parts_source, (ExpansionLabeling, RootCertificate)):
        parts = [list(p) for p in parts_source.cliques]
    else:
        parts = [list(p) for p in parts_source]
    seen = [-1] * h.n
    for i, p in enumerate(parts):
        for v in p:
            if not 0 <= v < h.n or seen[v] != -1:
                raise GraphError("parts do not partition V(H)")
            seen[v] = i
    if any(s == -1 for s in seen):
        raise GraphError("parts do not partition V(H)")
    return parts


def canonicalize_dominating_set(
    h: Graph, parts_source, s: Iterable[int]
) -> frozenset[int]:
    """Rewrite a dominating set of an expansion into one that is no larger
    and meets every expanded clique at most once.

    Moves, applied while some part holds two or more chosen vertices: drop
    a chosen vertex whose closed neighborhood stays covered (simplicial
    members always qualify, ports whose partner's part is already hit too);
    otherwise swap a port for its partner across the edge. Each move lowers
    the total excess, so the process terminates.
    """
    parts = _parts_of(h, parts_source)
    part_of = [0] * h.n
    for i, p in enumerate(parts):
        for v in p:
            part_of[v] = i
    partner = [-1] * h.n
    for v in range(h.n):
        outs = [w for w in h.adj[v] if part_of[w] != part_of[v]]
        if len(outs) > 1:
            raise GraphError("not an expansion partition: vertex with 2 outside edges")
        if outs:
            partner[v] = outs[0]
    if not is_dominating(h, s):
        raise GraphError("input set does not dominate H")

    chosen = set(s)
    counts = [0] * len(parts)
    for v in chosen:
        counts[part_of[v]] += 1
    while True:
        over = next((i for i, c in enumerate(counts) if c > 1), None)
        if over is None:
            break
        members = sorted(v for v in parts[over] if v in chosen)
        # prefer dropping a vertex with no outside edge: always safe here
        drop = next((v for v in members if partner[v] == -1), None)
        if drop is not None:
            chosen.remove(drop)
            counts[over] -= 1
            continue
        v = members[0]
        w = partner[v]
        if counts[part_of[w]] >= 1:
            chosen.remove(v)
            counts[over] -= 1
        else:
            chosen.remove(v)
            chosen.add(w)
            counts[over] -= 1
            counts[part_of[w]] += 1
    return frozenset(chosen)


def clique_heuristic(h: Graph, parts_source) -> DominationResult:
    """One vertex per expanded clique (simplicial slot preferred, lowest id
    on ties); dominates by construction with exactly one vertex per part."""
    parts = _parts_of(h, parts_source)
    part_of = [0] * h.n
    for i, p in enumerate(parts):
        for v in p:
            part_of[v] = i
    chosen = []
    for p in parts:
        simp = [v for v in sorted(p) if all(part_of[w] == part_of[v] for w in h.adj[v])]
        chosen.append(simp[0] if simp else min(p))
    return DominationResult(frozenset(chosen), len(chosen), False, Method.CLIQUE_HEURISTIC)


def _dist_le2_conflicts(g: Graph, vertices: Sequence[int]) -> list[int]:
    cover = _cover_masks(g)
    k = len(vertices)
    confl = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if cover[vertices[i]] & cover[vertices[j]]:
                confl[i] |= 1 << j
                confl[j] |= 1 << i
    return confl


def alpha2(g: Graph, spec: ExpansionSpec, budget: Optional[int] = None) -> TwoIndependenceResult:
    """Maximum 2-independent set among the vertices with f(v) = deg(v):
    pairwise distance at least 3 in g. Solved as maximum independent set on
    the distance <= 2 conflict graph of the eligible vertices."""
    spec.validate(g)
    limit = _resolve_budget(budget, BB_BUDGET_DEFAULT)
    if g.n > limit:
        raise BudgetExceeded(f"n={g.n} exceeds solver budget {limit}")
    eligible = [v for v in range(g.n) if spec.values[v] == len(g.adj[v])]
    if not eligible:
        return TwoIndependenceResult(frozenset(), 0)
    confl = _dist_le2_conflicts(g, eligible)
    k = len(eligible)
    full = (1 << k) - 1
    best_mask = 0
    best_size = 0

    def dfs(cand: int, cur: int, size: int) -> None:
        nonlocal best_mask, best_size
        if size + cand.bit_count() <= best_size:
            return
        if cand == 0:
            best_mask, best_size = cur, size
            return
        low = cand & -cand
        i = low.bit_length() - 1
        dfs(cand & ~low & ~confl[i], cur | low, size + 1)
        dfs(cand & ~low, cur, size)

    dfs(full, 0, 0)
    members = frozenset(
        eligible[i] for i in range(k) if best_mask >> i & 1
    )
    return TwoIndependenceResult(members, best_size)


@dataclass
class IdentityReport:
    """gamma(H) + alpha2(G, f) = |V(G)|, with both constructive directions
    materialized."""

    n: int
    gamma: int
    alpha2: int
    holds: bool
    dominating_from_independent: frozenset[int]
    direction1_valid: bool
    canonical_set: frozenset[int]
    independent_from_canonical: frozenset[int]
    direction2_valid: bool


def dominating_set_from_2independent(
    g: Graph, spec: ExpansionSpec, labeling: ExpansionLabeling, t: Iterable[int]
) -> frozenset[int]:
    """The identity proof's forward construction: for each root vertex not
    in T, one vertex of its clique: the port toward its unique T-neighbor
    when it has one, else the simplicial slot (lowest id fallback)."""
    tset = set(t)
    cover = _cover_masks(g)
    tl = sorted(tset)
    for i in range(len(tl)):
        for j in range(i + 1, len(tl)):
            if cover[tl[i]] & cover[tl[j]]:
                raise GraphError("input set is not 2-independent")
    chosen = []
    for j in range(g.n):
        if j in tset:
            continue
        t_nbrs = [i for i in g.adj[j] if i in tset]
        if t_nbrs:
            i = t_nbrs[0]
            key = (i, j) if i < j else (j, i)
            hi, hj = labeling.port_of[key]
            chosen.append(hj if i < j else hi)
        else:
            block = labeling.cliques[j]
            slots = [v for v in block if labeling.port_to[v] is None]
            chosen.append(slots[0] if slots else block[0])
    return frozenset(chosen)


def check_gamma_alpha_identity(
    g: Graph, spec: ExpansionSpec, budget: Optional[int] = None
) -> IdentityReport:
    """Verify gamma(H) + alpha2(G, f) = |V(G)| with exact solves on both
    sides, and materialize the proof's two constructions."""
    h, labeling = expand(g, spec)
    gamma = dominate_exact(h, budget=budget)
    alpha = alpha2(g, spec, budget=budget)
    holds = gamma.size + alpha.size == g.n

    s_from_t = dominating_set_from_2independent(g, spec, labeling, alpha.set)
    direction1 = (
        len(s_from_t) == g.n - alpha.size and is_dominating(h, s_from_t)
    )

    canonical = canonicalize_dominating_set(h, labeling, gamma.set)
    part_hit = [False] * g.n
    for v in canonical:
        part_hit[labeling.clique_of[v]] = True
    t_from_s = frozenset(i for i in range(g.n) if not part_hit[i])
    cover = _cover_masks(g)
    eligible_ok = all(spec.values[i] == len(g.adj[i]) for i in t_from_s)
    tl = sorted(t_from_s)
    indep_ok = all(
        not (cover[tl[i]] & cover[tl[j]])
        for i in range(len(tl))
        for j in range(i + 1, len(tl))
    )
    direction2 = (
        eligible_ok
        and indep_ok
        and len(canonical) <= gamma.size
        and len(t_from_s) == g.n - len(canonical)
        and is_dominating(h, canonical)
    )
    return IdentityReport(
        n=g.n,
        gamma=gamma.size,
        alpha2=alpha.size,
        holds=holds,
        dominating_from_independent=s_from_t,
        direction1_valid=direction1,
        canonical_set=canonical,
        independent_from_canonical=t_from_s,
        direction2_valid=direction2,
    )


@dataclass
class DeltaBoundsReport:
    n: int
    delta: int
    gamma: int
    lower_holds: bool
    upper_holds: bool
    heuristic_size: int
    ratio_holds: bool

    @property
    def holds(self) -> bool:
        return self.lower_holds and self.upper_holds and self.ratio_holds


def check_delta_bounds(g: Graph, k: Optional[int] = None, budget: Optional[int] = None) -> DeltaBoundsReport:
    """For H the Delta-expanded-clique graph of g: check
    n*Delta/(Delta+1) <= gamma(H) <= n, and that one-vertex-per-clique is
    within (Delta+1)/Delta of the minimum. Integer arithmetic throughout."""
    delta = g.max_degree() if k is None else k
    if delta < 1:
        raise GraphError("Delta-expansion needs max degree >= 1")
    if delta < g.max_degree():
        raise GraphError("k must be at least the max degree")
    h, labeling = k_expand(g, delta)
    gamma = dominate_exact(h, budget=budget)
    heur = clique_heuristic(h, labeling)
    lower = gamma.size * (delta + 1) >= g.n * delta
    upper = gamma.size <= g.n
    ratio = heur.size * delta <= gamma.size * (delta + 1)
    return DeltaBoundsReport(
        n=g.n,
        delta=delta,
        gamma=gamma.size,
        lower_holds=lower,
        upper_holds=upper,
        heuristic_size=heur.size,
        ratio_holds=ratio,
    )


@dataclass
class K2FormulaReport:
    h_order: int
    gamma: int
    expected: int

    @property
    def holds(self) -> bool:
        return self.gamma == self.expected


def _is_path_graph(g: Graph) -> bool:
    from .graphs import is_connected

    return g.n >= 1 and g.m == g.n - 1 and g.max_degree() <= 2 and is_connected(g)


def _is_cycle_graph(g: Graph) -> bool:
    from .graphs import is_connected

    return g.n >= 3 and all(len(a) == 2 for a in g.adj) and is_connected(g)


def check_k2_formula(g: Graph, budget: Optional[int] = None) -> K2FormulaReport:
    """For g a path or cycle with at least 4 vertices and H its 2-expansion:
    gamma(H) = ceil(|V(H)| / 3) (the |V(H)| reading of the remark)."""
    if g.n < 4 or not (_is_path_graph(g) or _is_cycle_graph(g)):
        raise GraphError("k=2 formula applies to paths and cycles with >= 4 vertices")
    h, _ = k_expand(g, 2)
    gamma = dominate_exact(h, budget=budget)
    return K2FormulaReport(h_order=h.n, gamma=gamma.size, expected=-(-h.n // 3))
