"""Builder and verifiers for the domination hardness reduction: from a
source graph G with max degree 3, take G' = 3-expansion of G and
H = 3-expansion of G', with target ell' = 2|V(G)| + ell. Dominating sets
map in both directions, and gamma(H) = 2|V(G)| + gamma(G) is verified
numerically with independent exact solves.

Each source vertex u owns a 9-vertex gadget in H (three triangles joined in
a triangle pattern) whose domination number is 3 on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .builders import ExpansionLabeling, k_expand
from .graphs import Graph, GraphError, is_bipartite
from .oracle import find_claw, find_diamond, find_odd_hole
from .domination import dominate_exact, is_dominating
from .recognizer import Rejection, recognize


@dataclass
class ReductionInstance:
    source: Graph
    ell: int
    gprime: Graph
    h: Graph
    ell_prime: int
    labeling1: ExpansionLabeling  # G  -> G'
    labeling2: ExpansionLabeling  # G' -> H
    gadget_index: tuple[tuple[int, ...], ...]  # source vertex -> its 9 H-vertices


def build_reduction(g: Graph, ell: int) -> ReductionInstance:
    if g.max_degree() > 3:
        raise GraphError("reduction requires max degree <= 3 (3-expansion twice)")
    if ell < 0:
        raise GraphError("ell must be nonnegative")
    gprime, lab1 = k_expand(g, 3)
    h, lab2 = k_expand(gprime, 3)
    gadgets = []
    for u in range(g.n):
        ids: list[int] = []
        for gp_vertex in lab1.cliques[u]:
            ids.extend(lab2.cliques[gp_vertex])
        gadgets.append(tuple(ids))
    inst = ReductionInstance(
        source=g,
        ell=ell,
        gprime=gprime,
        h=h,
        ell_prime=2 * g.n + ell,
        labeling1=lab1,
        labeling2=lab2,
        gadget_index=tuple(gadgets),
    )
    assert gprime.n == 3 * g.n and h.n == 9 * g.n
    return inst


def _gadget_masks(inst: ReductionInstance) -> list[int]:
    return [sum(1 << v for v in ids) for ids in inst.gadget_index]


def _gadget_degree2_vertices(inst: ReductionInstance, u: int) -> list[int]:
    """The three vertices of gadget u with exactly two neighbors inside the
    gadget (one per triangle): together they dominate the whole gadget."""
    h = inst.h
    gset = set(inst.gadget_index[u])
    out = []
    for gp_vertex in inst.labeling1.cliques[u]:
        block = inst.labeling2.cliques[gp_vertex]
        inner = [v for v in block if sum(1 for w in h.adj[v] if w in gset) == 2]
        assert len(inner) == 1
        out.append(inner[0])
    return out


def forward_map(inst: ReductionInstance, d: Iterable[int]) -> frozenset[int]:
    """Map a dominating set of the source to one of H with exactly
    2|V(G)| + |d| vertices: for a chosen u, the three gadget vertices with
    gadget-degree 2; for an unchosen u with lowest-id dominator v, the two
    gadget-degree-3 vertices sharing a neighbor with u's port toward v."""
    g = inst.source
    dset = set(d)
    if not is_dominating(g, dset):
        raise GraphError("input set does not dominate the source graph")
    lab1, lab2 = inst.labeling1, inst.labeling2
    chosen: list[int] = []
    for u in range(g.n):
        if u in dset:
            chosen.extend(_gadget_degree2_vertices(inst, u))
            continue
        v = min(w for w in g.adj[u] if w in dset)
        a, b = lab1.port_of[(min(u, v), max(u, v))]
        pu, pv = (a, b) if u < v else (b, a)  # G'-ports carrying edge uv
        a, b = lab2.port_of[(min(pu, pv), max(pu, pv))]
        x = a if pu < pv else b
        # x = the H-vertex of gadget u with a neighbor in gadget v; its two
        # triangle mates are intra-gadget ports; take their partners in the
        # other two triangles
        gset = set(inst.gadget_index[u])
        block = set(lab2.cliques[lab2.clique_of[x]])
        for mate in sorted(block - {x}):
            partner = next(w for w in inst.h.adj[mate] if w in gset and w not in block)
            chosen.append(partner)
    result = frozenset(chosen)
    assert len(result) == 2 * g.n + len(dset)
    return result


def backward_extract(inst: ReductionInstance, dprime: Iterable[int]) -> frozenset[int]:
    """Extract a dominating set of the source from one of H: the vertices
    whose gadget holds at least three chosen vertices. Its size is at most
    |dprime| - 2|V(G)|."""
    dp = set(dprime)
    if not is_dominating(inst.h, dp):
        raise GraphError("input set does not dominate H")
    counts = [len(dp & set(ids)) for ids in inst.gadget_index]
    d = frozenset(u for u, c in enumerate(counts) if c >= 3)
    if not is_dominating(inst.source, d):
        raise RuntimeError("extraction produced a non-dominating set")
    if len(d) > len(dp) - 2 * inst.source.n:
        raise RuntimeError("extraction exceeded the size bound")
    return d


@dataclass
class ReductionIdentityReport:
    n: int
    gamma_source: int
    gamma_h: int

    @property
    def holds(self) -> bool:
        return self.gamma_h == 2 * self.n + self.gamma_source


def verify_reduction_identity(g: Graph, budget: Optional[int] = None) -> ReductionIdentityReport:
    """gamma(H) = 2|V(G)| + gamma(G), both sides by independent exact
    solves. Branch-and-bound handles |V(H)| = 9n up to 63, so n <= 7."""
    if budget is None:
        budget = 63
    if 9 * g.n > budget:
        raise GraphError(f"|V(H)| = {9 * g.n} exceeds solver budget {budget}")
    gamma_g = dominate_exact(g, budget=budget)
    inst = build_reduction(g, gamma_g.size)
    gamma_h = dominate_exact(inst.h, budget=budget)
    return ReductionIdentityReport(n=g.n, gamma_source=gamma_g.size, gamma_h=gamma_h.size)


@dataclass
class GadgetClaimsReport:
    isolated_gadget_gamma: int
    minimum_set_size: int
    gadget_counts: tuple[int, ...]
    counts_ok: bool
    spillover_ok: bool

    @property
    def holds(self) -> bool:
        return (
            self.isolated_gadget_gamma == 3 and self.counts_ok and self.spillover_ok
        )


def _spillover_ok(inst: ReductionInstance, dp: frozenset[int], counts) -> bool:
    """For each gadget met exactly twice: exactly one gadget vertex escapes
    the chosen vertices' closed neighborhoods inside the gadget, and a
    chosen vertex of some gadget met at least three times dominates it."""
    h = inst.h
    owner = {}
    for u, ids in enumerate(inst.gadget_index):
        for v in ids:
            owner[v] = u
    for u, cnt in enumerate(counts):
        if cnt != 2:
            continue
        ids = set(inst.gadget_index[u])
        inside = dp & ids
        covered = set()
        for v in inside:
            covered.add(v)
            covered.update(w for w in h.adj[v] if w in ids)
        uncovered = ids - covered
        if len(uncovered) != 1:
            return False
        x = next(iter(uncovered))
        dominators = [w for w in h.adj[x] if w in dp]
        if not any(counts[owner[w]] >= 3 for w in dominators):
            return False
    return True


def check_gadget_claims(inst: ReductionInstance, budget: Optional[int] = None) -> GadgetClaimsReport:
    """An isolated gadget has domination number 3; a minimum dominating
    set of H meets every gadget at least twice, and a gadget met exactly
    twice leaves one vertex to be dominated from a gadget met at least
    three times."""
    from .builders import complete

    if budget is None:
        budget = max(63, inst.h.n)
    gadget, _ = k_expand(complete(3), 3)
    iso = dominate_exact(gadget, budget=budget)
    dp = dominate_exact(inst.h, budget=budget)
    counts = tuple(len(dp.set & set(ids)) for ids in inst.gadget_index)
    return GadgetClaimsReport(
        isolated_gadget_gamma=iso.size,
        minimum_set_size=dp.size,
        gadget_counts=counts,
        counts_ok=all(c >= 2 for c in counts),
        spillover_ok=_spillover_ok(inst, dp.set, counts),
    )


@dataclass
class StructuralReport:
    bipartite: bool
    cubic_source: bool
    cubic_h: bool
    recognized: bool
    recovered_f_all_3: bool
    claw_free: bool
    diamond_free: bool
    odd_hole_free: Optional[bool]  # None when past the odd-hole budget

    @property
    def line_graph_of_bipartite_ok(self) -> bool:
        # claw/diamond-freeness checked directly; odd-hole-freeness follows
        # from the recognition certificate when the search budget is passed
        base = self.claw_free and self.diamond_free
        if self.odd_hole_free is not None:
            return base and self.odd_hole_free
        return base and self.recognized


def check_structural_claims(inst: ReductionInstance) -> StructuralReport:
    """Structure of H: 2-colorability (reported honestly: every expansion
    with f = 3 contains triangles, so this is always False for nonempty
    sources), 3-regularity when the source is cubic, acceptance by the
    recognizer with f = 3 throughout, and (claw, diamond, odd-hole)-freeness
    backing the line-graph-of-bipartite claim."""
    h = inst.h
    bip, _ = is_bipartite(h)
    cubic_source = inst.source.n > 0 and all(
        len(a) == 3 for a in inst.source.adj
    )
    cubic_h = all(len(a) == 3 for a in h.adj)
    res = recognize(h)
    recognized = not isinstance(res, Rejection)
    f_ok = recognized and all(k == 3 for k in res.f)
    from .oracle import BudgetExceeded

    try:
        odd_free: Optional[bool] = find_odd_hole(h) is None
    except BudgetExceeded:
        odd_free = None
    return StructuralReport(
        bipartite=bip,
        cubic_source=cubic_source,
        cubic_h=cubic_h,
        recognized=recognized,
        recovered_f_all_3=f_ok,
        claw_free=find_claw(h) is None,
        diamond_free=find_diamond(h) is None,
        odd_hole_free=odd_free,
    )
