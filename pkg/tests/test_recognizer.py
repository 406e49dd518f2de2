import random

import pytest

from xclique.builders import (
    ExpansionSpec,
    complete,
    cycle,
    expand,
    path,
    sierpinski,
)
from xclique.graphs import Graph, GraphError, enumerate_connected_graphs
from xclique.oracle import characterization_accepts, find_bad_chain
from xclique.recognizer import (
    Reason,
    RecognizerState,
    Rejection,
    RootCertificate,
    certificate_from_labeling,
    counting_sort_adjacency,
    is_good_chain,
    is_simp_or_1simp,
    recognize,
    recognize_multi,
    recognize_with_steps,
    verify_certificate,
)

CLAW = Graph(4, [(0, 1), (0, 2), (0, 3)])
BUTTERFLY = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
# two triangles joined by the 3-vertex chain c-x-d (c=2, x=3, d=4)
TWO_TRIANGLES_CHAIN = Graph(
    7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)]
)
# two 3-cliques joined by two cross edges: every vertex is simplicial or
# 1-simplicial and all chains are good, yet an induced C4 sits across
DOUBLE_BRIDGE = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4)])


def test_counting_sort_identity_and_reversed():
    sorted_lists = [list(a) for a in cycle(6).adj]
    assert counting_sort_adjacency(sorted_lists) == sorted_lists
    reversed_lists = [list(reversed(a)) for a in cycle(6).adj]
    assert counting_sort_adjacency(reversed_lists) == sorted_lists


def test_counting_sort_matches_comparison_sort():
    rng = random.Random(3)
    lists = [list(a) for a in sierpinski(2, 3).adj]
    for row in lists:
        rng.shuffle(row)
    assert counting_sort_adjacency(lists) == [sorted(row) for row in lists]


def test_cycles():
    r = recognize(cycle(4))
    assert isinstance(r, Rejection) and r.reason is Reason.C4_CYCLE
    r = recognize(cycle(5))
    assert isinstance(r, Rejection) and r.reason is Reason.ODD_CYCLE
    r = recognize(cycle(6))
    assert isinstance(r, RootCertificate)
    assert r.f == (2, 2, 2) and r.quotient == cycle(3)
    assert verify_certificate(cycle(6), r)


def test_tiny_graphs():
    r = recognize(Graph(1))
    assert isinstance(r, RootCertificate) and r.f == (1,)
    r = recognize(complete(2))
    assert isinstance(r, RootCertificate) and r.f == (2,) and r.quotient.n == 1


def test_sierpinski_23():
    r = recognize(sierpinski(2, 3))
    assert isinstance(r, RootCertificate)
    assert r.f == (3, 3, 3) and r.quotient == complete(3)
    assert verify_certificate(sierpinski(2, 3), r)


def test_claw_rejected():
    r = recognize(CLAW)
    assert isinstance(r, Rejection)
    assert r.reason is Reason.NOT_SIMPLICIAL_OR_1SIMPLICIAL


def test_p5_root():
    r = recognize(path(5))
    assert isinstance(r, RootCertificate)
    assert r.f == (2, 2, 1)
    assert r.quotient == path(3)


def test_bad_chain_rejected():
    r = recognize(TWO_TRIANGLES_CHAIN)
    assert isinstance(r, Rejection) and r.reason is Reason.BAD_CHAIN
    assert set(r.vertices) == {2, 3, 4}
    # the oracle agrees on the same chain
    w = find_bad_chain(TWO_TRIANGLES_CHAIN)
    assert w is not None and set(w.vertices) == {2, 3, 4}


def test_pendant_triangle_accepted_any_labeling():
    # expansion of the 3-path with f = (1, 3, 1): a triangle whose two ports
    # lead to pendants; the middle simplicial vertex has degree 2 and both
    # its neighbors have degree 3, but the trio is a clique, not a chain
    base, _ = expand(path(3), ExpansionSpec((1, 3, 1)))
    import itertools

    for perm in itertools.permutations(range(5)):
        g = Graph(5, [(perm[u], perm[v]) for u, v in base.edges()])
        r = recognize(g)
        assert isinstance(r, RootCertificate), (perm, r)
        assert verify_certificate(g, r)


def test_double_bridge_rejected_as_c4():
    r = recognize(DOUBLE_BRIDGE)
    assert isinstance(r, Rejection) and r.reason is Reason.C4_CYCLE
    vs = r.vertices
    assert len(vs) == 4
    # the witness traces an induced 4-cycle
    for i in range(4):
        assert DOUBLE_BRIDGE.is_adjacent(vs[i], vs[(i + 1) % 4])
    assert not DOUBLE_BRIDGE.is_adjacent(vs[0], vs[2])
    assert not DOUBLE_BRIDGE.is_adjacent(vs[1], vs[3])


def test_is_simp_or_1simp_procedure():
    k4 = complete(4)
    state = RecognizerState(counting_sort_adjacency(k4.adj))
    state.marked[0] = 1
    assert is_simp_or_1simp(k4, 0, state)
    assert state.cliques == [[0, 1, 2, 3]]
    assert all(state.marked)

    state = RecognizerState(counting_sort_adjacency(BUTTERFLY.adj))
    state.marked[2] = 1
    assert not is_simp_or_1simp(BUTTERFLY, 2, state)

    s23 = sierpinski(2, 3)
    deg3 = next(v for v in range(9) if s23.degree(v) == 3)
    state = RecognizerState(counting_sort_adjacency(s23.adj))
    state.marked[deg3] = 1
    assert is_simp_or_1simp(s23, deg3, state)
    outsider = state.outsider[deg3]
    assert outsider in s23.adj[deg3]
    # the outsider lives in another triangle of S(2,3)
    assert outsider // 3 != deg3 // 3


def test_is_good_chain_procedure():
    # pendant path hanging off a triangle: always good
    g = Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5)])
    state = RecognizerState(counting_sort_adjacency(g.adj))
    state.marked[3] = 1
    assert is_good_chain(g, 3, state)
    assert state.marked[4] and state.marked[5]

    # c-x-d with one internal vertex and non-adjacent degree-3 ends: bad
    state = RecognizerState(counting_sort_adjacency(TWO_TRIANGLES_CHAIN.adj))
    state.marked[3] = 1
    assert not is_good_chain(TWO_TRIANGLES_CHAIN, 3, state)

    # two internal vertices: good
    g2 = Graph(8, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)])
    state = RecognizerState(counting_sort_adjacency(g2.adj))
    state.marked[3] = 1
    assert is_good_chain(g2, 3, state)


def test_verify_certificate_rejects_tampering():
    r = recognize(cycle(6))
    assert verify_certificate(cycle(6), r)
    # two edges between the same pair of parts
    bad = RootCertificate(
        cliques=((0, 1, 2), (3, 4, 5)),
        quotient=complete(2),
        f=(3, 3),
        clique_of=(0, 0, 0, 1, 1, 1),
        port_to=(1, 1, None, 0, 0, None),
        slot_index=(None, None, 0, None, None, 0),
    )
    assert not verify_certificate(DOUBLE_BRIDGE, bad)
    with pytest.raises(GraphError):
        verify_certificate(cycle(6), RootCertificate(
            cliques=((0, 1),), quotient=Graph(1), f=(2,),
            clique_of=(0, 0), port_to=(None, None), slot_index=(0, 1),
        ))


def test_certificates_from_labeling_verify():
    rng = random.Random(11)
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            for _ in range(3):
                values = tuple(max(1, len(g.adj[v])) + rng.randint(0, 2) for v in range(n))
                h, lab = expand(g, ExpansionSpec(values))
                cert = certificate_from_labeling(g, lab)
                assert verify_certificate(h, cert)


def test_round_trip_small():
    rng = random.Random(5)
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            for _ in range(3):
                values = tuple(max(1, len(g.adj[v])) + rng.randint(0, 2) for v in range(n))
                h, _ = expand(g, ExpansionSpec(values))
                r = recognize(h)
                assert isinstance(r, RootCertificate)
                assert verify_certificate(h, r)


def test_cycle_table_through_20():
    for n in range(3, 21):
        r = recognize(cycle(n))
        if n == 3 or (n >= 6 and n % 2 == 0):
            assert isinstance(r, RootCertificate)
        else:
            assert isinstance(r, Rejection)


def test_agreement_with_oracle_n5():
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            a = isinstance(recognize(g), RootCertificate)
            assert a == characterization_accepts(g)


def test_recognize_multi():
    c6k3 = Graph(9, list(cycle(6).edges()) + [(6, 7), (6, 8), (7, 8)])
    res = recognize_multi(c6k3)
    assert res.accepted
    certs = [c.result for c in res.components]
    assert certs[0].f == (2, 2, 2) and certs[1].f == (3,)

    c6c4 = Graph(10, list(cycle(6).edges()) + [(6, 7), (7, 8), (8, 9), (6, 9)])
    res = recognize_multi(c6c4)
    assert not res.accepted
    rej = res.first_rejection()
    assert rej is not None and set(rej.result.vertices) == {6, 7, 8, 9}

    res = recognize_multi(Graph(1))
    assert res.accepted and res.components[0].result.f == (1,)


def test_steps_are_affine_on_paths():
    pts = []
    for n in (1000, 2000, 4000):
        _, steps = recognize_with_steps(path(n))
        pts.append((2 * n - 1, steps))
    (x1, y1), (x2, y2), (x3, y3) = pts
    slope = (y2 - y1) / (x2 - x1)
    assert abs((y3 - y2) / (x3 - x2) - slope) < 1e-9


def test_recognize_requires_a_vertex():
    with pytest.raises(GraphError):
        recognize(Graph(0))


def test_subdivided_line_root_is_isomorphic_to_input():
    import itertools as it
    from xclique.builders import subdivided_line_graph

    g = Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)])
    h = subdivided_line_graph(g)
    assert h.n == 12
    r = recognize(h)
    assert isinstance(r, RootCertificate)
    q = r.quotient
    assert q.n == g.n and q.m == g.m
    target = set(g.edges())
    assert any(
        {tuple(sorted((perm[u], perm[v]))) for u, v in q.edges()} == target
        for perm in it.permutations(range(5))
    )


def test_step_counter_linearly_bounded_over_bench_families():
    from xclique.builders import subdivided_line_graph

    instances = [path(n) for n in (10, 100, 1000, 10000)]
    instances += [cycle(n) for n in (6, 64, 1024)]
    instances += [sierpinski(p, 3) for p in (1, 3, 5, 7)]
    instances += [subdivided_line_graph(path(n)) for n in (2, 20, 200)]
    for g in instances:
        _, steps = recognize_with_steps(g)
        assert steps <= 6 * (g.n + g.m) + 10
