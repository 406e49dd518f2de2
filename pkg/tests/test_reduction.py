import pytest

from xclique.builders import complete, cycle, path
from xclique.domination import dominate_exact, enumerate_minimum_dominating_sets, is_dominating
from xclique.graphs import Graph, GraphError
from xclique.recognizer import RootCertificate, recognize
from xclique.reduction import (
    backward_extract,
    build_reduction,
    check_gadget_claims,
    check_structural_claims,
    forward_map,
    verify_reduction_identity,
)
from xclique.oracle import find_claw, find_diamond


def test_build_k1():
    inst = build_reduction(complete(1), 1)
    assert inst.h.n == 9 and inst.ell_prime == 3
    assert inst.gprime.n == 3
    assert dominate_exact(inst.h).size == 3
    assert len(inst.gadget_index) == 1 and len(inst.gadget_index[0]) == 9


def test_build_k2():
    inst = build_reduction(complete(2), 1)
    assert inst.h.n == 18 and inst.ell_prime == 5
    assert dominate_exact(inst.h).size == 5


def test_build_c4():
    inst = build_reduction(cycle(4), 2)
    assert inst.h.n == 36 and inst.ell_prime == 10
    assert dominate_exact(inst.h, budget=36).size == 10


def test_build_guards():
    with pytest.raises(GraphError):
        build_reduction(Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)]), 1)  # degree 4
    with pytest.raises(GraphError):
        build_reduction(complete(2), -1)


def test_forward_map_examples():
    inst = build_reduction(complete(1), 1)
    d1 = forward_map(inst, {0})
    assert len(d1) == 3 and is_dominating(inst.h, d1)

    inst = build_reduction(complete(2), 1)
    d2 = forward_map(inst, {0})
    assert len(d2) == 5 and is_dominating(inst.h, d2)

    inst = build_reduction(cycle(4), 2)
    d3 = forward_map(inst, {0, 2})
    assert len(d3) == 10 and is_dominating(inst.h, d3)

    with pytest.raises(GraphError):
        forward_map(inst, {0})  # a single vertex does not dominate C4


def test_forward_map_sizes_sweep(reps_by_n):
    from itertools import combinations

    for n in range(1, 5):
        for g in reps_by_n[n]:
            if g.max_degree() > 3:
                continue
            inst = build_reduction(g, 0)
            for k in range(1, n + 1):
                for d in combinations(range(n), k):
                    if not is_dominating(g, d):
                        continue
                    dp = forward_map(inst, d)
                    assert len(dp) == 2 * n + k
                    assert is_dominating(inst.h, dp)
                    back = backward_extract(inst, dp)
                    assert len(back) <= len(d)
                    assert is_dominating(g, back)


def test_backward_extract_examples():
    inst = build_reduction(complete(2), 1)
    best = dominate_exact(inst.h).set
    assert len(best) == 5
    d = backward_extract(inst, best)
    assert len(d) <= 1 and is_dominating(complete(2), d)

    everything = backward_extract(inst, frozenset(range(inst.h.n)))
    assert everything == frozenset(range(2))

    with pytest.raises(GraphError):
        backward_extract(inst, frozenset({0}))


def test_reduction_identity_examples():
    rep = verify_reduction_identity(complete(1))
    assert (rep.gamma_source, rep.gamma_h) == (1, 3) and rep.holds
    rep = verify_reduction_identity(complete(2))
    assert (rep.gamma_source, rep.gamma_h) == (1, 5) and rep.holds
    rep = verify_reduction_identity(cycle(4))
    assert (rep.gamma_source, rep.gamma_h) == (2, 10) and rep.holds
    rep = verify_reduction_identity(path(3))
    assert (rep.gamma_source, rep.gamma_h) == (1, 7) and rep.holds


def test_gadget_claims():
    inst = build_reduction(complete(2), 1)
    rep = check_gadget_claims(inst)
    assert rep.isolated_gadget_gamma == 3
    assert rep.minimum_set_size == 5
    assert sorted(rep.gadget_counts) == [2, 3]
    assert rep.holds


def test_gadget_claims_all_minimum_sets_p3():
    # spillover verified over every minimum dominating set of the P3 instance
    inst = build_reduction(path(3), 1)
    gamma = dominate_exact(inst.h, budget=27).size
    assert gamma == 7
    from xclique.reduction import _spillover_ok

    for s in enumerate_minimum_dominating_sets(inst.h, budget=27):
        counts = [len(s & set(ids)) for ids in inst.gadget_index]
        assert all(c >= 2 for c in counts)
        assert _spillover_ok(inst, s, counts)


def test_structural_claims():
    inst = build_reduction(cycle(4), 2)
    rep = check_structural_claims(inst)
    assert not rep.bipartite  # triangles everywhere; 2-coloring must fail
    assert rep.recognized and rep.recovered_f_all_3
    assert not rep.cubic_h  # C4 source is 2-regular, so H has degree-2 vertices
    assert rep.claw_free and rep.diamond_free
    assert rep.line_graph_of_bipartite_ok

    inst = build_reduction(complete(4), 1)
    rep = check_structural_claims(inst)
    assert rep.cubic_source and rep.cubic_h
    assert rep.recognized

    inst = build_reduction(complete(1), 1)
    rep = check_structural_claims(inst)
    cert = recognize(inst.h)
    assert isinstance(cert, RootCertificate)
    assert cert.f == (3, 3, 3) and cert.quotient == complete(3)
    assert rep.odd_hole_free is True  # 9 vertices: inside the search budget


def test_h_is_always_recognized(reps_by_n):
    for n in range(1, 5):
        for g in reps_by_n[n]:
            if g.max_degree() > 3:
                continue
            inst = build_reduction(g, 0)
            assert isinstance(recognize(inst.h), RootCertificate)
            assert find_claw(inst.h) is None
            assert find_diamond(inst.h) is None
