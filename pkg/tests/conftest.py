import itertools

import pytest

from xclique.graphs import Graph, enumerate_connected_graphs


def iso_class_representatives(n: int, max_degree: int | None = None) -> list[Graph]:
    """One labeled representative per isomorphism class of connected graphs
    on n vertices: walk the labeled enumeration, skip graphs whose edge
    bitmask was already produced by permuting an earlier representative."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    bit_of = {p: k for k, p in enumerate(pairs)}
    perm_maps = []
    for perm in itertools.permutations(range(n)):
        perm_maps.append(
            [bit_of[tuple(sorted((perm[i], perm[j])))] for (i, j) in pairs]
        )
    seen: set[int] = set()
    reps: list[Graph] = []
    for g in enumerate_connected_graphs(n):
        if max_degree is not None and g.max_degree() > max_degree:
            continue
        mask = 0
        for (u, v) in g.edges():
            mask |= 1 << bit_of[(u, v)]
        if mask in seen:
            continue
        reps.append(g)
        for pm in perm_maps:
            pmask = 0
            mm = mask
            while mm:
                low = mm & -mm
                pmask |= 1 << pm[low.bit_length() - 1]
                mm ^= low
            seen.add(pmask)
    return reps


@pytest.fixture(scope="session")
def reps_by_n():
    return {n: iso_class_representatives(n) for n in range(1, 7)}
