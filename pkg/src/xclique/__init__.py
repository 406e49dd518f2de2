"""Expanded-clique graphs: construction, linear-time recognition with root
certificates, forbidden-structure oracles, domination solvers, and the
domination hardness reduction builder."""

from .graphs import (
    Graph,
    GraphError,
    GraphParseError,
    connected_components,
    enumerate_connected_graphs,
    is_bipartite,
    is_connected,
    read_graph,
    read_graph_file,
    to_dot,
    write_graph,
)
from .builders import (
    ExpansionLabeling,
    ExpansionSpec,
    complete,
    cycle,
    expand,
    inflate,
    k_expand,
    line_graph,
    path,
    sierpinski,
    subdivision,
    subdivided_line_graph,
)
from .recognizer import (
    MultiRecognition,
    Reason,
    Rejection,
    RootCertificate,
    certificate_from_labeling,
    counting_sort_adjacency,
    recognize,
    recognize_multi,
    recognize_with_steps,
    verify_certificate,
)
from .oracle import (
    ForbiddenWitness,
    Pattern,
    characterization_accepts,
    corollary_accepts,
    find_bad_chain,
    find_butterfly,
    find_c4,
    find_claw,
    find_diamond,
    find_odd_hole,
    is_1simplicial,
    is_simplicial,
)
from .domination import (
    DominationResult,
    Method,
    TwoIndependenceResult,
    alpha2,
    canonicalize_dominating_set,
    check_delta_bounds,
    check_gamma_alpha_identity,
    check_k2_formula,
    clique_heuristic,
    dominate_exact,
    is_dominating,
)
from .reduction import (
    ReductionInstance,
    backward_extract,
    build_reduction,
    check_gadget_claims,
    check_structural_claims,
    forward_map,
    verify_reduction_identity,
)

__version__ = "0.1.0"
