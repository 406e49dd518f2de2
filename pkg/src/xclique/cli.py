"""xclique command line: generate / expand / recognize / classify /
dominate / alpha2 / reduce / verify-identities / bench.

Conventions: graphs travel in the text format of graphs.read_graph_file
(1-based "p/e/f" lines); --json switches the human summary to machine
output; exit code 0 means accepted / feasible / verified, 1 means rejected
/ infeasible / identity violation, 2 means usage or I/O trouble. The
XCLIQUE_BUDGET environment variable overrides default solver budgets.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional, Sequence

from . import bench as bench_mod
from .builders import (
    ExpansionSpec,
    complete,
    cycle,
    expand,
    path,
    sierpinski,
)
from .domination import (
    Method,
    alpha2,
    check_delta_bounds,
    check_gamma_alpha_identity,
    clique_heuristic,
    dominate_exact,
)
from .graphs import Graph, GraphError, read_graph_file, to_dot, write_graph
from .oracle import BudgetExceeded, corollary_accepts, find_all
from .recognizer import RootCertificate, recognize_multi
from .reduction import build_reduction, check_structural_claims, verify_reduction_identity

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_ERROR = 2


def _read_graph_arg(path_in: str) -> tuple[Graph, Optional[tuple[int, ...]]]:
    with open(path_in, "r", encoding="utf-8") as fh:
        return read_graph_file(fh.read())


def _write_text(path_out: Optional[str], text: str) -> None:
    if path_out is None or path_out == "-":
        sys.stdout.write(text)
    else:
        with open(path_out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _parse_f(g: Graph, text: Optional[str], from_file: Optional[tuple[int, ...]]) -> ExpansionSpec:
    if text is None:
        if from_file is not None:
            return ExpansionSpec(from_file)
        raise GraphError("no f specification: pass --f or embed f lines in the file")
    if text == "degrees":
        return ExpansionSpec.degrees(g)
    if text.startswith("uniform:"):
        return ExpansionSpec.uniform(g, int(text.split(":", 1)[1]))
    values = tuple(int(tok) for tok in text.replace(",", " ").split())
    return ExpansionSpec(values)


def _budget(args) -> Optional[int]:
    return getattr(args, "budget", None)


def _certificate_json(cert: RootCertificate) -> dict:
    return {
        "cliques": [list(p) for p in cert.cliques],
        "f": list(cert.f),
        "quotient": {
            "n": cert.quotient.n,
            "edges": [list(e) for e in cert.quotient.edges()],
        },
        "roles": [
            {"vertex": v, "clique": cert.clique_of[v],
             "port_to": cert.port_to[v], "slot": cert.slot_index[v]}
            for v in range(len(cert.clique_of))
        ],
    }


def _cmd_generate(args) -> int:
    fam = args.family
    params = args.params
    try:
        if fam == "path":
            g = path(int(params[0]))
        elif fam == "cycle":
            g = cycle(int(params[0]))
        elif fam == "complete":
            g = complete(int(params[0]))
        elif fam == "sierpinski":
            g = sierpinski(int(params[0]), int(params[1]))
        else:
            print(f"unknown family {fam!r}", file=sys.stderr)
            return EXIT_ERROR
    except (IndexError, ValueError) as exc:
        print(f"bad parameters for {fam}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _write_text(args.output, write_graph(g))
    if args.dot:
        _write_text(args.dot, to_dot(g))
    return EXIT_OK


def _cmd_expand(args) -> int:
    g, f_file = _read_graph_arg(args.graph)
    spec = _parse_f(g, args.f, f_file)
    h, labeling = expand(g, spec)
    _write_text(args.output, write_graph(h))
    sidecar = {
        "clique_of": list(labeling.clique_of),
        "role": [
            {"port_to": labeling.port_to[v], "slot": labeling.slot_index[v]}
            for v in range(h.n)
        ],
        "cliques": [list(p) for p in labeling.cliques],
        "f": list(spec.values),
    }
    if args.labeling:
        _write_text(args.labeling, json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    if args.dot:
        _write_text(args.dot, to_dot(h, clusters=labeling.cliques))
    if args.json:
        _emit_json(sidecar)
    return EXIT_OK


def _cmd_recognize(args) -> int:
    g, _ = _read_graph_arg(args.graph)
    multi = recognize_multi(g)
    if multi.accepted:
        payload = {
            "accepted": True,
            "components": [
                {
                    "vertices": list(c.vertices),
                    "certificate": _certificate_json(c.result),
                }
                for c in multi.components
            ],
        }
        if args.json:
            _emit_json(payload)
        else:
            roots = ", ".join(
                f"root on {c.result.quotient.n} vertices with f={list(c.result.f)}"
                for c in multi.components
            )
            print(f"expanded-clique: yes ({roots})")
        if args.dot:
            clusters = [p for c in multi.components for p in c.global_cliques()]
            _write_text(args.dot, to_dot(g, clusters=clusters))
        return EXIT_OK
    rej = multi.first_rejection()
    payload = {
        "accepted": False,
        "reason": rej.result.reason.value,
        "vertices": list(rej.result.vertices),
        "component": list(rej.vertices),
    }
    if args.json:
        _emit_json(payload)
    else:
        print(
            f"expanded-clique: no ({rej.result.reason.value} at "
            f"{list(rej.result.vertices)})"
        )
    return EXIT_REJECT


def _cmd_classify(args) -> int:
    g, _ = _read_graph_arg(args.graph)
    try:
        witnesses = find_all(g, budget=args.budget if args.budget else 12)
        accepted = corollary_accepts(g, budget=args.budget if args.budget else 12)
    except BudgetExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR
    payload = {
        "patterns": {
            pat.value: (None if w is None else list(w.vertices))
            for pat, w in witnesses.items()
        },
        "expanded_clique": accepted,
    }
    _emit_json(payload)
    return EXIT_OK if accepted else EXIT_REJECT


def _cmd_dominate(args) -> int:
    g, _ = _read_graph_arg(args.graph)
    if args.heuristic:
        if not args.cert:
            print("--heuristic requires --cert <labeling json>", file=sys.stderr)
            return EXIT_ERROR
        with open(args.cert, "r", encoding="utf-8") as fh:
            sidecar = json.load(fh)
        parts = [tuple(p) for p in sidecar["cliques"]]
        res = clique_heuristic(g, parts)
    else:
        method = Method.EXHAUSTIVE if args.exhaustive else Method.BRANCH_AND_BOUND
        res = dominate_exact(g, budget=_budget(args), method=method)
    payload = {
        "size": res.size,
        "set": sorted(res.set),
        "exact": res.exact,
        "method": res.method.value,
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"dominating set size {res.size} via {res.method.value}: {sorted(res.set)}")
    return EXIT_OK


def _cmd_alpha2(args) -> int:
    g, f_file = _read_graph_arg(args.graph)
    spec = _parse_f(g, args.f, f_file)
    res = alpha2(g, spec, budget=_budget(args))
    payload = {"size": res.size, "set": sorted(res.set)}
    if args.json:
        _emit_json(payload)
    else:
        print(f"alpha2 = {res.size}: {sorted(res.set)}")
    return EXIT_OK


def _cmd_verify_identities(args) -> int:
    g, f_file = _read_graph_arg(args.graph)
    checks = []
    ok = True
    rng = random.Random(args.seed)
    specs: list[ExpansionSpec] = []
    if args.samples:
        for _ in range(args.samples):
            values = tuple(
                max(1, len(g.adj[v])) + rng.randint(0, 2) for v in range(g.n)
            )
            specs.append(ExpansionSpec(values))
    else:
        specs.append(_parse_f(g, args.f, f_file))
    for spec in specs:
        rep = check_gamma_alpha_identity(g, spec, budget=_budget(args))
        checks.append(
            {
                "check": "gamma-plus-alpha2",
                "f": list(spec.values),
                "gamma": rep.gamma,
                "alpha2": rep.alpha2,
                "n": rep.n,
                "holds": rep.holds,
                "dominating_set": sorted(rep.canonical_set),
                "independent_set": sorted(rep.independent_from_canonical),
                "constructions_valid": rep.direction1_valid and rep.direction2_valid,
            }
        )
        ok = ok and rep.holds and rep.direction1_valid and rep.direction2_valid
        uniform = set(spec.values)
        if len(uniform) == 1 and next(iter(uniform)) == g.max_degree() >= 1:
            brep = check_delta_bounds(g, budget=_budget(args))
            checks.append(
                {
                    "check": "delta-bounds",
                    "delta": brep.delta,
                    "gamma": brep.gamma,
                    "lower_bound": brep.n * brep.delta / (brep.delta + 1),
                    "upper_bound": brep.n,
                    "heuristic": brep.heuristic_size,
                    "holds": brep.holds,
                }
            )
            ok = ok and brep.holds
    payload = {"n": g.n, "checks": checks, "all_hold": ok}
    _emit_json(payload)
    return EXIT_OK if ok else EXIT_REJECT


def _cmd_reduce(args) -> int:
    g, _ = _read_graph_arg(args.graph)
    inst = build_reduction(g, args.ell)
    _write_text(args.output, write_graph(inst.h))
    index = {
        "ell": inst.ell,
        "ell_prime": inst.ell_prime,
        "source_n": inst.source.n,
        "gadgets": {str(u): list(ids) for u, ids in enumerate(inst.gadget_index)},
    }
    if args.gadgets:
        _write_text(args.gadgets, json.dumps(index, indent=2, sort_keys=True) + "\n")
    if args.dot:
        _write_text(args.dot, to_dot(inst.h, clusters=inst.gadget_index))
    if not args.verify:
        if args.json:
            _emit_json(index)
        else:
            print(
                f"reduction built: |V(H)| = {inst.h.n}, ell' = {inst.ell_prime}"
            )
        return EXIT_OK
    rep = verify_reduction_identity(g, budget=_budget(args))
    struct = check_structural_claims(inst)
    payload = dict(index)
    payload.update(
        {
            "gamma_source": rep.gamma_source,
            "gamma_h": rep.gamma_h,
            "identity_holds": rep.holds,
            "recognized": struct.recognized,
            "bipartite": struct.bipartite,
            "cubic": struct.cubic_h,
        }
    )
    if args.json:
        _emit_json(payload)
    else:
        print(
            f"gamma(H) = {rep.gamma_h}, 2n + gamma(G) = {2 * g.n + rep.gamma_source}: "
            f"{'ok' if rep.holds else 'VIOLATION'}"
        )
    return EXIT_OK if rep.holds else EXIT_REJECT


def _cmd_bench(args) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = bench_mod.run_bench(families, sizes)
    bench_mod.write_csv(rows, args.csv)
    fits = {}
    by_family: dict[str, list] = {}
    for r in rows:
        by_family.setdefault(r.family, []).append(r)
    for fam, rs in by_family.items():
        if len(rs) >= 2:
            fits[fam] = bench_mod.fit_steps(rs)
    plot_path = args.plot
    if plot_path is None:
        stem, _ = os.path.splitext(args.csv)
        plot_path = stem + ".png"
    if plot_path != "none":
        bench_mod.render_plot(rows, plot_path, fits)
    summary = {
        "rows": len(rows),
        "csv": args.csv,
        "plot": None if plot_path == "none" else plot_path,
        "fits": {
            fam: {"slope": f.slope, "intercept": f.intercept, "r_squared": f.r_squared}
            for fam, f in fits.items()
        },
    }
    _emit_json(summary)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xclique",
        description="Expanded-clique graphs: build, recognize, classify, dominate, reduce.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a graph from a parametric family")
    p.add_argument("family", choices=["path", "cycle", "complete", "sierpinski"])
    p.add_argument("params", nargs="+", help="family parameters (path/cycle/complete: n; sierpinski: p q)")
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p.add_argument("--dot", default=None, help="also write a DOT rendering")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("expand", help="expanded-clique graph of (G, f)")
    p.add_argument("graph")
    p.add_argument("--f", default=None, help="'degrees', 'uniform:k', or explicit values")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--labeling", default=None, help="write the labeling sidecar JSON here")
    p.add_argument("--dot", default=None, help="DOT with one cluster per clique")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("recognize", help="decide expanded-clique and emit the root")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", default=None)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("classify", help="forbidden-structure verdicts with witnesses")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None, help="odd-hole search budget")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("dominate", help="minimum dominating set (or clique heuristic)")
    p.add_argument("graph")
    p.add_argument("--exact", action="store_true", help="exact solve (default)")
    p.add_argument("--exhaustive", action="store_true", help="exhaustive cross-check solver")
    p.add_argument("--heuristic", action="store_true", help="one vertex per clique")
    p.add_argument("--cert", default=None, help="labeling/certificate JSON for --heuristic")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dominate)

    p = sub.add_parser("alpha2", help="maximum 2-independent set among f(v)=deg(v) vertices")
    p.add_argument("graph")
    p.add_argument("--f", default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_alpha2)

    p = sub.add_parser(
        "verify-identities", help="gamma/alpha2 identity and bounds, explicit f or sampled"
    )
    p.add_argument("graph")
    p.add_argument("--f", default=None)
    p.add_argument("--samples", type=int, default=0, help="random valid f vectors to test")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_verify_identities)

    p = sub.add_parser("reduce", help="build the hardness-reduction instance")
    p.add_argument("graph")
    p.add_argument("ell", type=int)
    p.add_argument("-o", "--output", default=None, help="H in graph format (default stdout)")
    p.add_argument("--gadgets", default=None, help="gadget index JSON path")
    p.add_argument("--dot", default=None)
    p.add_argument("--verify", action="store_true", help="solve both sides exactly")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("bench", help="recognizer step counts across families; CSV + figure")
    p.add_argument(
        "--families",
        default="path,sierpinski",
        help="path/even-cycle/subdivided-line take vertex-count sizes; "
        "sierpinski takes depth p (with q = 3)",
    )
    p.add_argument("--sizes", required=True, help="comma-separated ascending sizes")
    p.add_argument("--csv", required=True)
    p.add_argument("--plot", default=None, help="figure path ('none' to skip; default: csv stem + .png)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (GraphError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
