"""Command-line interface.

Subcommands: check, pt-graph, entangle, classify, scan.  Every option can
be defaulted through an environment variable (LAPSEP_SHAPE, LAPSEP_TOL,
LAPSEP_REDUCED, LAPSEP_BUDGET, LAPSEP_JOBS, LAPSEP_SEED, LAPSEP_FORMAT);
explicit flags win.  Exit codes: 0 success, 1 input error or proven
not-found, 2 incomplete scan / exhausted search budget.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import density
from .classify import rows_to_json_lines, rows_to_tsv, scan, verdict
from .entangle import find_entangling_labeling
from .errors import (EmptyGraphError, Graph6Error, LapsepError,
                     NoEntanglingLabelingError, SearchBudgetExceededError)
from .graphs import parse_graph6, to_graph6
from .labeling import TensorShape, VertexLabeling
from .ptgraph import (all_cuts, degree_condition, partial_transpose_graph,
                      pt_degrees, single_factor_split, split_labeling,
                      split_of_shape)


def _env(name: str) -> Optional[str]:
    return os.environ.get(f"LAPSEP_{name}")


def _env_int(name: str, default: Optional[int]) -> Optional[int]:
    raw = _env(name)
    return int(raw) if raw is not None else default


def _env_float(name: str, default: float) -> float:
    raw = _env(name)
    return float(raw) if raw is not None else default


def _env_bool(name: str, default: bool) -> bool:
    raw = _env(name)
    if raw is None:
        return default
    return raw not in ("0", "false", "no", "")


def _resolve_shape(args) -> TensorShape:
    raw = args.shape or _env("SHAPE")
    if not raw:
        raise ValueError("no shape given (use --shape or LAPSEP_SHAPE)")
    return TensorShape.parse(raw)


def _resolve(args) -> dict:
    return {
        "tol": args.tol if args.tol is not None else _env_float("TOL", density.DEFAULT_TOL),
        "reduced": args.reduced if args.reduced is not None else _env_bool("REDUCED", True),
        "budget": args.budget if args.budget is not None else _env_int("BUDGET", None),
        "jobs": args.jobs if args.jobs is not None else _env_int("JOBS", os.cpu_count() or 1),
        "seed": args.seed if args.seed is not None else _env_int("SEED", 0),
        "fmt": args.format if args.format is not None else (_env("FORMAT") or "tsv"),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lapsep",
        description="Separability analysis of graph Laplacian density matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, labeling=False, fmt=False):
        p.add_argument("--shape", help="tensor factorization, e.g. 2x3")
        p.add_argument("--tol", type=float, default=None,
                       help="floating tolerance on the minimum eigenvalue")
        p.add_argument("--budget", type=int, default=None,
                       help="labeling budget for searches / classification")
        p.add_argument("--jobs", type=int, default=None, help="worker processes")
        p.add_argument("--seed", type=int, default=None, help="RNG seed")
        grp = p.add_mutually_exclusive_group()
        grp.add_argument("--reduced", dest="reduced", action="store_true",
                         default=None, help="symmetry-reduced enumeration (default)")
        grp.add_argument("--full", dest="reduced", action="store_false",
                         help="enumerate all n! labelings")
        if labeling:
            p.add_argument("--labeling", required=True,
                           help="permutation line 'sigma(0) sigma(1) ...'")
        if fmt:
            p.add_argument("--format", choices=("tsv", "json"), default=None)
        else:
            p.set_defaults(format=None)

    p_check = sub.add_parser("check", help="verdict for one graph + labeling")
    common(p_check, labeling=True)
    p_check.add_argument("graph6")
    p_check.add_argument("--dump-matrix", action="store_true",
                         help="print the exact density matrix and each cut's "
                              "partial transpose as rationals")

    p_pt = sub.add_parser("pt-graph", help="partial-transpose graph and degrees")
    common(p_pt, labeling=True)
    p_pt.add_argument("graph6")
    p_pt.add_argument("--cut", type=int, default=0,
                      help="factor index merged against the rest (multipartite)")

    p_ent = sub.add_parser("entangle", help="construct an entangling labeling")
    common(p_ent)
    p_ent.add_argument("graph6")

    p_cls = sub.add_parser("classify", help="class report for one graph")
    common(p_cls, fmt=True)
    p_cls.add_argument("graph6")

    p_scan = sub.add_parser("scan", help="classify a stream of graph6 lines")
    common(p_scan, fmt=True)
    p_scan.add_argument("input", nargs="?", default="-",
                        help="file of graph6 lines, or - for stdin")
    return parser


def _cmd_check(args, opts) -> int:
    shape = _resolve_shape(args)
    g = parse_graph6(args.graph6)
    lab = VertexLabeling.from_line(shape, args.labeling)
    result = verdict(g, lab, shape, check_ppt=True, tol=opts["tol"])
    print(f"graph: {args.graph6.strip()}  n={g.n}  shape={shape}")
    print(f"labeling: {lab.as_line()}")
    for cut in result.cuts:
        print(f"cut {cut.split} (factors {list(cut.split.left_factors)} vs "
              f"{list(cut.split.right_factors)}): "
              f"degree-condition {'PASS' if cut.degree_ok else 'FAIL'}  "
              f"ppt-exact {'PASS' if cut.ppt_exact else 'FAIL'}  "
              f"lambda_min {cut.lambda_min:.6e}")
    print(f"verdict: {result.verdict.value}")
    if result.reason:
        print(f"reason: {result.reason}")
    if result.violation:
        v = result.violation
        print(f"certificate: vertex {v.vertex} degree {v.deg_original} -> "
              f"{v.deg_pt} under cut {v.split}")
    if args.dump_matrix:
        bip = split_labeling(lab, all_cuts(shape)[0])
        rho = density.density_matrix(g, bip)
        print("rho:")
        print(density.format_rational_matrix(rho.numerator, rho.denominator))
        for cut in all_cuts(shape):
            bip = split_labeling(lab, cut)
            rho = density.density_matrix(g, bip)
            pt = density.matrix_partial_transpose(rho.numerator, cut)
            print(f"rho^pT (cut {cut}):")
            print(density.format_rational_matrix(pt, rho.denominator))
    return 0


def _cmd_pt_graph(args, opts) -> int:
    shape = _resolve_shape(args)
    g = parse_graph6(args.graph6)
    lab = VertexLabeling.from_line(shape, args.labeling)
    split = split_of_shape(shape) if shape.m == 2 else single_factor_split(shape, args.cut)
    ptg = partial_transpose_graph(g, lab, split)
    deg, ptdeg = pt_degrees(g, lab, split)
    print(f"pt-graph6: {to_graph6(ptg)}")
    print("vertex\ttuple\tdeg\tpt_deg")
    for v in range(g.n):
        tup = ",".join(str(t) for t in lab.assignment(v))
        print(f"{v}\t({tup})\t{deg[v]}\t{ptdeg[v]}")
    ok = degree_condition(g, lab, split)
    print(f"degree condition: {'PASS' if ok else 'FAIL'}")
    return 0


def _cmd_entangle(args, opts) -> int:
    shape = _resolve_shape(args)
    g = parse_graph6(args.graph6)
    print(f"seed: {opts['seed']}")
    cert = find_entangling_labeling(g, shape, budget=opts["budget"],
                                    seed=opts["seed"])
    print(f"case: {cert.case_tag}")
    print(f"split: {cert.split} (factors {list(cert.split.left_factors)} vs "
          f"{list(cert.split.right_factors)})")
    if cert.case_tag != "FALLBACK_SEARCH":
        print(f"x: {cert.x}  d: {cert.d}")
        print(f"U: {sorted(cert.u_set)}")
        print(f"W: {sorted(cert.w_set)}")
        print(f"k={cert.k} t={cert.t} r={cert.r} s={cert.s} "
              f"e(x,U)={cert.e_x_u} e(U,W)={cert.e_u_w}")
    else:
        print(f"labelings tried: {cert.labelings_tried}")
    lab = cert.labeling_for(shape)
    print(f"labeling (shape {shape}): {lab.as_line()}")
    print(f"violation: vertex {cert.violating_vertex} degree "
          f"{cert.deg_original} -> {cert.deg_pt} in the pT graph")
    bip = cert.labeling
    rho = density.density_matrix(g, bip)
    result = density.is_ppt(rho, cert.split, method="auto", tol=opts["tol"])
    print(f"lambda_min(rho^pT): {result.lambda_min:.6e}  "
          f"ppt={'yes' if result.ppt else 'no'}")
    return 0


def _scan_rows(rows, shape, fmt) -> int:
    if fmt == "json":
        print(rows_to_json_lines(rows, shape))
    else:
        print(rows_to_tsv(rows, shape))
    return 0 if all(row.ok for row in rows) else 2


def _cmd_classify(args, opts) -> int:
    shape = _resolve_shape(args)
    rows = scan([args.graph6], shape, reduced=opts["reduced"], jobs=1,
                max_labelings=opts["budget"])
    return _scan_rows(rows, shape, opts["fmt"])


def _cmd_scan(args, opts) -> int:
    shape = _resolve_shape(args)
    if args.input == "-":
        lines = [line for line in sys.stdin.read().splitlines()]
    else:
        with open(args.input, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    rows = scan(lines, shape, reduced=opts["reduced"], jobs=opts["jobs"],
                max_labelings=opts["budget"])
    return _scan_rows(rows, shape, opts["fmt"])


_HANDLERS = {
    "check": _cmd_check,
    "pt-graph": _cmd_pt_graph,
    "entangle": _cmd_entangle,
    "classify": _cmd_classify,
    "scan": _cmd_scan,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = _resolve(args)
        return _HANDLERS[args.command](args, opts)
    except SearchBudgetExceededError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 2
    except (NoEntanglingLabelingError, EmptyGraphError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (LapsepError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
