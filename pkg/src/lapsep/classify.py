"""Per-labeling verdicts and whole-graph classification.

A labeling is ENTANGLED when any probed cut breaks the degree condition
(that alone certifies entanglement), SEPARABLE when a sufficiency rule
applies, and UNKNOWN otherwise — the toolkit never equates "partial
transpose stayed positive" with "separable" outside the proven regimes.

Sufficiency rules, all requiring every cut to pass the degree condition:
  (a) bipartite shape with a side of dimension 2 (the 2 x q regime);
  (b) the graph is complete, or on four vertices is K_{2,2} or its
      complement (these are separable under every labeling);
  (c) bipartite shape whose row- or column-block interaction graph is a
      linear forest: the blocks can be ordered to make the Laplacian block
      tridiagonal, where the degree condition is again sufficient.
"""

from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import EmptyGraphError, LapsepError
from .graphs import Graph, is_linear_forest, parse_graph6
from .labeling import (TensorShape, VertexLabeling, enumerate_labelings,
                       symmetry_group_order)
from .ptgraph import (BipartiteSplit, all_cuts, block_interaction_graphs,
                      degree_condition_batch, pt_degrees, split_position_map)

_CHUNK = 2048


class Verdict(enum.Enum):
    SEPARABLE = "SEPARABLE"
    ENTANGLED = "ENTANGLED"
    UNKNOWN = "UNKNOWN"


class GraphClass(enum.Enum):
    S = "S"
    SE = "SE"
    E = "E"
    S_CANDIDATE = "S_CANDIDATE"
    UNRESOLVED = "UNRESOLVED"


@dataclass(frozen=True)
class DegreeViolation:
    """Evidence for an ENTANGLED verdict: a vertex that changed degree."""

    split: BipartiteSplit
    vertex: int
    deg_original: int
    deg_pt: int


@dataclass(frozen=True)
class CutResult:
    split: BipartiteSplit
    degree_ok: bool
    ppt_exact: Optional[bool] = None
    lambda_min: Optional[float] = None


@dataclass(frozen=True)
class LabelingVerdict:
    labeling: VertexLabeling
    verdict: Verdict
    cuts: tuple[CutResult, ...]
    reason: Optional[str] = None
    violation: Optional[DegreeViolation] = None


def _graph_level_reason(g: Graph) -> Optional[str]:
    """Graphs known to be separable for every labeling and factorization."""
    if g.is_complete:
        return "complete graph: separable for every labeling"
    if g.n == 4 and all(d == 2 for d in g.degrees):
        return "K_{2,2}: separable for every labeling"
    if g.n == 4 and all(d == 1 for d in g.degrees):
        return "complement of K_{2,2}: separable for every labeling"
    return None


def _sufficiency(g: Graph, lab: VertexLabeling, shape: TensorShape,
                 graph_reason: Optional[str]) -> tuple[Verdict, Optional[str]]:
    """Decide SEPARABLE vs UNKNOWN for a labeling whose cuts all passed."""
    if graph_reason is not None:
        return Verdict.SEPARABLE, graph_reason
    if shape.m != 2:
        # a single passing cut only certifies bipartite separability across
        # that cut, which is weaker than multipartite separability
        return Verdict.UNKNOWN, None
    split = all_cuts(shape)[0]
    if split.p == 2 or split.q == 2:
        return Verdict.SEPARABLE, "degree condition is sufficient in the 2xq regime"
    rows, cols = block_interaction_graphs(g, lab, split)
    if is_linear_forest(rows) or is_linear_forest(cols):
        return (Verdict.SEPARABLE,
                "block-tridiagonal Laplacian: degree condition is sufficient")
    return Verdict.UNKNOWN, None


def verdict(g: Graph, lab: VertexLabeling, shape: TensorShape,
            check_ppt: bool = False, tol: float = 1e-9) -> LabelingVerdict:
    """Verdict for one labeling, probing every single-factor-vs-rest cut.

    With check_ppt=True the exact matrix PPT test runs alongside each
    degree check and any disagreement raises CrossValidationError.
    """
    if g.is_empty:
        raise EmptyGraphError("empty graph has no density matrix")
    if shape.n != g.n:
        raise ValueError(f"shape {shape} does not match graph order {g.n}")
    if lab.shape != shape:
        raise ValueError("labeling shape does not match the requested shape")

    from .density import check_ppt_degree_agreement  # local: avoids cycle

    cuts: list[CutResult] = []
    violation: Optional[DegreeViolation] = None
    for split in all_cuts(shape):
        if check_ppt:
            ok, ppt_result = check_ppt_degree_agreement(g, lab, split)
            cuts.append(CutResult(split, ok, ppt_result.ppt, ppt_result.lambda_min))
        else:
            pos = split_position_map(shape, split)[lab.position_array()]
            ok = bool(degree_condition_batch(g, pos[None, :], split)[0])
            cuts.append(CutResult(split, ok))
        if not ok and violation is None:
            deg, ptdeg = pt_degrees(g, lab, split)
            v = next(i for i in range(g.n) if deg[i] != ptdeg[i])
            violation = DegreeViolation(split, v, deg[v], ptdeg[v])

    if violation is not None:
        return LabelingVerdict(lab, Verdict.ENTANGLED, tuple(cuts),
                               violation=violation)
    verd, reason = _sufficiency(g, lab, shape, _graph_level_reason(g))
    return LabelingVerdict(lab, verd, tuple(cuts), reason=reason)


@dataclass(frozen=True)
class GraphClassReport:
    graph: Graph
    shape: TensorShape
    graph_class: GraphClass
    n_separable: int
    n_entangled: int
    n_unknown: int
    witness_separable: Optional[str]
    witness_entangled: Optional[str]
    total_labelings: int
    reduced: bool
    group_order: int
    complete: bool = True

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.n_separable, self.n_entangled, self.n_unknown


def _decide_class(n_sep: int, n_ent: int, n_unk: int, complete: bool) -> GraphClass:
    if n_sep and n_ent:
        return GraphClass.SE  # witnesses both ways settle SE even when partial
    if not complete:
        return GraphClass.UNRESOLVED
    if n_ent == 0 and n_unk == 0:
        return GraphClass.S
    if n_sep == 0 and n_unk == 0:
        return GraphClass.E
    if n_sep == 0 and n_ent == 0:
        return GraphClass.S_CANDIDATE
    return GraphClass.UNRESOLVED


def classify(g: Graph, shape: TensorShape, reduced: bool = True,
             max_labelings: Optional[int] = None) -> GraphClassReport:
    """Fold verdicts over the labeling stream into a class report.

    Counts are reported over all n! labelings; in reduced mode each
    representative stands for a full symmetry orbit (the group acts freely,
    so every orbit has exactly group_order members).
    """
    if g.is_empty:
        raise EmptyGraphError("empty graph has no density matrix")
    if shape.n != g.n:
        raise ValueError(f"shape {shape} does not match graph order {g.n}")

    cuts = all_cuts(shape)
    posmaps = [split_position_map(shape, s) for s in cuts]
    graph_reason = _graph_level_reason(g)
    bipartite = shape.m == 2
    trivially_sufficient = bipartite and min(cuts[0].p, cuts[0].q) == 2

    scale = symmetry_group_order(shape) if reduced else 1
    n_sep = n_ent = n_unk = 0
    wit_sep: Optional[str] = None
    wit_ent: Optional[str] = None
    tested = 0
    truncated = False

    stream = enumerate_labelings(g.n, shape, reduced=reduced)
    block: list[tuple[int, ...]] = []

    def flush(block: list[tuple[int, ...]]) -> None:
        nonlocal n_sep, n_ent, n_unk, wit_sep, wit_ent
        perms = np.array(block, dtype=np.int64)
        ok_all = np.ones(len(block), dtype=bool)
        for split, pmap in zip(cuts, posmaps):
            ok_all &= degree_condition_batch(g, pmap[perms], split)
        n_ent += int((~ok_all).sum())
        if wit_ent is None and not ok_all.all():
            first = int(np.flatnonzero(~ok_all)[0])
            wit_ent = " ".join(str(x) for x in block[first])
        passing = np.flatnonzero(ok_all)
        if graph_reason is not None or trivially_sufficient:
            n_sep += int(passing.size)
            if wit_sep is None and passing.size:
                wit_sep = " ".join(str(x) for x in block[int(passing[0])])
        elif not bipartite:
            n_unk += int(passing.size)
        else:
            for idx in passing:
                lab = VertexLabeling(shape, block[int(idx)])
                verd, _ = _sufficiency(g, lab, shape, None)
                if verd is Verdict.SEPARABLE:
                    n_sep += 1
                    if wit_sep is None:
                        wit_sep = lab.as_line()
                else:
                    n_unk += 1

    for lab in stream:
        if max_labelings is not None and tested >= max_labelings:
            truncated = True
            break
        block.append(lab.perm)
        tested += 1
        if len(block) == _CHUNK:
            flush(block)
            block = []
    if block:
        flush(block)

    n_sep *= scale
    n_ent *= scale
    n_unk *= scale
    cls = _decide_class(n_sep, n_ent, n_unk, complete=not truncated)
    return GraphClassReport(
        graph=g, shape=shape, graph_class=cls,
        n_separable=n_sep, n_entangled=n_ent, n_unknown=n_unk,
        witness_separable=wit_sep, witness_entangled=wit_ent,
        total_labelings=n_sep + n_ent + n_unk, reduced=reduced,
        group_order=scale, complete=not truncated)


# -- bulk scanning -------------------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    index: int
    graph6: str
    report: Optional[GraphClassReport]
    error: Optional[str]
    elapsed_ms: float

    @property
    def ok(self) -> bool:
        return self.error is None and self.report is not None and self.report.complete


def _scan_one(args: tuple[int, str, tuple[int, ...], bool, Optional[int]]) -> ScanRow:
    index, line, factors, reduced, max_labelings = args
    shape = TensorShape(factors)
    start = time.perf_counter()
    try:
        g = parse_graph6(line)
        if g.n != shape.n:
            raise ValueError(f"graph order {g.n} does not match shape {shape}")
        report = classify(g, shape, reduced=reduced, max_labelings=max_labelings)
        error = None
    except (LapsepError, ValueError) as exc:
        report, error = None, str(exc)
    elapsed = (time.perf_counter() - start) * 1000.0
    return ScanRow(index, line.strip(), report, error, elapsed)


def scan(lines: Iterable[str], shape: TensorShape, reduced: bool = True,
         jobs: int = 1, max_labelings: Optional[int] = None) -> list[ScanRow]:
    """Classify a stream of graph6 lines; rows keep input order.

    Malformed lines become error rows and the scan continues.
    """
    tasks = [(i, line, shape.factors, reduced, max_labelings)
             for i, line in enumerate(s for s in lines if s.strip())]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_scan_one, tasks, chunksize=8))
    return [_scan_one(t) for t in tasks]


TSV_COLUMNS = ("graph6", "n", "shape", "class", "n_separable", "n_entangled",
               "n_unknown", "witness_sep", "witness_ent", "elapsed_ms")


def _row_fields(row: ScanRow, shape: TensorShape) -> dict:
    if row.report is None:
        return {"graph6": row.graph6, "n": None, "shape": str(shape),
                "class": "ERROR", "n_separable": 0, "n_entangled": 0,
                "n_unknown": 0, "witness_sep": None, "witness_ent": None,
                "elapsed_ms": round(row.elapsed_ms, 3), "error": row.error}
    rep = row.report
    return {"graph6": row.graph6, "n": rep.graph.n, "shape": str(shape),
            "class": rep.graph_class.value, "n_separable": rep.n_separable,
            "n_entangled": rep.n_entangled, "n_unknown": rep.n_unknown,
            "witness_sep": rep.witness_separable,
            "witness_ent": rep.witness_entangled,
            "elapsed_ms": round(row.elapsed_ms, 3),
            "error": None if rep.complete else "incomplete: labeling budget hit"}


def rows_to_tsv(rows: list[ScanRow], shape: TensorShape) -> str:
    out = ["\t".join(TSV_COLUMNS)]
    for row in rows:
        f = _row_fields(row, shape)
        cls = f["class"]
        if f["error"] and cls == "ERROR":
            cls = "ERROR: " + f["error"].replace("\t", " ").replace("\n", " ")
        out.append("\t".join([
            f["graph6"], str(f["n"] if f["n"] is not None else "-"), f["shape"],
            cls, str(f["n_separable"]), str(f["n_entangled"]),
            str(f["n_unknown"]), f["witness_sep"] or "-",
            f["witness_ent"] or "-", str(f["elapsed_ms"])]))
    return "\n".join(out)


def rows_to_json_lines(rows: list[ScanRow], shape: TensorShape) -> str:
    return "\n".join(json.dumps(_row_fields(row, shape)) for row in rows)
