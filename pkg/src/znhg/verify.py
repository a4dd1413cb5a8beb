"""Computed-versus-predicted comparison harness.

analyze() produces the full per-n report: construction, every exactly
computable invariant, the closed-form prediction, and per-field
agreement flags.  run_sweep() applies selected comparisons over a range
of n; disagreements come back as findings in the result, never as
exceptions, because the harness exists to report them.

Exact host-tree searches are cached per isomorphism class inside a
sweep: hypergraphs of equal exponent pattern are matched by an explicit
isomorphism search, witnesses carried across the verified bijection and
re-verified, so the per-n guarantee does not rest on the cache key.
"""

from __future__ import annotations

import json
import math
import multiprocessing
from dataclasses import dataclass, field

from . import classify, metrics, topology
from .arith import Factorization, factorize, factorize_range
from .classify import COMPUTED_FIELDS, FORMULA_ONLY_FIELDS, Classification
from .hypergraph import (Hypergraph, build_comaximal_hypergraph,
                         build_intersection_hypergraph)

SCHEMA = "znhg/1"
ALL_CHECKS = ("diameter", "girth", "chromatic", "star", "hypertree",
              "planarity", "single-edge", "emptiness", "iso")
DEFAULT_HOST_TREE_LIMIT = 9


def _encode(value):
    if value is math.inf or value == math.inf:
        return "infinite"
    return value


@dataclass(frozen=True)
class FieldComparison:
    computed: object
    predicted: object
    agree: bool
    mode: str  # "computed" or "formula-only"


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    factors: tuple[tuple[int, int], ...]
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]  # generator sets
    computed: dict
    predicted: Classification
    agreement: dict
    host_tree_limit: int

    @property
    def findings(self) -> list[str]:
        return [name for name, cmp in self.agreement.items() if not cmp.agree]

    def to_json(self) -> str:
        doc = {
            "schema": SCHEMA,
            "kind": "analysis",
            "n": self.n,
            "factorization": [list(pair) for pair in self.factors],
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "computed": {k: _encode(v) for k, v in sorted(self.computed.items())},
            "predicted": self.predicted.to_json_dict(),
            "agreement": {
                name: {"computed": _encode(cmp.computed),
                       "predicted": _encode(cmp.predicted),
                       "agree": cmp.agree,
                       "mode": cmp.mode}
                for name, cmp in sorted(self.agreement.items())},
            "verification_modes": {
                **{f: "computed" for f in COMPUTED_FIELDS},
                **{f: "formula-only" for f in FORMULA_ONLY_FIELDS}},
            "host_tree_limit": self.host_tree_limit,
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "AnalysisReport":
        doc = json.loads(text)
        if doc.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {doc.get('schema')!r}")

        def dec(v):
            return math.inf if v == "infinite" else v

        return AnalysisReport(
            n=doc["n"],
            factors=tuple((p, a) for p, a in doc["factorization"]),
            vertices=tuple(doc["vertices"]),
            edges=tuple(tuple(e) for e in doc["edges"]),
            computed={k: dec(v) for k, v in doc["computed"].items()},
            predicted=Classification.from_json_dict(doc["predicted"]),
            agreement={
                name: FieldComparison(dec(c["computed"]), dec(c["predicted"]),
                                      c["agree"], c["mode"])
                for name, c in doc["agreement"].items()},
            host_tree_limit=doc["host_tree_limit"],
        )


def analyze(n: int, host_tree_limit: int = DEFAULT_HOST_TREE_LIMIT) -> AnalysisReport:
    """Full report for one n: build, compute, predict, compare."""
    if n < 2:
        raise ValueError("analysis needs n >= 2")
    f = factorize(n)
    h = build_intersection_hypergraph(f)
    pred = classify.predict(f)

    computed: dict = {
        "is_empty": h.is_empty,
        "vertex_count": len(h.vertices),
        "edge_count": len(h.edges),
        "single_edge": len(h.edges) == 1,
    }
    agreement: dict = {}

    def compare(name, computed_value, predicted_value, agree=None):
        agreement[name] = FieldComparison(
            computed_value, predicted_value,
            bool(computed_value == predicted_value) if agree is None else agree,
            "computed")

    compare("is_empty", h.is_empty, pred.is_empty)
    if h.is_empty:
        return AnalysisReport(n, f.factors, h.vertices, h.edge_label_sets(),
                              computed, pred, agreement, host_tree_limit)

    computed["diameter"] = metrics.diameter(h)
    computed["girth"] = metrics.girth(h)
    computed["chromatic"] = metrics.chromatic_number(h)
    try:
        metrics.constructive_two_coloring(f, h)
        computed["two_coloring_proper"] = True
    except metrics.ColoringContradiction:
        computed["two_coloring_proper"] = False
    computed["star"] = metrics.is_star(h)
    host = metrics.has_host_tree(h, host_tree_limit)
    computed["host_tree"] = host.status
    planarity = topology.hypergraph_planar(h)
    computed["planar"] = planarity.planar
    if not planarity.planar:
        computed["planarity_witness"] = planarity.witness_kind
    cert_ok = _certificate_valid(h, planarity)
    computed["planarity_certificate_valid"] = cert_ok

    compare("single_edge", computed["single_edge"], pred.single_edge)
    compare("diameter", computed["diameter"], pred.diameter)
    compare("girth", computed["girth"], pred.girth)
    compare("chromatic", computed["chromatic"], pred.chromatic,
            agree=computed["chromatic"] == pred.chromatic
            and computed["two_coloring_proper"])
    compare("star", computed["star"], pred.star)
    if host.status != "unknown":
        compare("hypertree", host.status == "yes", pred.hypertree)
    compare("planar", planarity.planar, pred.planar,
            agree=planarity.planar == pred.planar and cert_ok)
    return AnalysisReport(n, f.factors, h.vertices, h.edge_label_sets(),
                          computed, pred, agreement, host_tree_limit)


def _certificate_valid(h: Hypergraph, result: topology.PlanarityResult) -> bool:
    g = topology.incidence_graph(h)
    if result.planar:
        return topology.verify_rotation_system(g, result.rotation)
    return topology.verify_kuratowski_witness(g, result.witness) is not None


def render_report(report: AnalysisReport) -> str:
    """Human-readable analysis text."""
    lines = [f"n = {report.n} = "
             + " * ".join(f"{p}^{a}" if a > 1 else str(p)
                          for p, a in report.factors)]
    if not report.vertices:
        lines.append("hypergraph: empty (n has at most one prime divisor)")
    else:
        lines.append(f"vertices ({len(report.vertices)}): "
                     + " ".join(f"<{d}>" for d in report.vertices))
        lines.append(f"hyperedges ({len(report.edges)}): "
                     + " ".join("{" + ",".join(map(str, e)) + "}"
                                for e in report.edges))
    lines.append("field           computed    predicted   agree  mode")
    pred_dict = report.predicted.to_json_dict()
    for name, cmp in sorted(report.agreement.items()):
        lines.append(f"{name:<15} {str(_encode(cmp.computed)):<11} "
                     f"{str(_encode(cmp.predicted)):<11} "
                     f"{'yes' if cmp.agree else 'NO':<6} {cmp.mode}")
    for name in FORMULA_ONLY_FIELDS:
        lines.append(f"{name:<15} {'-':<11} {str(_encode(pred_dict[name])):<11} "
                     f"{'-':<6} formula-only")
    if report.findings:
        lines.append("FINDINGS: " + ", ".join(report.findings))
    else:
        lines.append("all verifiable fields agree")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Finding:
    n: int
    check: str
    computed: str
    predicted: str


@dataclass
class SweepResult:
    lo: int
    hi: int
    checks: tuple[str, ...]
    host_tree_limit: int
    compared: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)
    hypertree_unknown: int = 0

    @property
    def total_findings(self) -> int:
        return len(self.findings)


# host-tree searches per exponent pattern; entries are (representative
# hypergraph, its exact result) and transfer only via verified isomorphism
_host_tree_cache: dict[tuple[int, ...], tuple[Hypergraph, metrics.HostTreeResult]] = {}


def cached_host_tree(f: Factorization, h: Hypergraph,
                     limit: int) -> metrics.HostTreeResult:
    if len(h.vertices) > limit:
        return metrics.HostTreeResult("unknown")
    key = tuple(sorted(f.exponents))
    hit = _host_tree_cache.get(key)
    if hit is not None:
        h0, r0 = hit
        ok, mapping = metrics.isomorphic(h0, h)
        if ok:
            return metrics.host_tree_relabelled(r0, h0, h, mapping)
    result = metrics.has_host_tree(h, limit)
    _host_tree_cache.setdefault(key, (h, result))
    return result


def _sweep_one(args) -> tuple[int, list, int]:
    f, checks, host_tree_limit = args
    outcomes = []  # (check, computed_str, predicted_str, agree)
    unknown = 0
    pred = classify.predict(f)
    h = None

    def build():
        nonlocal h
        if h is None:
            h = build_intersection_hypergraph(f)
        return h

    if "emptiness" in checks:
        hh = build()
        outcomes.append(("emptiness", str(hh.is_empty), str(pred.is_empty),
                         hh.is_empty == pred.is_empty))
    if f.omega >= 2:
        hh = build()
        if "diameter" in checks:
            d = metrics.diameter(hh)
            outcomes.append(("diameter", str(_encode(d)),
                             str(_encode(pred.diameter)), d == pred.diameter))
        if "girth" in checks:
            g = metrics.girth(hh)
            ok = g == pred.girth and g in (2, 4, math.inf)
            outcomes.append(("girth", str(_encode(g)),
                             str(_encode(pred.girth)), ok))
        if "chromatic" in checks:
            chi = metrics.chromatic_number(hh)
            try:
                metrics.constructive_two_coloring(f, hh)
                proper = True
            except metrics.ColoringContradiction:
                proper = False
            ok = chi == pred.chromatic and proper
            outcomes.append(("chromatic",
                             f"{chi}{'' if proper else ' (A/B split improper)'}",
                             str(pred.chromatic), ok))
        if "star" in checks:
            s = metrics.is_star(hh)
            outcomes.append(("star", str(s), str(pred.star), s == pred.star))
        if "single-edge" in checks:
            se = len(hh.edges) == 1
            outcomes.append(("single-edge", str(se), str(pred.single_edge),
                             se == pred.single_edge))
        if "hypertree" in checks:
            res = cached_host_tree(f, hh, host_tree_limit)
            if res.status == "unknown":
                unknown += 1
            else:
                ok = (res.status == "yes") == pred.hypertree
                outcomes.append(("hypertree", res.status,
                                 "yes" if pred.hypertree else "no", ok))
        if "planarity" in checks:
            res = topology.hypergraph_planar(hh)
            cert_ok = _certificate_valid(hh, res)
            ok = res.planar == pred.planar and cert_ok
            label = str(res.planar) + ("" if cert_ok else " (invalid certificate)")
            outcomes.append(("planarity", label, str(pred.planar), ok))
        if "iso" in checks:
            co = build_comaximal_hypergraph(f)
            same, witness = metrics.isomorphic(hh, co)
            ok = same and metrics.verify_isomorphism(hh, co, witness)
            outcomes.append(("iso", "isomorphic" if ok else "NOT isomorphic",
                             "isomorphic", ok))
    return f.n, outcomes, unknown


def run_sweep(lo: int, hi: int, checks=ALL_CHECKS,
              host_tree_limit: int = DEFAULT_HOST_TREE_LIMIT,
              jobs: int = 1) -> SweepResult:
    """Run the selected computed-vs-predicted comparisons for lo..hi.

    Results are merged in ascending n regardless of jobs, so output is
    deterministic across concurrency levels.
    """
    if not 2 <= lo <= hi:
        raise ValueError("need 2 <= lo <= hi")
    unknown_checks = set(checks) - set(ALL_CHECKS)
    if unknown_checks:
        raise ValueError(f"unknown checks: {sorted(unknown_checks)}")
    checks = tuple(c for c in ALL_CHECKS if c in checks)
    result = SweepResult(lo, hi, checks, host_tree_limit,
                         compared={c: 0 for c in checks})
    tasks = [(f, checks, host_tree_limit) for f in factorize_range(lo, hi)]
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            rows = pool.map(_sweep_one, tasks, chunksize=64)
    else:
        rows = [_sweep_one(t) for t in tasks]
    for n, outcomes, unknown in sorted(rows):
        result.hypertree_unknown += unknown
        for check, comp, predicted, agree in outcomes:
            result.compared[check] += 1
            if not agree:
                result.findings.append(Finding(n, check, comp, predicted))
    return result


def sweep_to_json(result: SweepResult) -> str:
    doc = {
        "schema": SCHEMA,
        "kind": "sweep",
        "lo": result.lo,
        "hi": result.hi,
        "checks": list(result.checks),
        "host_tree_limit": result.host_tree_limit,
        "compared": result.compared,
        "hypertree_unknown": result.hypertree_unknown,
        "findings": [{"n": f.n, "check": f.check, "computed": f.computed,
                      "predicted": f.predicted} for f in result.findings],
        "total_findings": result.total_findings,
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def render_sweep(result: SweepResult) -> str:
    lines = [f"sweep {result.lo}..{result.hi} "
             f"checks={','.join(result.checks)}"]
    for check in result.checks:
        n_findings = sum(1 for f in result.findings if f.check == check)
        line = f"  {check}: {result.compared[check]} compared, {n_findings} findings"
        if check == "hypertree" and result.hypertree_unknown:
            line += f", {result.hypertree_unknown} unknown (above search limit)"
        lines.append(line)
    for f in result.findings:
        lines.append(f"  FINDING n={f.n} {f.check}: "
                     f"computed={f.computed} predicted={f.predicted}")
    lines.append(f"total findings: {result.total_findings}")
    return "\n".join(lines) + "\n"
