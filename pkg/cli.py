"""
Command-line interface for the Folkman workbench.

Subcommands: compute, verify, construct, reduce, audit, explore. Reports go
to standard output as text or as line-delimited JSON records; progress and
diagnostics go to standard error.

Exit status: 0 success, 1 violations found, 2 usage or input error,
3 budget exhausted.

Author: Graph Invariants Team
Date: 2026-10-19
"""

import argparse
import asyncio
import sys
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence

from dotenv import load_dotenv

# Load environment variables FIRST
load_dotenv()

import orjson
from pydantic import ValidationError

from state import INVARIANTS, RunConfig, VerificationReport
from tools.constructions import (
    basic_graph,
    fig1_gadget,
    generalized_mycielski,
    mycielski,
    mycielski_iterated,
)
from tools.errors import BudgetExceeded, FolkmanError, PreconditionViolated, SizeCapExceeded
from tools.exact_solvers import (
    SolverBudget,
    chromatic_number,
    clique_number,
    find_diamond,
    find_induced_even_cycle,
    independence_number,
    odd_cycle_transversal,
    shortest_cycle,
)
from tools.exploration import (
    alpha_p,
    audit_generalized_mycielski,
    f_p_objective,
    folkman_coefficient_report,
    mycielski_mir_report,
    reed_gap,
)
from tools.folkman_invariants import (
    folkman_number,
    min_deletion_to_half_stable,
    min_independence_ratio,
    potential,
)
from tools.graph_core import Graph, enumerate_graphs, members
from tools.graph_io import GraphStream, write_graph, write_graph6
from tools.proof_machinery import (
    apex_replacement,
    audit_proof_inequalities,
    diamond_reduction,
    even_cycle_contraction,
)
from verify_workflow import abatch_verify

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

COMPUTE_INVARIANTS = ("alpha", "omega", "chi", "rho", "f", "mir", "oct", "girth", "deletion", "even-hole", "diamond")
DEFAULT_COMPUTE = "alpha,chi,rho,f"

VERIFY_ALIASES = {"roundtrip": "graph6-roundtrip"}
CONSTRUCT_ACTIONS = ("cycle", "path", "complete", "edgeless", "kbipartite", "fig1", "mycielski", "gen-mycielski")
REDUCE_ACTIONS = ("even-cycle", "diamond", "apex")
AUDIT_ACTIONS = ("inequalities", "conclusion", "mir-mycielski", "reed-gap", "coefficient")
EXPLORE_ACTIONS = ("alpha-p", "f-p")

_GLOBAL_KEYS = ("command", "action", "input_path", "input_format", "strict", "max_n", "time_limit_ms",
                "node_limit", "workers", "output", "timing")


def _log(message: str) -> None:
    print(message, file=sys.stderr)


def _rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class _Emitter:
    """Writes one report per call, as text or as a JSON line."""

    def __init__(self, config: RunConfig):
        self.structured = config.output == "structured"

    def __call__(self, record: Dict[str, Any], text: str) -> None:
        if self.structured:
            sys.stdout.write(orjson.dumps(record).decode() + "\n")
        else:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
        sys.stdout.flush()


# ---------------------------------------------------------------------------
# Input
# ---------------------------------------------------------------------------

def _input_graphs(config: RunConfig) -> Iterator[tuple]:
    """(position, graph) pairs; malformed records are logged and skipped unless strict."""
    stream = GraphStream(config.input_path or "-", config.input_format, config.strict)
    for record in stream:
        if not record.ok:
            _log(f"[ERROR] {record.error}")
            continue
        if record.graph.n > config.max_n:
            raise SizeCapExceeded(f"line {record.position}: graph", record.graph.n, config.max_n)
        yield record.position, record.graph


def _require_single(config: RunConfig) -> Graph:
    graphs = list(_input_graphs(config))
    if not graphs:
        raise PreconditionViolated("no graph on input")
    return graphs[0][1]


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _compute_record(g: Graph, names: Sequence[str], budget: SolverBudget) -> Dict[str, Any]:
    record: Dict[str, Any] = {}
    for name in names:
        if name == "alpha":
            alpha, witness = independence_number(g, budget)
            record["alpha"] = alpha
            record["alpha_witness"] = members(witness)
        elif name == "omega":
            omega, witness = clique_number(g, budget)
            record["omega"] = omega
            record["omega_witness"] = members(witness)
        elif name == "chi":
            chi, cert = chromatic_number(g, budget)
            record["chi"] = chi
            record["coloring"] = list(cert.colors)
        elif name == "rho":
            record["rho"] = potential(g)
        elif name == "f":
            f, witness = folkman_number(g, budget)
            record["f"] = f
            record["f_witness"] = members(witness.subset)
        elif name == "mir":
            result = min_independence_ratio(g)
            record["mir"] = _rational(result.mir)
            record["mir_argmin"] = members(result.argmin)
            record["hall_ratio"] = _rational(result.hall_ratio)
        elif name == "oct":
            size, witness = odd_cycle_transversal(g, budget)
            record["oct"] = size
            record["oct_witness"] = members(witness)
        elif name == "girth":
            found = shortest_cycle(g)
            record["girth"] = None if found is None else found[1]
            record["shortest_cycle"] = None if found is None else found[0]
        elif name == "deletion":
            k, witness = min_deletion_to_half_stable(g)
            record["half_stable_deletion"] = k
            record["deletion_witness"] = members(witness)
        elif name == "even-hole":
            record["even_hole"] = find_induced_even_cycle(g)
        elif name == "diamond":
            match = find_diamond(g)
            record["diamond"] = None if match is None else {
                "x": match.x, "y": match.y, "u": match.u, "v": match.v, "induced": match.induced}
    return record


def _format_compute(position: int, g: Graph, record: Dict[str, Any]) -> str:
    shown = [f"{key}={value}" for key, value in record.items() if not isinstance(value, (list, dict))]
    return f"line {position} {write_graph6(g)}: n={g.n} m={g.edge_count()} " + " ".join(shown)


def _cmd_compute(config: RunConfig, emit: _Emitter) -> int:
    names = [name.strip() for name in config.params.get("invariants", DEFAULT_COMPUTE).split(",") if name.strip()]
    unknown = [name for name in names if name not in COMPUTE_INVARIANTS]
    if unknown:
        raise PreconditionViolated(f"unknown invariants {unknown}; choose from {','.join(COMPUTE_INVARIANTS)}")
    names = [name for name in COMPUTE_INVARIANTS if name in names]
    status = EXIT_OK
    for position, g in _input_graphs(config):
        try:
            fields = _compute_record(g, names, config.budget)
        except BudgetExceeded as e:
            _log(f"[ERROR] line {position}: {e}")
            status = EXIT_BUDGET
            continue
        record = {"kind": "invariants", "position": position, "graph6": write_graph6(g),
                  "n": g.n, "m": g.edge_count(), **fields}
        emit(record, _format_compute(position, g, fields))
    return status


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _verify_corpus(config: RunConfig) -> tuple:
    params = config.params
    dedup = bool(params.get("dedup"))
    label = "dedup" if dedup else "labeled"
    if params.get("n") is not None:
        n = params["n"]
        return enumerate_graphs(n, dedup), f"n={n} {label}"
    if params.get("max_n_vertices") is not None:
        top = params["max_n_vertices"]
        corpus = (g for n in range(top + 1) for g in enumerate_graphs(n, dedup))
        return corpus, f"n<={top} {label}"
    path = config.input_path or "-"
    return GraphStream(path, config.input_format, config.strict), path


def _format_report(report: VerificationReport) -> str:
    lines = [
        f"{report['invariant']} on {report['corpus']}: {'PASS' if report['passed'] else 'FAIL'}",
        f"  checked: {report['checked']} (vacuous {report['vacuous']})",
        f"  skipped: {report['skipped']} (budget {report['budget_exhausted']}, malformed {report['malformed']})",
        f"  unreached: {report['unreached']}",
        f"  violations: {len(report['violations'])}",
    ]
    for violation in report["violations"]:
        lines.append(f"    line {violation['position']} {violation['graph6']}: {violation['values']}")
    if report["elapsed_ms"] is not None:
        lines.append(f"  elapsed: {report['elapsed_ms']} ms")
    return "\n".join(lines)


def _report_record(report: VerificationReport) -> Dict[str, Any]:
    record = {"kind": "verification", **report}
    if record["elapsed_ms"] is None:
        del record["elapsed_ms"]
    return record


def _cmd_verify(config: RunConfig, emit: _Emitter) -> int:
    invariant = VERIFY_ALIASES.get(config.action, config.action)
    corpus, descriptor = _verify_corpus(config)
    state = asyncio.run(abatch_verify(corpus, invariant, config.workers, config.budget,
                                      descriptor, config.max_n, config.timing))
    report = state["report"]
    emit(_report_record(report), _format_report(report))
    if state["workflow_status"] == "corpus_failed":
        return EXIT_USAGE
    if report["violations"]:
        return EXIT_VIOLATION
    if report["budget_exhausted"]:
        return EXIT_BUDGET
    return EXIT_OK


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _need(params: Dict[str, Any], *names: str) -> List[Any]:
    missing = [name for name in names if params.get(name) is None]
    if missing:
        raise PreconditionViolated(f"missing --{', --'.join(m.replace('_', '-') for m in missing)}")
    return [params[name] for name in names]


def _constructed(config: RunConfig) -> Iterable[Graph]:
    action, params = config.action, config.params
    if action in ("cycle", "path", "complete", "edgeless"):
        (n,) = _need(params, "n")
        return [basic_graph(action, n)]
    if action == "kbipartite":
        a, b = _need(params, "a", "b")
        return [basic_graph("complete_bipartite", a, b)]
    if action == "fig1":
        return [fig1_gadget()]
    if action == "mycielski":
        if params.get("k") is not None:
            return [mycielski_iterated(params["k"])]
        return [mycielski(g) for _, g in _input_graphs(config)]
    k, ell = _need(params, "k", "ell")
    return [generalized_mycielski(k, ell)]


def _cmd_construct(config: RunConfig, emit: _Emitter) -> int:
    fmt = config.params.get("write_format") or "graph6"
    for g in _constructed(config):
        record = {"kind": "graph", "family": config.action, "graph6": write_graph6(g), "n": g.n, "m": g.edge_count()}
        emit(record, write_graph(g, fmt))
    return EXIT_OK


# ---------------------------------------------------------------------------
# reduce
# ---------------------------------------------------------------------------

def _int_list(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise PreconditionViolated(f"expected comma-separated vertices, got {text!r}") from None


def _cmd_reduce(config: RunConfig, emit: _Emitter) -> int:
    g = _require_single(config)
    params = config.params
    if config.action == "even-cycle":
        cycle = _int_list(params.get("cycle")) or find_induced_even_cycle(g)
        if cycle is None:
            raise PreconditionViolated("graph has no induced even cycle")
        reduced, trace = even_cycle_contraction(g, cycle)
    elif config.action == "diamond":
        chosen = [params.get(name) for name in ("x", "y", "u", "v")]
        if None in chosen:
            match = find_diamond(g)
            if match is None or not match.induced:
                raise PreconditionViolated("graph has no induced diamond")
            chosen = [match.x, match.y, match.u, match.v]
        reduced, trace = diamond_reduction(g, *chosen)
    else:
        x, y = params.get("x"), params.get("y")
        if x is None or y is None:
            edges = g.edges()
            if not edges:
                raise PreconditionViolated("graph has no edge")
            x, y = edges[0]
        reduced, trace = apex_replacement(g, x, y)

    record = {
        "kind": "reduction",
        "reduction": trace.kind,
        "source": write_graph6(g),
        "graph6": write_graph6(reduced),
        "n": reduced.n,
        "m": reduced.edge_count(),
        "removed": members(trace.removed),
        "merged": [members(part) for part in trace.merged],
        "mapping": [[old, new] for old, new in sorted(trace.mapping.items())],
        "params": trace.params,
    }
    text = f"{trace.kind}: {write_graph6(g)} -> {write_graph6(reduced)} (n={reduced.n}, m={reduced.edge_count()})\n" \
           f"  params: {trace.params}"
    emit(record, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------

def _audit_inequalities(config: RunConfig, emit: _Emitter) -> int:
    for position, g in _input_graphs(config):
        audit = audit_proof_inequalities(g, config.budget)
        violation = audit.subset_bound_violation
        record = {
            "kind": "audit-inequalities",
            "position": position,
            "graph6": write_graph6(g),
            "chi": audit.chi,
            "f": audit.f,
            "subset_bound_holds": audit.subset_bound_holds,
            "subset_bound_violation": None if violation is None else members(violation),
            "diamond_free": audit.diamond_free,
            "even_hole_free": audit.even_hole_free,
            "even_cycles": [{
                "cycle": chain.cycle,
                "p": chain.p,
                "rho_h_prime": chain.rho_h_prime,
                "rho_h": chain.rho_h,
                "cycle_length": chain.cycle_length,
                "alpha_gap": chain.alpha_gap,
                "gap_within_p_minus_one": chain.gap_within_p_minus_one,
            } for chain in audit.even_cycles],
            "diamonds": [{"x": d.x, "y": d.y, "u": d.u, "v": d.v, "chi_reduced": d.chi_reduced,
                          "chi_minus_two": d.chi_minus_two} for d in audit.diamonds],
            "apexes": [{"x": a.x, "y": a.y, "common": a.common, "chi_apex": a.chi_apex, "f_apex": a.f_apex}
                       for a in audit.apexes],
        }
        text = (f"line {position} {write_graph6(g)}: chi={audit.chi} f={audit.f}\n"
                f"  subset bound: {'holds' if audit.subset_bound_holds else 'fails at ' + str(members(violation))}\n"
                f"  diamond-free: {audit.diamond_free}  even-hole-free: {audit.even_hole_free}\n"
                f"  even cycles: {len(audit.even_cycles)}  diamond configurations: {len(audit.diamonds)}")
        emit(record, text)
    return EXIT_OK


def _audit_conclusion(config: RunConfig, emit: _Emitter) -> int:
    k, ell, c = _need(config.params, "k", "ell", "c")
    audit = audit_generalized_mycielski(k, ell, c, config.budget)
    record = {
        "kind": "audit-conclusion",
        "k": audit.k,
        "ell": audit.ell,
        "c": _rational(audit.c),
        "vertices_formula": audit.vertices_formula,
        "alpha2_formula": audit.alpha2_formula,
        "vertices_exact": audit.vertices_exact,
        "alpha2_exact": audit.alpha2_exact,
        "chi_exact": audit.chi_exact,
        "f2_value": _rational(audit.f2_value),
        "f2_at_least_k_plus_1": audit.f2_at_least_k_plus_1,
        "failure_threshold": audit.failure_threshold,
        "formula_only": audit.formula_only,
    }
    text = (f"M'_({k},{ell}) at c={_rational(audit.c)}\n"
            f"  |V|: formula {audit.vertices_formula}, exact {audit.vertices_exact}\n"
            f"  alpha_2: formula {audit.alpha2_formula}, exact {audit.alpha2_exact}\n"
            f"  chi: exact {audit.chi_exact} (k+1 = {k + 1})\n"
            f"  f_2 expression: {_rational(audit.f2_value)} "
            f"{'>=' if audit.f2_at_least_k_plus_1 else '<'} {k + 1}\n"
            f"  fails from ell = {audit.failure_threshold}")
    emit(record, text)
    return EXIT_OK


def _audit_mir(config: RunConfig, emit: _Emitter) -> int:
    entries = mycielski_mir_report(config.params.get("k_max") or 3)
    failed = False
    for entry in entries:
        record = {
            "kind": "audit-mir-mycielski",
            "k": entry.k,
            "n": entry.vertices,
            "mir": _rational(entry.mir),
            "argmin": members(entry.argmin),
            "bound": None if entry.bound is None else _rational(entry.bound),
            "passes": entry.passes,
        }
        verdict = "" if entry.bound is None else f" >= {_rational(entry.bound)}: {entry.passes}"
        emit(record, f"M_{entry.k} (n={entry.vertices}): mir = {_rational(entry.mir)}{verdict}")
        failed = failed or entry.passes is False
    return EXIT_VIOLATION if failed else EXIT_OK


def _audit_reed_gap(config: RunConfig, emit: _Emitter) -> int:
    n_max, k = _need(config.params, "n_max", "k")
    report = reed_gap(n_max, k)
    record = {"kind": "audit-reed-gap", "n_max": report.n_max, "k": report.k,
              "graphs_checked": report.graphs_checked, "max_transversal": report.max_transversal,
              "extremal": report.extremal}
    text = (f"{k}-near-bipartite graphs on <= {n_max} vertices: {report.graphs_checked}\n"
            f"  largest odd cycle transversal: {report.max_transversal}\n"
            f"  extremal: {' '.join(report.extremal)}")
    emit(record, text)
    return EXIT_OK


def _audit_coefficient(config: RunConfig, emit: _Emitter) -> int:
    (c,) = _need(config.params, "c")
    report = folkman_coefficient_report(c, config.budget)
    record = {"kind": "audit-coefficient", "c": _rational(report.c), "bound_holds": report.bound_holds,
              "probes": [{"graph": p.name, "chi": p.chi, "value": _rational(p.value),
                          "witness": members(p.witness), "holds": p.holds} for p in report.probes]}
    lines = [f"c = {_rational(report.c)}: bound {'holds' if report.bound_holds else 'fails'}"]
    lines += [f"  {p.name}: chi={p.chi} max={_rational(p.value)} {'ok' if p.holds else 'below chi'}"
              for p in report.probes]
    emit(record, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# explore
# ---------------------------------------------------------------------------

def _cmd_explore(config: RunConfig, emit: _Emitter) -> int:
    (p,) = _need(config.params, "p")
    for position, g in _input_graphs(config):
        if config.action == "alpha-p":
            size, witness = alpha_p(g, p)
            record = {"kind": "alpha-p", "position": position, "graph6": write_graph6(g), "p": p,
                      "alpha_p": size, "witness": members(witness)}
            text = f"line {position} {write_graph6(g)}: alpha_{p} = {size} {members(witness)}"
        else:
            (c,) = _need(config.params, "c")
            value, witness = f_p_objective(g, p, c)
            record = {"kind": "f-p", "position": position, "graph6": write_graph6(g), "p": p,
                      "c": _rational(c), "value": _rational(value), "witness": members(witness)}
            text = f"line {position} {write_graph6(g)}: f_{p}(c={_rational(c)}) = {_rational(value)} {members(witness)}"
        emit(record, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and entry point
# ---------------------------------------------------------------------------

def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input_path", help="input file, '-' for standard input")
    common.add_argument("--format", dest="input_format", choices=("graph6", "dimacs", "edgelist"), default="graph6")
    common.add_argument("--strict", action="store_true", help="stop at the first malformed record")
    common.add_argument("--workers", type=int, help="worker processes (env FOLKMAN_WORKERS)")
    common.add_argument("--max-n", dest="max_n", type=int, help="vertex cap (env FOLKMAN_MAX_N)")
    common.add_argument("--time-limit-ms", dest="time_limit_ms", type=int, help="per-solve time budget")
    common.add_argument("--node-limit", dest="node_limit", type=int, help="per-solve node budget")
    common.add_argument("--output", choices=("text", "structured"), help="report format")
    common.add_argument("--timing", action="store_true", help="include elapsed time in reports")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="folkman", description="Folkman-bound graph invariant workbench")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", parents=[common], help="compute invariants of input graphs")
    compute.add_argument("--invariants", default=DEFAULT_COMPUTE,
                         help=f"comma-separated subset of {','.join(COMPUTE_INVARIANTS)}")

    verify = commands.add_parser("verify", help="check an invariant over a corpus")
    verify_actions = verify.add_subparsers(dest="action", required=True)
    for name in INVARIANTS + tuple(VERIFY_ALIASES):
        sub = verify_actions.add_parser(name, parents=[common])
        sub.add_argument("--n", type=int, help="all graphs on exactly N vertices")
        sub.add_argument("--max-n-vertices", dest="max_n_vertices", type=int, help="all graphs on <= N vertices")
        sub.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")

    construct = commands.add_parser("construct", help="build a named graph")
    construct_actions = construct.add_subparsers(dest="action", required=True)
    for name in CONSTRUCT_ACTIONS:
        sub = construct_actions.add_parser(name, parents=[common])
        sub.add_argument("--n", type=int)
        sub.add_argument("--a", type=int)
        sub.add_argument("--b", type=int)
        sub.add_argument("--k", type=int)
        sub.add_argument("--ell", type=int)
        sub.add_argument("--write-format", dest="write_format", choices=("graph6", "dimacs", "edgelist"))

    reduce_ = commands.add_parser("reduce", help="apply a reduction step")
    reduce_actions = reduce_.add_subparsers(dest="action", required=True)
    for name in REDUCE_ACTIONS:
        sub = reduce_actions.add_parser(name, parents=[common])
        sub.add_argument("--cycle", help="comma-separated cycle vertices")
        for vertex in ("x", "y", "u", "v"):
            sub.add_argument(f"--{vertex}", type=int)

    audit = commands.add_parser("audit", help="run an audit report")
    audit_actions = audit.add_subparsers(dest="action", required=True)
    for name in AUDIT_ACTIONS:
        sub = audit_actions.add_parser(name, parents=[common])
        sub.add_argument("--k", type=int)
        sub.add_argument("--ell", type=int)
        sub.add_argument("--c", type=Fraction)
        sub.add_argument("--k-max", dest="k_max", type=int)
        sub.add_argument("--n-max", dest="n_max", type=int)

    explore = commands.add_parser("explore", help="parameterised invariants")
    explore_actions = explore.add_subparsers(dest="action", required=True)
    for name in EXPLORE_ACTIONS:
        sub = explore_actions.add_parser(name, parents=[common])
        sub.add_argument("--p", type=int)
        sub.add_argument("--c", type=Fraction)

    return parser


_HANDLERS = {
    "compute": _cmd_compute,
    "verify": _cmd_verify,
    "construct": _cmd_construct,
    "reduce": _cmd_reduce,
    "explore": _cmd_explore,
}

_AUDITS = {
    "inequalities": _audit_inequalities,
    "conclusion": _audit_conclusion,
    "mir-mycielski": _audit_mir,
    "reed-gap": _audit_reed_gap,
    "coefficient": _audit_coefficient,
}


def run(config: RunConfig) -> int:
    """Dispatch a validated config; returns the exit status."""
    emit = _Emitter(config)
    try:
        if config.command == "audit":
            return _AUDITS[config.action](config, emit)
        return _HANDLERS[config.command](config, emit)
    except BudgetExceeded as e:
        _log(f"[ERROR] {e}")
        return EXIT_BUDGET
    except FolkmanError as e:
        _log(f"[ERROR] {e}")
        return EXIT_USAGE
    except OSError as e:
        _log(f"[ERROR] cannot read input: {e}")
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = vars(build_parser().parse_args(argv))
    flags = {key: args.pop(key, None) for key in _GLOBAL_KEYS}
    flags["params"] = args
    try:
        config = RunConfig.from_sources(flags)
    except ValidationError as e:
        for error in e.errors():
            _log(f"[ERROR] {'.'.join(str(p) for p in error['loc'])}: {error['msg']}")
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
