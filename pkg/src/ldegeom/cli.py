"""Command-line front end.

Exit codes: 0 success or affirmative answer, 1 well-formed negative answer
(not minimal, infeasible, counterexample found), 2 invalid input,
3 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize
from .core import (
    DEFAULT_MAX_NODES,
    Instance,
    Solution,
    format_rational,
    instance_from_json,
    is_solution,
    make_instance,
    solution_from_json,
)
from .decompose import (
    caratheodory_reduce,
    decompose,
    forced_coefficients,
    membership,
    trace,
    vertex_set,
)
from .errors import InvariantViolation, LDEError, NotMinimal, ParseError, SearchBudgetExceeded, ValidationError
from .fundamental import (
    completely_fundamental_set,
    extreme_points_check,
    genfun_denominator,
    is_cf_bruteforce,
)
from .graver import (
    equation_text,
    f_sets,
    graver_by_orthant,
    orientation_pairs,
    orthant_instance,
    parse_alpha,
    verify_containment,
)
from .hilbert import as_partition_identity, check_bounds, hilbert_basis, proper_split

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


def _int_list(text):
    try:
        return [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def parse_instance_file(path) -> tuple[Instance, Solution | None]:
    """Read ``{"a": [...], "b": [...], "x": [...], "y": [...]}``; x and y are optional."""
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    inst = instance_from_json(obj)
    sol = None
    if "x" in obj or "y" in obj:
        sol = solution_from_json(obj)
    return inst, sol


# --- rendering -------------------------------------------------------------

def _vec(v):
    return "(" + ",".join(map(str, v)) + ")"


def _unit_combo(v):
    """``3e1+e3`` style; zero renders as ``0``."""
    parts = []
    for k, c in enumerate(v, 1):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign}{mag}e{k}")
    return "".join(parts) or "0"


def _fracs(vals):
    return "(" + ",".join(format_rational(v) for v in vals) + ")"


def render_trace(levels, fmt="text") -> str:
    if fmt == "json":
        return json.dumps(serialize.trace_to_json(levels), indent=2)
    lines = ["Forward pass: a_s, b_t are the largest active coefficients at each level"]
    lines.append("level | solution | partition identity | a_s, b_t")
    for lv in levels:
        r = lv.record
        lines.append(f"{r.level} | {r.compact_solution()} | {r.identity} | a_{r.s}={r.a_s}, b_{r.t}={r.b_t}")
    lines.append("")
    lines.append("Reverse pass: coefficients lambda^(k)_{i,j} at level k")
    lines.append("level | partition identity | a_s, b_t | lambda")
    for lv in reversed(levels):
        r = lv.record
        entries = [
            f"lambda^({r.level})_{{{i + 1},{j + 1}}} = {format_rational(v)}"
            for i, row in enumerate(lv.lambdas)
            for j, v in enumerate(row)
            if v
        ]
        lines.append(f"{r.level} | {r.identity} | a_{r.s}={r.a_s}, b_{r.t}={r.b_t} | " + "; ".join(entries))
    return "\n".join(lines)


def render_certificate(inst, s, cert) -> str:
    terms = " + ".join(f"{format_rational(v)}*{g.vector}" for _, _, g, v in cert.used_generators(inst))
    lines = [
        f"{s} = {terms}",
        f"slack (weight of 0) = {format_rational(cert.slack)}",
        f"nonzero generators: {cert.support_size} (n+m-1 = {inst.n + inst.m - 1})",
    ]
    for i, j, g, v in cert.used_generators(inst):
        lines.append(f"  lambda_{i},{j} = {format_rational(v)}  g_{i},{j} = {g.vector}")
    return "\n".join(lines)


def _graver_table(alpha) -> str:
    per, union = f_sets(alpha)
    by_orthant = graver_by_orthant(alpha)
    k = len(alpha)
    lines = [f"Equation over Z>=0^{k} | ±tau | H^(tau) -> ±x | F^(±tau)"]
    shown = []
    for tau in orientation_pairs(k):
        orth = orthant_instance(alpha, tau)
        vecs = by_orthant[tau]
        sols = "no nonzero solution" if not vecs else ", ".join("±" + _vec(v) for v in vecs)
        fs = per[tau]
        nonzero = [v for v in fs if any(v)]
        if nonzero:
            fset = "±{" + ", ".join(_unit_combo(v) for v in fs) + "}"
        else:
            fset = "{0}"
        lines.append(f"{equation_text(orth, alpha)} | ±{_vec(tau.tau)} | {sols} | {fset}")
        for v in nonzero:
            rep = v if next(c for c in v if c) > 0 else tuple(-c for c in v)
            if rep not in shown:
                shown.append(rep)
    lines.append("F = {" + ", ".join(["0"] + [f"±({_unit_combo(v)})" for v in shown]) + "}")
    return "\n".join(lines)


# --- commands ------------------------------------------------------------

def _emit(out, text):
    out.write(text.rstrip("\n") + "\n")


def _instance_and_solution(args, need_solution):
    if args.input:
        if args.a is not None or args.b is not None:
            raise ParseError("use either --input or --a/--b, not both")
        inst, sol = parse_instance_file(args.input)
        if args.x is not None or args.y is not None:
            sol = Solution(tuple(args.x or ()), tuple(args.y or ()))
    else:
        if args.a is None or args.b is None:
            raise ParseError("an instance needs both --a and --b (or --input)")
        inst = make_instance(args.a, args.b)
        sol = None
        if args.x is not None or args.y is not None:
            sol = Solution(tuple(args.x or ()), tuple(args.y or ()))
    if need_solution:
        if sol is None:
            raise ParseError("this command needs a solution (--x and --y)")
        if not is_solution(inst, sol.x, sol.y):
            raise ValidationError(f"{sol} does not satisfy a.x = b.y")
    return inst, sol


def cmd_hilbert(args, out):
    inst, _ = _instance_and_solution(args, False)
    basis = hilbert_basis(inst, args.max_nodes)
    if args.format == "json":
        _emit(out, json.dumps(serialize.solutions_to_json(basis)))
    else:
        for s in basis:
            _emit(out, as_partition_identity(inst, s))
    return EXIT_OK


def cmd_decompose(args, out):
    inst, s = _instance_and_solution(args, True)
    try:
        cert = decompose(inst, s, max_nodes=args.max_nodes)
    except NotMinimal as exc:
        if args.format == "json":
            _emit(out, json.dumps({"minimal": False, "reason": str(exc)}))
        else:
            _emit(out, f"not minimal: {exc}")
        return EXIT_NEGATIVE
    if args.reduce:
        cert = caratheodory_reduce(inst, cert)
    if args.format == "json":
        _emit(out, json.dumps(serialize.certificate_to_json(cert)))
    else:
        _emit(out, render_certificate(inst, s, cert))
    return EXIT_OK


def cmd_trace(args, out):
    inst, s = _instance_and_solution(args, True)
    try:
        levels = trace(inst, s, max_nodes=args.max_nodes)
    except NotMinimal as exc:
        _emit(out, f"not minimal: {exc}")
        return EXIT_NEGATIVE
    _emit(out, render_trace(levels, args.format))
    return EXIT_OK


def cmd_membership(args, out):
    inst, s = _instance_and_solution(args, True)
    verts = vertex_set(inst, args.vertices)
    weights = membership(inst, s, verts)
    forced = None if weights is not None else forced_coefficients(inst, s, verts)
    if args.format == "json":
        _emit(out, json.dumps({
            "feasible": weights is not None,
            "coefficients": None if weights is None else [format_rational(v) for v in weights],
            "sum": None if weights is None else format_rational(sum(weights)),
            "forced": None if forced is None else [format_rational(v) for v in forced],
            "vertices": serialize.solutions_to_json(verts),
        }))
    elif weights is not None:
        _emit(out, f"feasible: {_fracs(weights)}, sum {format_rational(sum(weights))}")
        for v, w in zip(verts, weights):
            if w:
                _emit(out, f"  {format_rational(w)} * {v}")
    elif forced is not None:
        total = sum(forced)
        why = f"sum {format_rational(total)} > 1" if total > 1 else "negative entry"
        _emit(out, f"infeasible: forced {_fracs(forced)}, {why}")
    else:
        _emit(out, "infeasible")
    return EXIT_OK if weights is not None else EXIT_NEGATIVE


def cmd_graver(args, out):
    if args.alpha is None:
        raise ParseError("graver needs --alpha")
    alpha = parse_alpha(args.alpha)
    certs = verify_containment(alpha, args.max_nodes)
    if args.format == "json":
        per, union = f_sets(alpha)
        _emit(out, json.dumps({
            "graver": [list(c.element) for c in certs],
            "f_sets": {tau.key(): [list(v) for v in per[tau]] for tau in sorted(per, key=lambda t: t.key())},
            "f_union": [list(v) for v in union],
            "certificates": [{
                "element": list(c.element),
                "orientation": None if c.orientation is None else c.orientation.key(),
                "terms": [{"vector": list(v), "coef": format_rational(w)} for v, w in c.terms],
                "sum": format_rational(c.total),
            } for c in certs],
        }))
    else:
        _emit(out, _graver_table(alpha))
        _emit(out, "")
        _emit(out, "Graver basis with convex combinations over F^(tau):")
        for c in certs:
            if not c.covered:
                _emit(out, f"  {_vec(c.element)}  (unit vector on a zero coefficient; no F combination)")
                continue
            combo = " + ".join(f"{format_rational(w)}*{_vec(v)}" for v, w in c.terms)
            _emit(out, f"  {_vec(c.element)} = {combo}  (sum {format_rational(c.total)})")
    return EXIT_OK


def cmd_cfs(args, out):
    inst, s = _instance_and_solution(args, False)
    cf = completely_fundamental_set(inst)
    if s is None:
        if args.format == "json":
            _emit(out, json.dumps(serialize.solutions_to_json(cf)))
        else:
            for v in cf:
                _emit(out, str(v))
        return EXIT_OK
    res = is_cf_bruteforce(inst, s, args.k_max, args.max_nodes)
    if args.format == "json":
        w = res.witness
        _emit(out, json.dumps({
            "completely_fundamental": res.holds,
            "k_max": res.k_max,
            "in_minimal_generators": s in cf,
            "witness": None if w is None else {"k": w.k, "first": w.first.to_json(), "second": w.second.to_json()},
        }))
    elif res.holds:
        _emit(out, f"no counterexample up to k = {res.k_max}; minimal generator: {s in cf}")
    else:
        w = res.witness
        _emit(out, f"not completely fundamental: {w.k}*{s} = {w.first} + {w.second}")
    return EXIT_OK if res.holds else EXIT_NEGATIVE


def cmd_genfun(args, out):
    inst, _ = _instance_and_solution(args, False)
    den = genfun_denominator(inst)
    _emit(out, json.dumps(den.to_json()) if args.format == "json" else den.render())
    return EXIT_OK


def cmd_check(args, out):
    inst, s = _instance_and_solution(args, True)
    split = proper_split(inst, s, args.max_nodes)
    bounds = check_bounds(inst, s)
    if args.format == "json":
        _emit(out, json.dumps({
            "minimal": split is None,
            "split": None if split is None else [p.to_json() for p in split],
            "identity": as_partition_identity(inst, s),
            "max_bound_x": bounds.max_bound_x_ok,
            "max_bound_y": bounds.max_bound_y_ok,
            "mean_bound_x": bounds.mean_bound_x_ok,
            "mean_bound_y": bounds.mean_bound_y_ok,
            "y_weight": format_rational(bounds.mean_y_weight),
            "x_weight": format_rational(bounds.mean_x_weight),
        }))
    else:
        _emit(out, f"identity: {as_partition_identity(inst, s)}")
        _emit(out, "minimal: yes" if split is None else f"minimal: no, {s} = {split[0]} + {split[1]}")
        _emit(out, f"||x||_1 = {bounds.norm_x} <= max b = {bounds.max_b}: {bounds.max_bound_x_ok}")
        _emit(out, f"||y||_1 = {bounds.norm_y} <= max a = {bounds.max_a}: {bounds.max_bound_y_ok}")
        _emit(out, f"||x||_1 = {bounds.norm_x} <= y.b/||y||_1 = {format_rational(bounds.mean_y_weight)}: {bounds.mean_bound_x_ok}")
        _emit(out, f"||y||_1 = {bounds.norm_y} <= x.a/||x||_1 = {format_rational(bounds.mean_x_weight)}: {bounds.mean_bound_y_ok}")
    return EXIT_OK if split is None else EXIT_NEGATIVE


def cmd_extreme(args, out):
    inst, _ = _instance_and_solution(args, False)
    rep = extreme_points_check(inst, args.max_nodes)
    if args.format == "json":
        _emit(out, json.dumps({
            "extreme": serialize.solutions_to_json(rep.extreme),
            "interior": serialize.solutions_to_json(rep.interior),
            "matches_generators": rep.matches,
        }))
    else:
        _emit(out, "extreme points of conv(H + {0}):")
        for v in rep.extreme:
            _emit(out, f"  {v}")
        _emit(out, "non-extreme Hilbert basis elements:")
        for v in rep.interior:
            _emit(out, f"  {v}")
        _emit(out, f"equals {{0}} + generators: {rep.matches}")
    return EXIT_OK if rep.matches else EXIT_NEGATIVE


COMMANDS = {
    "hilbert": (cmd_hilbert, "minimal solutions (Hilbert basis)"),
    "decompose": (cmd_decompose, "convex combination of generators for a minimal solution"),
    "trace": (cmd_trace, "level-by-level pivots and coefficients"),
    "membership": (cmd_membership, "exact hull membership over a vertex set"),
    "graver": (cmd_graver, "single-row Graver basis and F^(tau) sets"),
    "cfs": (cmd_cfs, "completely fundamental solutions, or a bounded check of one solution"),
    "genfun": (cmd_genfun, "denominator of the solution generating function"),
    "check": (cmd_check, "minimality and norm bounds of a solution"),
    "extreme": (cmd_extreme, "extreme points of conv(H + {0}) in the coprime case"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=_int_list, help="left coefficients, e.g. 6")
    common.add_argument("--b", type=_int_list, help="right coefficients, e.g. 2,3,5")
    common.add_argument("--x", type=_int_list, help="left solution vector")
    common.add_argument("--y", type=_int_list, help="right solution vector")
    common.add_argument("--alpha", help="signed row for graver, e.g. 1,2,-3 (use --alpha=-1,2 for a leading minus)")
    common.add_argument("--input", help="JSON file with a, b and optionally x, y")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--reduce", action="store_true", help="Caratheodory-reduce the certificate")
    common.add_argument("--k-max", type=int, default=4, dest="k_max")
    common.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES, dest="max_nodes")
    common.add_argument("--vertices", choices=("generators", "minimal-generators", "hilbert"), default="generators")
    parser = _Parser(prog="ldegeom", description="Minimal solutions of a.x = b.y and their geometry.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.max_nodes < 1 or args.k_max < 1:
            raise ParseError("--max-nodes and --k-max must be positive")
        return COMMANDS[args.verb][0](args, out)
    except SearchBudgetExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (ValidationError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except InvariantViolation:
        raise
    except LDEError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


def main():
    sys.exit(run())
