"""Command-line entry point: ``python -m socles <subcommand> ...``.

Exit codes: 0 all checks pass, 1 property violation, 2 usage or parse
error, 3 socle search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as C
from .criteria import (
    condition_a,
    condition_b,
    graph_depth2_criterion,
    graph_maximal_socle,
    parse_facets,
    parse_graph,
)
from .harness import (
    SUITES,
    RunConfig,
    census_complexes,
    census_graphs,
    complex_dict,
    complex_oracle,
    config_dict,
    graph_dict,
    graph_oracle,
    run_suites,
)
from .ideal import Monomial, ParseError, contains, parse, power, to_dict
from .socle import DEFAULT_BOX_BUDGET, STRATEGIES, BudgetExceeded, StrategyMismatch

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "SOCLES_BOX_BUDGET"


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BOX_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _config(args) -> RunConfig:
    return RunConfig(
        seed=getattr(args, "seed", 0),
        box_budget=args.budget,
        l_max=getattr(args, "l_max", 3),
        k_max=getattr(args, "k_max", 3),
        n_max=getattr(args, "n_max", 6),
        sample_count=getattr(args, "samples", 200),
        output_format=args.format,
        strategy=args.strategy,
    )


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.format == "structured":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _mono(u) -> str:
    return str(Monomial(u))


def cmd_socle(args) -> int:
    I = parse(_read(args.ideal))
    cfg = _config(args)
    J = I
    if args.k is not None:
        if not I.is_squarefree():
            raise ParseError("--k requires a squarefree ideal")
        J = power(I, args.k)
    rep = cfg.socle(J, k=args.k)
    doc = {"command": "socle", "config": config_dict(cfg), "report": rep.to_dict()}
    lines = [
        f"n={rep.ideal_n} k={rep.k if rep.k is not None else '-'}",
        f"socle: {', '.join(map(_mono, rep.socle_monomials)) or '(empty)'}",
        f"depth_zero: {rep.depth_zero}",
        f"has_maximal_socle: {rep.has_maximal_socle}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_power(args) -> int:
    I = parse(_read(args.ideal))
    J = power(I, args.k)
    if args.format == "structured":
        sys.stdout.write(json.dumps(to_dict(J), sort_keys=True) + "\n")
    else:
        sys.stdout.write(f"{J}\n")
    return EXIT_OK


def _parse_exponents(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"monomial must be a comma-separated exponent list, got {text!r}") from None


def cmd_member(args) -> int:
    I = parse(_read(args.ideal))
    J = power(I, args.k) if args.k is not None else I
    u = _parse_exponents(args.monomial)
    if len(u) != J.n:
        raise ParseError(f"monomial has {len(u)} exponents, ideal has n={J.n}")
    u = Monomial(u)
    member = contains(J, u)
    doc = {"command": "member", "n": J.n, "k": args.k, "monomial": list(u), "member": member}
    _emit(args, doc, [f"{u} in ideal{'^' + str(args.k) if args.k else ''}: {member}"])
    return EXIT_OK


def cmd_graph_check(args) -> int:
    G = parse_graph(_read(args.graph))
    cfg = _config(args)
    crit, wit = graph_depth2_criterion(G)
    maximal = graph_maximal_socle(G)
    doc = {
        "command": "graph-check",
        "graph": graph_dict(G),
        "criterion": crit,
        "witness": list(wit) if wit else None,
        "maximal_socle": maximal,
    }
    lines = [
        f"depth S/I^2 = 0 (criterion): {crit}",
        f"witness triangle: {set(wit) if wit else '-'}",
        f"x_[n] in Soc(S/I^2): {maximal}",
    ]
    code = EXIT_OK
    if args.oracle:
        oracle, oracle_max, socle = graph_oracle(G, cfg)
        agree = oracle == crit and oracle_max == maximal
        doc.update(oracle=oracle, oracle_maximal_socle=oracle_max, socle=socle, agree=agree)
        lines += [
            f"oracle depth zero: {oracle}",
            f"oracle x_[n] in socle: {oracle_max}",
            f"agree: {agree}",
        ]
        code = EXIT_OK if agree else EXIT_VIOLATION
    _emit(args, doc, lines)
    return code


def cmd_complex_check(args) -> int:
    D = parse_facets(_read(args.facets))
    cfg = _config(args)
    k = args.k
    a, a_wit = condition_a(D, k)
    b, b_wit = condition_b(D, k) if a else (None, {})
    maximal = bool(a and b)
    doc = {
        "command": "complex-check",
        "complex": complex_dict(D),
        "k": k,
        "condition_a": a,
        "condition_a_witness": [list(F) for F in a_wit] if a_wit else None,
        "condition_b": b,
        "condition_b_witnesses": {
            str(j): ([list(F) for F in w] if w else None) for j, w in b_wit.items()
        },
        "maximal_socle": maximal,
    }
    lines = [f"(a) every {k} facets intersect: {a}"]
    if a_wit:
        lines.append(f"    empty intersection: {[set(F) for F in a_wit]}")
    if a:
        lines.append(f"(b) every vertex is a {k}-fold intersection: {b}")
        for j, w in b_wit.items():
            lines.append(f"    {j}: {[set(F) for F in w] if w else '-'}")
    lines.append(f"x_[n]^{k - 1} in Soc(S/I^{k}): {'yes' if maximal else 'no'}")
    code = EXIT_OK
    if args.oracle:
        orc = complex_oracle(D, k, cfg)
        agree = a == orc["top_not_in_power"] and maximal == orc["socle_has_top"]
        if a:
            agree = agree and b == all(orc["multiples_in_power"])
        doc.update(oracle=orc, agree=agree)
        lines += [
            f"oracle x_[n]^{k - 1} not in I^{k}: {orc['top_not_in_power']}",
            f"oracle x_j*x_[n]^{k - 1} in I^{k}: "
            + " ".join(f"{j}:{v}" for j, v in enumerate(orc["multiples_in_power"], start=1)),
            f"agree: {agree}",
        ]
        code = EXIT_OK if agree else EXIT_VIOLATION
    _emit(args, doc, lines)
    return code


def _result_lines(res) -> list[str]:
    s = res.summary()
    lines = [
        f"{s['name']}: checked={s['instances_checked']} agreements={s['agreements']} "
        f"disagreements={s['disagreements']} budget_exceeded={s['budget_exceeded']} "
        f"{'PASS' if res.ok else 'FAIL'}"
    ]
    lines += [f"  note: {note}" for note in res.notes]
    for rec in res.disagreements:
        lines.append("  disagreement: " + json.dumps(rec, sort_keys=True))
    for rec in res.budget_exceeded:
        lines.append("  budget exceeded: " + json.dumps(rec, sort_keys=True))
    return lines


def _exit_for(results) -> int:
    if any(not r.ok for r in results):
        return EXIT_VIOLATION
    if any(r.budget_exceeded for r in results):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_census(args) -> int:
    cfg = _config(args)
    if args.n > cfg.n_max:
        raise ParseError(f"n={args.n} exceeds --n-max={cfg.n_max}")
    if args.family == "graphs":
        if args.k != 2:
            raise ParseError("the graph census compares depth of the square; use --k 2")
        exhaustive = {"auto": None, "exhaustive": True, "sampled": False}[args.mode]
        res = census_graphs(args.n, cfg, exhaustive=exhaustive)
    else:
        res = census_complexes(args.n, args.k, cfg)
    doc = {
        "command": "census",
        "family": args.family,
        "n": args.n,
        "k": args.k,
        "config": config_dict(cfg),
        "result": res.to_dict(include_records=not args.summary_only),
    }
    _emit(args, doc, _result_lines(res))
    return _exit_for([res])


def cmd_verify(args) -> int:
    cfg = _config(args)
    results = run_suites(args.suites, cfg)
    doc = {
        "command": "verify",
        "suites": args.suites,
        "config": config_dict(cfg),
        "results": [r.to_dict(include_records=not args.summary_only) for r in results],
    }
    lines = []
    for r in results:
        lines += _result_lines(r)
    lines.append(f"seed={cfg.seed}")
    _emit(args, doc, lines)
    return _exit_for(results)


def cmd_formula(args) -> int:
    doc: dict = {"command": "formula", "kind": args.kind}
    if args.kind == "hh-depth":
        value = C.hh_depth(args.n, args.d, args.k)
        doc.update(n=args.n, d=args.d, k=args.k, hh_depth=value)
        lines = [f"max(0, n - k(n-d) - 1) = {value}  (depth S/I^k for the squarefree Veronese ideal)"]
    elif args.kind == "threshold":
        t = C.threshold(args.n, args.k)
        doc.update(n=args.n, k=args.k, threshold=str(t))
        lines = [f"((k-1)n+1)/k = {t}"]
        if args.d is not None:
            cmp = "above" if args.d > t else ("equal to" if args.d == t else "below")
            doc["d"] = args.d
            doc["comparison"] = cmp
            lines.append(f"d={args.d} is {cmp} the threshold")
    else:
        p = C.admissible_params(args.k, args.r)
        doc.update(k=p.k, r=args.r, n=p.n, d=p.d, hh_depth=C.hh_depth(p.n, p.d, p.k))
        lines = [f"n={p.n} d={p.d} k={p.k} hh_depth={doc['hh_depth']}"]
    _emit(args, doc, lines)
    return EXIT_OK


def _missing(args, *names):
    gone = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if gone:
        raise ParseError(f"formula {args.kind} needs {' '.join(gone)}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--budget", type=int, default=_default_budget(),
                        help=f"socle box candidate budget (env {BUDGET_ENV})")
    common.add_argument("--strategy", choices=STRATEGIES, default="both")

    runs = argparse.ArgumentParser(add_help=False)
    runs.add_argument("--seed", type=int, default=0)
    runs.add_argument("--samples", type=int, default=200)
    runs.add_argument("--n-max", type=int, default=6)
    runs.add_argument("--k-max", type=int, default=3)
    runs.add_argument("--l-max", type=int, default=3)
    runs.add_argument("--summary-only", action="store_true",
                      help="omit per-instance records from structured output")

    p = argparse.ArgumentParser(prog="socles", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("socle", parents=[common], help="socle monomials of S/J or S/I^k")
    s.add_argument("ideal", help="ideal file (JSON with n and generators), '-' for stdin")
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_socle)

    s = sub.add_parser("power", parents=[common], help="minimal generators of I^k")
    s.add_argument("ideal")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_power)

    s = sub.add_parser("member", parents=[common], help="membership of a monomial in I or I^k")
    s.add_argument("ideal")
    s.add_argument("--monomial", required=True, help="exponent vector, e.g. 1,1,1")
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("graph-check", parents=[common], help="depth-zero-square criterion for an edge ideal")
    s.add_argument("graph", help="graph file: n, then 'u v' per line")
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_graph_check)

    s = sub.add_parser("complex-check", parents=[common], help="facet-intersection conditions")
    s.add_argument("facets", help="facet file: n, then one facet per line")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_complex_check)

    s = sub.add_parser("census", parents=[common, runs], help="decider vs oracle over a family")
    s.add_argument("family", choices=("graphs", "complexes"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify", parents=[common, runs], help="run property suites")
    s.add_argument("suites", nargs="+", metavar="SUITE",
                   help=f"one or more of {', '.join(SUITES)}, or 'all'")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("formula", parents=[common], help="closed-form thresholds and depths")
    s.add_argument("kind", choices=("hh-depth", "threshold", "admissible"))
    s.add_argument("--n", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--r", type=int)
    s.set_defaults(func=cmd_formula)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "formula":
            need = {"hh-depth": ("n", "d", "k"), "threshold": ("n", "k"), "admissible": ("k", "r")}
            _missing(args, *need[args.kind])
        if args.command == "verify" and args.suites != ["all"]:
            bad = [s for s in args.suites if s not in SUITES]
            if bad:
                raise ParseError(f"unknown suite(s) {bad}; choose from {', '.join(SUITES)} or 'all'")
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except StrategyMismatch as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ParseError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
