"""Command-line entry point.

Exit status: 0 success (or certified), 1 the checked property failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import algorithms
from .divisions import ConnectedDivision, InvalidDivisionError, division_to_json, sharing_matrix, validate
from .fairness import fairness_report, is_envy_free, is_equitable, is_proportional, is_strong_k_proportional
from .fixtures import all_fixtures
from .impossibility import certify_cake_pareto, certify_pie_impossibility
from .measures import Geometry, open_pie
from .scenario import ScenarioError, load_division, load_scenario, scenario_to_json
from .strongkprop import NoStrongDivisionError, equality_classes, strong_k_division

THREADS_ENV = "KPROP_THREADS"

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _write(path, obj):
    Path(path).write_text(_dump(obj) + "\n")


def _pick_division(scenario, args):
    if args.division:
        d = load_division(args.division, scenario.geometry)
    elif args.name:
        if args.name not in scenario.divisions:
            raise ScenarioError(args.scenario, f"no division named {args.name!r}")
        d = scenario.divisions[args.name]
    elif len(scenario.divisions) == 1:
        d = next(iter(scenario.divisions.values()))
    else:
        raise ScenarioError(args.scenario, "pass --division FILE or --name NAME")
    report = validate(d)
    if not report.ok:
        raise ScenarioError(args.division or args.name, str(report))
    if d.n != scenario.n:
        raise ScenarioError(args.division or args.name,
                            f"division has {d.n} shares for {scenario.n} players")
    return d


def cmd_check(args) -> int:
    scenario = load_scenario(args.scenario)
    d = _pick_division(scenario, args)
    M = sharing_matrix(d, scenario.measures)
    report = fairness_report(M)
    if args.json:
        print(_dump({"sharing_matrix": M.to_json(), "report": report.to_json()}))
    else:
        print("sharing matrix")
        print(M)
        print()
        print(report.render())
    return EXIT_OK


def _parse_order(text, n):
    if text is None or text == "search":
        return "search"
    order = [int(x) for x in text.split(",")]
    if sorted(order) != list(range(n)):
        raise ScenarioError("--order", f"{text!r} is not a permutation of 0..{n - 1}")
    return order


def cmd_solve(args) -> int:
    scenario = load_scenario(args.scenario)
    ms = scenario.measures
    cake = [open_pie(m) for m in ms] if scenario.geometry is Geometry.PIE else list(ms)
    ledger = algorithms.QueryLedger()
    extra = {}
    if args.algorithm == "cut-choose":
        d = algorithms.cut_and_choose(algorithms.oracles_for(cake, ledger))
        guarantee = is_envy_free
    elif args.algorithm == "last-diminisher":
        d = algorithms.last_diminisher(algorithms.oracles_for(cake, ledger))
        guarantee = is_proportional
    elif args.algorithm == "even-paz":
        d = algorithms.even_paz(algorithms.oracles_for(cake, ledger))
        guarantee = is_proportional
    else:
        order = _parse_order(args.order, len(cake))
        result = algorithms.equitable_connected(cake, order)
        d, ledger = result.division, result.ledger
        extra = {"value": str(result.value), "order": list(result.order)}

        def guarantee(M):
            return is_equitable(M).holds and (order != "search" or is_proportional(M).holds)

    if scenario.geometry is Geometry.PIE:
        d = ConnectedDivision(Geometry.PIE, (Fraction(0), *d.cuts), d.assignment)
    M = sharing_matrix(d, ms)
    report = fairness_report(M)
    out = {
        "algorithm": args.algorithm,
        "division": division_to_json(d),
        "sharing_matrix": M.to_json(),
        "report": report.to_json(),
        "ledger": ledger.to_json(),
        **extra,
    }
    if args.emit_division:
        _write(args.emit_division, division_to_json(d))
    if args.json:
        print(_dump(out))
    else:
        print(f"{args.algorithm}: cuts {[str(c) for c in d.cuts]} assignment {list(d.assignment)}")
        if extra:
            print(f"common value {extra['value']} with order {extra['order']}")
        print(f"queries: eval {ledger.eval_count}, cut {ledger.cut_count}")
        print(M)
        print()
        print(report.render())
    return EXIT_OK if guarantee(M) else EXIT_FAILED


def cmd_impossibility(args) -> int:
    threads = args.threads or int(os.environ.get(THREADS_ENV, "1"))
    if args.instance == "pie":
        cert = certify_pie_impossibility(args.n, grid=args.grid or 60, refine=args.refine,
                                         k=args.k, workers=threads)
    else:
        cert = certify_cake_pareto(args.n, grid=args.grid or 40)
    data = cert.to_json()
    if args.out:
        _write(args.out, data)
    if args.json:
        print(_dump(data))
    else:
        print(cert.summary())
    return EXIT_OK if cert.certified else EXIT_FAILED


def cmd_strong_kprop(args) -> int:
    scenario = load_scenario(args.scenario)
    ms = scenario.measures
    classes = equality_classes(ms)
    named = [[scenario.names[i] for i in c] for c in classes.classes]
    try:
        result = strong_k_division(ms, args.k)
    except NoStrongDivisionError as exc:
        if args.json:
            print(_dump({"k": args.k, "exists": False, "classes": named, "reason": str(exc)}))
        else:
            print(f"strong {args.k}-proportional division does not exist")
            print(f"equality classes: {named}")
            print(exc)
        return EXIT_FAILED
    except ValueError as exc:
        raise ScenarioError("--k", str(exc)) from None

    M = sharing_matrix(result.division, ms)
    report = fairness_report(M)
    verified = is_strong_k_proportional(M, args.k).holds and M == result.matrix
    if args.emit_division:
        _write(args.emit_division, division_to_json(result.division))
    if args.json:
        print(_dump({
            "k": args.k, "exists": True, "classes": named, "epsilon": str(result.epsilon),
            "division": division_to_json(result.division), "sharing_matrix": M.to_json(),
            "report": report.to_json(), "verified": verified,
        }))
    else:
        print(f"strong {args.k}-proportional division exists")
        print(f"equality classes: {named}")
        print(f"epsilon: {result.epsilon}")
        print(M)
        print()
        print(report.render())
    return EXIT_OK if verified else EXIT_FAILED


def cmd_fixtures(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, scenario in all_fixtures().items():
        path = out / f"{name}.json"
        _write(path, scenario_to_json(scenario))
        if not args.json:
            print(path)
    if args.json:
        print(_dump(sorted(f"{name}.json" for name in all_fixtures())))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kprop", description="k-proportional fair division workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="fairness report for a division of a scenario")
    p.add_argument("--scenario", required=True)
    p.add_argument("--division", help="division JSON file")
    p.add_argument("--name", help="named division stored in the scenario")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="run a division protocol")
    p.add_argument("--algorithm", required=True,
                   choices=["cut-choose", "last-diminisher", "even-paz", "equitable"])
    p.add_argument("--scenario", required=True)
    p.add_argument("--order", help="comma-separated order for 'equitable', or 'search' (default)")
    p.add_argument("--emit-division", help="write the division JSON here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("impossibility", help="grid certificate for a counterexample family")
    p.add_argument("instance", choices=["pie", "cake"])
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--grid", type=int, help="grid points per unit (default 60 pie, 40 cake)")
    p.add_argument("--refine", type=int, default=3)
    p.add_argument("--k", type=int, help="pie only; default n - 1")
    p.add_argument("--threads", type=int, help=f"worker processes (default ${THREADS_ENV} or 1)")
    p.add_argument("--out", help="write the certificate JSON here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_impossibility)

    p = sub.add_parser("strong-kprop", help="decide and build a strong k-proportional division")
    p.add_argument("--scenario", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit-division")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_strong_kprop)

    p = sub.add_parser("fixtures", help="write the built-in scenarios")
    p.add_argument("--out", default="fixtures")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ScenarioError, InvalidDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except algorithms.BisectionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
