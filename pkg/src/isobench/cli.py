"""Command-line front end.

Subcommands: count, verify, search, sample.  Identical configurations
(including seeds) produce byte-identical output.  Exit codes: 0 success,
1 mathematical finding (a violated inequality), 2 usage error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import success_probabilities
from .counting import DEFAULT_BUDGET, ObjectiveStrategy, count_isolating
from .errors import BudgetExceededError
from .hypergraph import Hypergraph
from .search import (
    asymptotic_rows_to_csv,
    compare_to_asymptotics,
    conjecture_search,
    sample_layer1,
    sample_uniform,
)
from .verify import instance_checks, summarize, verify_grid
from .weights import (
    Objective,
    explicit_objective,
    generic_high_objective,
    generic_low_objective,
    identity_objective,
    preset_objectives,
)

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

WORKERS_ENV = "ISOBENCH_WORKERS"


def _load_hypergraph(path: str) -> Hypergraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read hypergraph from {path}: {exc}") from exc
    return Hypergraph.from_json_dict(doc)


def _parse_objective(spec: str, M: int, n: int, *, zero_allowed: bool) -> Objective:
    if spec == "identity":
        return identity_objective(M)
    if spec == "generic_high":
        return generic_high_objective(M, n)
    if spec == "generic_low":
        return generic_low_objective(M, n)
    if spec.startswith("explicit:"):
        values = [Fraction(part) for part in spec[len("explicit:") :].split(",")]
        f = explicit_objective(values, zero_allowed=zero_allowed)
        if f.M != M:
            raise ValueError(f"explicit objective has {f.M} values, expected M={M}")
        return f
    raise ValueError(f"unknown objective spec {spec!r}")


def _parse_strategy(spec: str, seed: int) -> ObjectiveStrategy:
    if spec == "presets":
        return ObjectiveStrategy(kind="presets")
    if spec.startswith("random:"):
        return ObjectiveStrategy(kind="random_rational", count=int(spec.split(":")[1]), seed=seed)
    if spec.startswith("integers:"):
        return ObjectiveStrategy(kind="exhaustive_integer", bound=int(spec.split(":")[1]))
    raise ValueError(f"unknown strategy spec {spec!r}")


def _parse_m_list(spec: str) -> tuple[int, ...]:
    values = tuple(int(part) for part in spec.split(","))
    if not values:
        raise ValueError("empty M list")
    return values


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _cmd_count(args) -> int:
    H = _load_hypergraph(args.hypergraph)
    f = _parse_objective(args.objective, args.M, H.n, zero_allowed=args.zero_allowed)
    report = count_isolating(H, args.M, f, budget=args.budget, workers=args.workers)
    p, q = success_probabilities(H, args.M, f, report)
    doc = report.to_json_dict()
    doc["p"] = str(p)
    doc["q"] = str(q)
    if args.format == "csv":
        text = (
            "n,M,total,layer1,p,q\n"
            f"{report.n},{report.M},{report.total},{report.layer1},{p},{q}\n"
        )
    else:
        text = _json_text(doc)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.hypergraph and args.n_max:
        raise ValueError("--hypergraph and --n-max are mutually exclusive")
    if args.hypergraph:
        H = _load_hypergraph(args.hypergraph)
        M_values = _parse_m_list(args.M)
        results = []
        instances = 0
        for M in M_values:
            for f in preset_objectives(M, H.n):
                instances += 1
                results.extend(instance_checks(H, M, f, budget=args.budget))
        summary = summarize(results, instances)
    elif args.n_max:
        M_values = _parse_m_list(args.M)
        summary = verify_grid(range(1, args.n_max + 1), M_values, budget=args.budget)
    else:
        raise ValueError("verify needs --hypergraph PATH or --n-max N")
    if args.format == "csv":
        lines = ["checks_run,instances,ok,violations"]
        lines.append(
            f"{summary.checks_run},{summary.instances},{int(summary.ok)},{len(summary.violations)}"
        )
        for v in summary.violations:
            lines.append(f"# {v.kind} {v.name}: lhs={v.lhs} rhs={v.rhs}")
        text = "\n".join(lines) + "\n"
    else:
        text = _json_text(summary.to_json_dict())
    _emit(text, args.out)
    return EXIT_OK if summary.ok else EXIT_FINDING


def _cmd_search(args) -> int:
    strategy = _parse_strategy(args.strategy, args.seed)
    report = conjecture_search(
        args.n_max,
        _parse_m_list(args.M),
        strategy,
        prune=args.prune,
        seed=args.seed,
        count_budget=args.budget,
    )
    if args.format == "csv":
        text = (
            "n_max,M_values,instances,min_ratio_total,min_ratio_layer1,violations\n"
            f"{report.n_max},{';'.join(map(str, report.M_values))},{report.instances},"
            f"{report.min_ratio_total},{report.min_ratio_layer1},{len(report.violations)}\n"
        )
    else:
        text = _json_text(report.to_json_dict())
    _emit(text, args.out)
    return EXIT_OK if not report.violations else EXIT_FINDING


def _cmd_sample(args) -> int:
    if args.trials < 1:
        raise ValueError("--trials must be >= 1")
    H = _load_hypergraph(args.hypergraph)
    f = _parse_objective(args.objective, args.M, H.n, zero_allowed=args.zero_allowed)
    sampler = sample_layer1 if args.layer1 else sample_uniform
    report = sampler(H, args.M, f, args.trials, args.seed)
    doc = report.to_json_dict()
    rows = compare_to_asymptotics(
        H.n,
        args.M,
        p=None if args.layer1 else report.exact,
        q=report.exact if args.layer1 else None,
    )
    if args.format == "csv":
        header = "kind,n,M,trials,seed,successes,draws,estimate,exact,phi,h0,h1,h2\n"
        text = header + (
            f"{report.kind},{report.n},{report.M},{report.trials},{report.seed},"
            f"{report.successes},{report.draws},{report.estimate!r},"
            f"{'' if report.exact is None else report.exact},{report.phi},"
            f"{report.h0!r},{report.h1!r},{report.h2!r}\n"
        )
        if rows:
            text += asymptotic_rows_to_csv(rows)
    else:
        doc["asymptotics"] = [r.to_json_dict() for r in rows]
        text = _json_text(doc)
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isobench",
        description="Exact enumeration and verification for isolating weight functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, needs_hypergraph: bool) -> None:
        if needs_hypergraph:
            p.add_argument("--hypergraph", required=True, help="path to a hypergraph JSON file")
        p.add_argument("--M", type=int, required=True, help="weight range size")
        p.add_argument("--objective", default="identity", help="identity | generic_high | generic_low | explicit:v1,v2,...")
        p.add_argument("--zero-allowed", action="store_true", dest="zero_allowed")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p_count = sub.add_parser("count", help="exact isolating-weight counts")
    common(p_count, needs_hypergraph=True)
    p_count.add_argument("--workers", type=int, default=_default_workers())
    p_count.set_defaults(func=_cmd_count)

    p_verify = sub.add_parser("verify", help="check every applicable bound")
    p_verify.add_argument("--hypergraph", default=None)
    p_verify.add_argument("--n-max", type=int, default=None, dest="n_max")
    p_verify.add_argument("--M", required=True, help="comma-separated weight range sizes")
    p_verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_search = sub.add_parser("search", help="conjecture counterexample sweep")
    p_search.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_search.add_argument("--M", required=True, help="comma-separated weight range sizes")
    p_search.add_argument("--strategy", default="presets", help="presets | random:COUNT | integers:BOUND")
    p_search.add_argument("--prune", action="store_true")
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_search.add_argument("--format", choices=("json", "csv"), default="json")
    p_search.add_argument("--out", default=None)
    p_search.set_defaults(func=_cmd_search)

    p_sample = sub.add_parser("sample", help="seeded Monte Carlo estimates")
    common(p_sample, needs_hypergraph=True)
    p_sample.add_argument("--trials", type=int, required=True)
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--layer1", action="store_true", help="sample layer-1 weights only")
    p_sample.set_defaults(func=_cmd_sample)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching the exit-code contract
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
