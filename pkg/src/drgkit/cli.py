"""Command-line front end: ``drgkit <command> ...`` (or ``python3 -m drgkit``)."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import dimacs
from .bounds import NotApplicable, bound_report, extendability_cases, extendability_lower_bound
from .budget import BudgetExceeded, SolverBudget
from .catalog import CatalogError, build, list_catalog, parse_spec
from .exact import independence_number_exact, max_cut_exact, max_cut_local_search
from .graph import Graph, GraphError, members
from .matching import CounterExample, MatchingError, extendability, find_barrier, is_t_extendable
from .params import InvalidArray, IntersectionArray, NonIntegralMultiplicity, drg_spectrum, is_bipartite_array, is_taylor
from .suites import SUITES
from .tables import MAXCUT_EXACT_MAX_V, TABLES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    threads: int = 1
    time_limit: float = 60.0
    node_limit: int = 10_000_000
    output_format: str = "text"

    def __post_init__(self) -> None:
        if self.threads < 1 or self.time_limit <= 0 or self.node_limit <= 0:
            raise UsageError("threads, time limit and node limit must be positive")
        if self.output_format not in ("text", "json"):
            raise UsageError(f"unknown output format {self.output_format!r}")

    @property
    def json(self) -> bool:
        return self.output_format == "json"

    def budget(self, time_limit: float | None = None) -> SolverBudget:
        return SolverBudget(time_limit or self.time_limit, self.node_limit, self.seed)


def default_threads() -> int:
    env = os.environ.get("DRGKIT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


# -- output -------------------------------------------------------------------

def emit(cfg: RunConfig, payload, text: str) -> None:
    if cfg.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def load_graph(tokens: list[str]) -> tuple[Graph, str]:
    """A DIMACS path, or a catalog name with optional integer parameters."""
    if not tokens:
        raise UsageError("missing graph (catalog name or DIMACS file)")
    if len(tokens) == 1 and Path(tokens[0]).is_file():
        g = dimacs.read(tokens[0])
        return g, g.name
    name, params = parse_spec(" ".join(tokens))
    g, ent = build(name, *params)
    return g, ent.label


# -- commands -----------------------------------------------------------------

def cmd_catalog(args, cfg: RunConfig) -> int:
    if args.action == "list":
        entries = list_catalog()
        payload = [
            {
                "name": e.label,
                "v": e.expected_order,
                "e": e.expected_size,
                "array": str(e.expected_array) if e.expected_array else None,
                "bipartite": e.bipartite,
            }
            for e in entries
        ]
        lines = [f"{p['name']:<30} v={p['v']:<4} e={p['e']:<5} {p['array'] or '-'}" for p in payload]
        emit(cfg, payload, "\n".join(lines))
        return EXIT_OK
    g, label = load_graph(args.graph)
    text = dimacs.dumps(g, comments=[label])
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_params(args, cfg: RunConfig) -> int:
    arr = IntersectionArray.parse(" ".join(args.array))
    spec = drg_spectrum(arr)
    bip = is_bipartite_array(arr)
    ext = extendability_lower_bound(arr, bip)
    payload = {
        "array": str(arr),
        "D": arr.D,
        "k": arr.k,
        "a": list(arr.a),
        "sizes": list(arr.sizes),
        "v": arr.v,
        "e": arr.e,
        "lambda": arr.lam,
        "mu": arr.mu,
        "bipartite": bip,
        "taylor": is_taylor(arr),
        "spectrum": [[round(t, 12), m] for t, m in spec.pairs],
        "ext_lower": ext if isinstance(ext, int) else None,
        "ext_cases": [[name, t] for name, t in extendability_cases(arr, bip)],
    }
    spec_txt = "  ".join(f"{t:.6g}^{m}" for t, m in spec.pairs)
    text = "\n".join(
        [
            f"array     {arr}",
            f"D={arr.D} k={arr.k} lambda={arr.lam} mu={arr.mu} v={arr.v} e={arr.e}",
            f"a_i       {list(arr.a)}",
            f"k_i       {list(arr.sizes)}",
            f"spectrum  {spec_txt}",
            f"bipartite {bip}   taylor {is_taylor(arr)}",
            f"ext_lower {ext if isinstance(ext, int) else 'n/a: ' + ext.reason}",
        ]
    )
    emit(cfg, payload, text)
    return EXIT_OK


def _exact_block(g: Graph, cfg: RunConfig) -> dict:
    mc = alpha = None
    proved = True
    if g.v <= MAXCUT_EXACT_MAX_V:
        try:
            mc = max_cut_exact(g, cfg.budget()).value
        except BudgetExceeded:
            proved = False
    else:
        proved = False
    try:
        alpha = independence_number_exact(g, cfg.budget()).alpha
    except BudgetExceeded:
        proved = False
    return {"mc": mc, "alpha": alpha, "proved": proved}


def cmd_analyze(args, cfg: RunConfig) -> int:
    g, label = load_graph(args.graph)
    rep = bound_report(g, label)
    payload = rep.to_json()
    if not args.no_exact:
        payload["exact"] = _exact_block(g, cfg)
        if g.v % 2 == 0 and not args.no_extend:
            try:
                res = extendability(g, node_limit=args.extend_limit, workers=cfg.threads)
                payload["extendability"] = res.to_json()
            except BudgetExceeded as exc:
                partial = exc.best.value if exc.best else 0
                payload["extendability"] = {"value": partial, "proved": False, "failing_matching": None, "barrier": None}
            except MatchingError as exc:
                payload["extendability"] = {"error": str(exc)}
    lines = [f"graph {label}: v={rep.v} e={rep.e} k={rep.k} odd girth={rep.odd_girth or 'bipartite'}"]
    lines.append(f"lambda_min {rep.lambda_min:.9g}")
    for name, b in rep.bounds.items():
        lines.append(f"  {name:<15} " + (f"{b.floor:<6} ({b.real:.6g})" if not isinstance(b, NotApplicable) else f"n/a: {b.reason}"))
    lines.append(f"  ext_lower       {rep.ext_lower if isinstance(rep.ext_lower, int) else 'n/a: ' + rep.ext_lower.reason}")
    if "exact" in payload:
        ex = payload["exact"]
        lines.append(f"exact: mc={_or_dash(ex['mc'])} alpha={_or_dash(ex['alpha'])} proved={ex['proved']}")
    if "extendability" in payload:
        ext = payload["extendability"]
        if "error" in ext:
            lines.append(f"extendability: {ext['error']}")
        else:
            lines.append(f"extendability: {ext['value']}" + ("" if ext["proved"] else " (lower bound, budget reached)"))
    lines += [f"note: {n}" for n in rep.notes]
    emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def _or_dash(x) -> str:
    return "-" if x is None else str(x)


def cmd_maxcut(args, cfg: RunConfig) -> int:
    g, label = load_graph(args.graph)
    if args.heuristic:
        cut = max_cut_local_search(g, cfg.budget(), restarts=args.restarts)
        emit(cfg, {"graph": label, **cut.to_json()}, f"{label}: cut {cut.value} (local search, not proved)\nside {members(cut.side)}")
        return EXIT_OK
    try:
        cut = max_cut_exact(g, cfg.budget())
    except BudgetExceeded as exc:
        best = exc.best
        payload = {"graph": label, "error": str(exc), "best": best.to_json() if best else None}
        emit(cfg, payload, f"{label}: budget exceeded ({exc}); best cut found {best.value if best else '-'}")
        return EXIT_BUDGET
    emit(cfg, {"graph": label, **cut.to_json()}, f"{label}: mc = {cut.value} (proved)\nside {members(cut.side)}")
    return EXIT_OK


def cmd_alpha(args, cfg: RunConfig) -> int:
    g, label = load_graph(args.graph)
    try:
        res = independence_number_exact(g, cfg.budget())
    except BudgetExceeded as exc:
        best = exc.best
        payload = {"graph": label, "error": str(exc), "best": best.to_json() if best else None}
        emit(cfg, payload, f"{label}: budget exceeded ({exc}); best independent set found {best.alpha if best else '-'}")
        return EXIT_BUDGET
    emit(cfg, {"graph": label, **res.to_json()}, f"{label}: alpha = {res.alpha} (proved)\nwitness {members(res.witness)}")
    return EXIT_OK


def cmd_extend(args, cfg: RunConfig) -> int:
    g, label = load_graph(args.graph)
    try:
        if args.t is not None:
            res = is_t_extendable(g, args.t, node_limit=cfg.node_limit, workers=cfg.threads)
            if isinstance(res, CounterExample):
                barrier = find_barrier(g, res.matching)
                payload = {
                    "graph": label,
                    "t": args.t,
                    "extendable": False,
                    "counterexample": res.matching.to_json(),
                    "barrier": barrier.to_json(),
                }
                text = f"{label}: not {args.t}-extendable; M = {res.matching.to_json()}; barrier S = {barrier.members}"
            else:
                payload = {"graph": label, "t": args.t, "extendable": True}
                text = f"{label}: {args.t}-extendable"
            emit(cfg, payload, text)
            return EXIT_OK
        res = extendability(g, t_max_hint=args.hint, node_limit=cfg.node_limit, workers=cfg.threads)
    except BudgetExceeded as exc:
        partial = exc.best.value if exc.best else None
        emit(cfg, {"graph": label, "error": str(exc), "at_least": partial}, f"{label}: budget exceeded ({exc}); extendability >= {partial}")
        return EXIT_BUDGET
    payload = {"graph": label, **res.to_json()}
    text = f"{label}: extendability {res.value}" + ("" if res.proved else f" (capped at hint {args.hint})")
    if res.failing_matching:
        text += f"\n  failing {len(res.failing_matching)}-matching {res.failing_matching.to_json()}"
    if res.barrier:
        text += f"\n  barrier S = {res.barrier.members} with o(G-S) = {res.barrier.odd_components}"
    emit(cfg, payload, text)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    fn = SUITES[args.suite]
    if args.suite == "catalog":
        report = fn(seed=cfg.seed)
    else:
        report = fn(seed=cfg.seed, workers=cfg.threads)
    lines = [f"{r.status:<4} {r.check:<32} {r.graph:<28} {r.detail}" for r in report.results]
    counts = report.counts()
    lines.append(f"{args.suite}: {counts['pass']} pass, {counts['FAIL']} fail, {counts['skip']} skip")
    emit(cfg, report.to_json(), "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_table(args, cfg: RunConfig) -> int:
    table = TABLES[args.which](cfg.budget(600.0 if args.which == "section2_alpha" else None))
    emit(cfg, table.to_json(), table.render())
    return EXIT_FAIL if table.unexplained else EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="sampling and local-search seed (default 0)")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker processes (default: $DRGKIT_THREADS or CPU count)")
    common.add_argument("--time-limit", type=float, default=argparse.SUPPRESS, help="seconds per solver call (default 60)")
    common.add_argument("--node-limit", type=int, default=argparse.SUPPRESS, help="search nodes per solver call (default 1e7)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON instead of text")

    p = argparse.ArgumentParser(prog="drgkit", description=__doc__, parents=[common], allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", parents=[common], help="list catalog entries or export one as DIMACS")
    csub = c.add_subparsers(dest="action", required=True)
    csub.add_parser("list", parents=[common])
    ex = csub.add_parser("export", parents=[common])
    ex.add_argument("graph", nargs="+")
    ex.add_argument("-o", "--output")

    pa = sub.add_parser("params", parents=[common], help="derived parameters of an intersection array")
    pa.add_argument("array", nargs="+", help="e.g. '{3,2,1;1,2,3}'")

    an = sub.add_parser("analyze", parents=[common], help="bound report for a catalog graph or DIMACS file")
    an.add_argument("graph", nargs="+")
    an.add_argument("--no-exact", action="store_true")
    an.add_argument("--no-extend", action="store_true")
    an.add_argument("--extend-limit", type=int, default=300_000, help="t-matchings checked per t")

    mc = sub.add_parser("maxcut", parents=[common], help="exact max-cut (or local search) with a certificate")
    mc.add_argument("graph", nargs="+")
    mc.add_argument("--heuristic", action="store_true", help="local search only")
    mc.add_argument("--restarts", type=int, default=32)

    al = sub.add_parser("alpha", parents=[common], help="exact independence number with a witness")
    al.add_argument("graph", nargs="+")

    et = sub.add_parser("extend", parents=[common], help="matching extendability with a failing matching and barrier")
    et.add_argument("graph", nargs="+")
    et.add_argument("-t", dest="t", type=int, help="check a single t instead of computing the extendability")
    et.add_argument("--hint", type=int, help="cap on t (default: maximum degree)")

    ve = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ve.add_argument("suite", choices=sorted(SUITES))

    ta = sub.add_parser("table", parents=[common], help="recompute a comparison table")
    ta.add_argument("which", choices=sorted(TABLES))
    return p


COMMANDS = {
    "catalog": cmd_catalog,
    "params": cmd_params,
    "analyze": cmd_analyze,
    "maxcut": cmd_maxcut,
    "alpha": cmd_alpha,
    "extend": cmd_extend,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig(
            seed=getattr(args, "seed", 0),
            threads=getattr(args, "threads", None) if hasattr(args, "threads") else default_threads(),
            time_limit=getattr(args, "time_limit", 60.0),
            node_limit=getattr(args, "node_limit", 10_000_000),
            output_format="json" if getattr(args, "json", False) else "text",
        )
        return COMMANDS[args.command](args, cfg)
    except (UsageError, CatalogError, dimacs.DimacsError, InvalidArray, NonIntegralMultiplicity, GraphError, MatchingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
