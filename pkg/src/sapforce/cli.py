"""Command-line front end.

Subcommands: param, trace, verify-sap, survey, verify-xi, minors.
Exit codes: 0 verified/ok, 1 property violation found, 2 input error,
3 cap or guard refusal.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families
from .canon import enumerate_connected
from .graphs import (CapExceededError, Graph, GraphError, parse_edge_list,
                     parse_graph6)
from .linalg import PatternFamily, has_sap, sample_matrix
from .minors import has_minor, hadwiger
from .report import (FLAG_NAMES, PARAM_NAMES, ReportInvariantError, ResultCache,
                     SurveyRow, compute_report, survey_graphs)
from .sapgame import format_sap_trace, replay_trace, sap_closure
from .xi import (ConfigurationError, MSizeError, XiUnresolvedError,
                 load_t3_family, xi)
from .zeroforcing import Rule, min_zfs

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

FAMILY_RULES = {PatternFamily.S: Rule.Z, PatternFamily.S_ELL: Rule.ZL,
                PatternFamily.S_PLUS: Rule.ZPLUS}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def load_graph(spec: str, indexing: int = 1) -> Graph:
    """Resolve --graph: a file path (graph6 or edge-list), a known graph
    name, or a literal graph6 string."""
    path = Path(spec)
    if path.exists() and path.is_file():
        text = path.read_text()
        stripped = text.strip()
        first = stripped.splitlines()[0].split() if stripped else []
        if len(first) == 2 and all(tok.isdigit() for tok in first):
            return parse_edge_list(text, indexing=indexing)
        return parse_graph6(stripped.splitlines()[0])
    try:
        return families.by_name(spec)
    except KeyError:
        pass
    return parse_graph6(spec)


def _rule(label: str) -> Rule:
    try:
        return Rule.from_label(label)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc


def cmd_param(args) -> int:
    g = load_graph(args.graph, args.indexing)
    params = PARAM_NAMES if args.params == "all" else tuple(
        p for p in args.params.split(",") if p)
    flags = FLAG_NAMES if args.flags == "all" else tuple(
        f for f in args.flags.split(",") if f)
    t3 = load_t3_family(args.t3_data)
    cache = ResultCache(args.cache) if args.cache else None
    report, refused = compute_report(g, list(params), list(flags), t3, cache,
                                     collect_guards=True)
    out = report.to_json()
    if refused:
        # keep the computed fields, but name every refused parameter
        import json
        payload = json.loads(out)
        payload["refused"] = refused
        out = json.dumps(payload, sort_keys=True)
    if args.out:
        Path(args.out).write_text(out + "\n")
    print(out)
    if refused:
        for name, reason in refused.items():
            print(f"refused: parameter {name}: {reason}", file=sys.stderr)
        return EXIT_GUARD
    return EXIT_OK


def cmd_trace(args) -> int:
    g = load_graph(args.graph, args.indexing)
    rule = _rule(args.rule)
    final, trace = sap_closure(g, (), rule)
    replay = replay_trace(g, (), trace, rule)
    if replay.blue_nonedges != final.blue_nonedges:
        print("internal error: trace failed replay verification", file=sys.stderr)
        return EXIT_VIOLATION
    text = format_sap_trace(trace)
    if text:
        print(text)
    white = len(final.white_nonedges())
    total = len(g.non_edges())
    if white == 0:
        print(f"verdict: all {total} non-edges blue")
    else:
        print(f"verdict: {white} non-edges remain white")
    return EXIT_OK


def cmd_verify_sap(args) -> int:
    g = load_graph(args.graph, args.indexing)
    family = PatternFamily.from_label(args.family)
    rule = FAMILY_RULES[family]
    from .sapgame import is_zsap_zero
    flag = is_zsap_zero(g, rule)
    passes = 0
    failures = []
    for i in range(args.samples):
        a = sample_matrix(g, family, seed=args.seed + i)
        if has_sap(g, a):
            passes += 1
        else:
            failures.append(args.seed + i)
    if flag:
        if passes == args.samples:
            print(f"PASS: game value 0 for rule {rule.value}; "
                  f"{passes}/{args.samples} sampled matrices have the property")
            return EXIT_OK
        print(f"FAIL: game value 0 for rule {rule.value} but seeds {failures} "
              f"produced matrices without the property")
        return EXIT_VIOLATION
    print(f"not guaranteed: the {rule.value} game does not finish from an "
          f"empty start; {passes}/{args.samples} sampled matrices have the "
          f"property anyway")
    return EXIT_OK


def cmd_survey(args) -> int:
    rows: list[SurveyRow] = []
    if args.corpus:
        groups: dict[int, list[Graph]] = {}
        for ln_no, line in enumerate(Path(args.corpus).read_text().splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                g = parse_graph6(line)
            except GraphError as exc:
                raise CliError(f"{args.corpus}:{ln_no}: {exc}", EXIT_INPUT) from exc
            groups.setdefault(g.n, []).append(g)
        for n in sorted(groups):
            rows.append(survey_graphs(groups[n], n))
    else:
        if args.n is None:
            raise CliError("survey needs --n or --corpus", EXIT_INPUT)
        if not 1 <= args.n <= 8:
            raise CliError(f"built-in enumeration supports n in 1..8, got {args.n}",
                           EXIT_GUARD)
        graphs = list(enumerate_connected(args.n))
        rows.append(survey_graphs(graphs, args.n))
    print(SurveyRow.CSV_HEADER)
    for row in rows:
        print(row.to_csv())
    if args.out:
        Path(args.out).write_text(
            SurveyRow.CSV_HEADER + "\n" + "\n".join(r.to_csv() for r in rows) + "\n")
    return EXIT_OK


def cmd_verify_xi(args) -> int:
    if args.n is None:
        raise CliError("verify-xi needs --n", EXIT_INPUT)
    if not 1 <= args.n <= 7:
        raise CliError(
            f"the pipeline only covers graphs on at most 7 vertices, got {args.n}",
            EXIT_GUARD)
    t3 = load_t3_family(args.t3_data)
    exceptions = []
    unresolved = []
    total = 0
    for g in enumerate_connected(args.n):
        total += 1
        try:
            cert = xi(g, t3)
        except XiUnresolvedError:
            unresolved.append(g.to_graph6())
            continue
        floor = min_zfs(g, Rule.FLOOR)[0]
        if cert.value != floor:
            exceptions.append((g.to_graph6(), cert.value, floor))
    print(f"n={args.n}: {total} graphs, {len(exceptions)} exceptions, "
          f"{len(unresolved)} unresolved")
    for g6, value, floor in exceptions:
        print(f"  exception: {g6}: certified {value}, floor {floor}")
    for g6 in unresolved:
        print(f"  unresolved: {g6}")
    return EXIT_OK if not exceptions and not unresolved else EXIT_VIOLATION


def cmd_minors(args) -> int:
    g = load_graph(args.graph, args.indexing)
    if args.pattern:
        h = load_graph(args.pattern, args.indexing)
        hit, witness = has_minor(g, h, cap=max(10, g.n))
        if hit:
            sets = ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in witness)
            print(f"minor: yes; branch sets: {sets}")
        else:
            print("minor: no")
        return EXIT_OK
    eta = hadwiger(g, cap=max(10, g.n))
    from itertools import combinations
    kp = Graph.from_edges(eta, list(combinations(range(1, eta + 1), 2)))
    _, witness = has_minor(g, kp, cap=max(10, g.n))
    sets = ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in witness or ())
    print(f"largest complete minor: {eta}; branch sets: {sets}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sapforce",
        description="Zero forcing games on non-edges, exact Strong Arnold "
                    "Property checks, and small-graph parameter surveys")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--graph", help="graph6 string, known graph name, or file path")
        p.add_argument("--indexing", type=int, choices=(0, 1), default=1,
                       help="vertex indexing convention for edge-list files")
        p.add_argument("--t3-data", dest="t3_data", default=None,
                       help="override the bundled forbidden-minor data file")
        p.add_argument("--cache", default=None, help="append-only result cache path")
        p.add_argument("--out", default=None, help="write output to this path")

    p = sub.add_parser("param", help="compute parameters and flags for one graph")
    common(p)
    p.add_argument("--params", default="all",
                   help=f"comma list from {','.join(PARAM_NAMES)} (default all)")
    p.add_argument("--flags", default="all",
                   help=f"comma list from {','.join(FLAG_NAMES)} (default all)")
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("trace", help="print the deterministic non-edge forcing trace")
    common(p)
    p.add_argument("--rule", default="Z", help="local game rule: Z, Zl, or Zplus")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("verify-sap", help="sample matrices and check the property")
    common(p)
    p.add_argument("--family", default="S", help="S, S_ell, or S_plus")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_sap)

    p = sub.add_parser("survey", help="proportions of zero game values over connected graphs")
    common(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--corpus", default=None, help="graph6 file, one graph per line")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify-xi", help="check the parameter against the floor bound")
    common(p)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_verify_xi)

    p = sub.add_parser("minors", help="minor containment or largest complete minor")
    common(p)
    p.add_argument("--pattern", default=None, help="pattern graph to find as a minor")
    p.set_defaults(func=cmd_minors)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (CapExceededError, MSizeError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ReportInvariantError as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (GraphError, ConfigurationError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
