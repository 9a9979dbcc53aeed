"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 usage error, 3 a verification or
cross-check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .cm_bipartite import BipartiteLabeledGraph, graph_from_poset, poset_from_graph
from .errors import ConsistencyError, ValidationError
from .graph import (count_independent_sets_by_size, format_graph,
                    independence_polynomial_oracle, mask_to_set, parse_graph)
from .hilbert import (STRATEGY_KINDS, PivotStrategy, PivotStrategyError, hilbert_numerator,
                      independence_polynomial)
from .interpolation import SingularSystemError, build_system, solve_system
from .monomial_ideal import parse_ideal
from .polynomial import Polynomial
from .poset import (boolean_lattice, comparability_graph, enumerate_antichains,
                    format_poset, lex_product, parse_poset)
from .poset_ideal import (bijection_f, bijection_g, enumerate_variety, groebner_basis,
                          jp_cover_generators, jp_generators, leading_term_ideal,
                          point_to_text, verify_buchberger)


class VerificationFailed(Exception):
    """Raised by a command whose output is complete but whose check failed."""

    def __init__(self, output: str):
        self.output = output
        super().__init__("verification failed")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _strategy(args) -> PivotStrategy:
    return PivotStrategy(args.pivot_strategy, args.seed)


def _emit(args, text: str, payload: dict) -> str:
    if args.format == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return text if text.endswith("\n") else text + "\n"


def _poly_payload(poly: Polynomial) -> dict:
    return {"coefficients": poly.to_json(), "text": poly.to_text()}


def _fast_series(g, args):
    return independence_polynomial(g, _strategy(args), memo=args.memo == "on",
                                   components=args.components == "on")


def _polynomial_command(args, g, label: str) -> str:
    result = _fast_series(g, args)
    poly = result.series
    payload = {label: _poly_payload(poly), "count": str(poly(1)),
               "stats": result.stats.to_json()}
    lines = [poly.to_text()]
    mismatch = False
    if args.oracle:
        oracle = independence_polynomial_oracle(g)
        payload["oracle"] = _poly_payload(oracle)
        payload["match"] = oracle == poly
        mismatch = oracle != poly
        lines = [f"fast:   {poly.to_text()}", f"oracle: {oracle.to_text()}",
                 "match" if not mismatch else "MISMATCH"]
    out = _emit(args, "\n".join(lines), payload)
    if mismatch:
        raise VerificationFailed(out)
    return out


def cmd_indpoly(args) -> str:
    return _polynomial_command(args, parse_graph(_read(args.graph)), "independence_polynomial")


def cmd_antipoly(args) -> str:
    p = parse_poset(_read(args.poset))
    return _polynomial_command(args, comparability_graph(p), "antichain_polynomial")


def cmd_groebner(args) -> str:
    p = parse_poset(_read(args.poset))
    gb = groebner_basis(p)
    report = verify_buchberger(p)
    lt = leading_term_ideal(p)
    lines = [f"# Gb_P: {len(gb)} elements"] + [str(g) for g in gb.generators]
    lines.append(f"# leading term ideal: {lt}")
    lines.append(f"# S-pairs checked: {report.pairs_checked}, non-zero remainders: "
                 f"{len(report.failures)}")
    lines.append(f"# reduced: {report.reduced}, non-redundant: {report.non_redundant}, "
                 f"J_P and J'_P generators reduce to 0: {not report.membership_failures}")
    lines.append("ok" if report.ok else "FAILED")
    payload = {"basis": gb.to_json(), "leading_term_ideal": lt.to_json(),
               "report": report.to_json()}
    out = _emit(args, "\n".join(lines), payload)
    if not report.ok:
        raise VerificationFailed(out)
    return out


def cmd_variety(args) -> str:
    p = parse_poset(_read(args.poset))
    gens = jp_cover_generators(p) if args.cover else jp_generators(p)
    points = enumerate_variety(gens)
    table = []
    ok = True
    images = set()
    for a in points:
        s = bijection_f(p, a)
        back = bijection_g(p, s)
        ok &= back == a
        images.add(s)
        table.append((a, s))
    antichains = {mask_to_set(m) for m in enumerate_antichains(p)}
    ok &= images == antichains
    lines = [f"# V({gens.kind}): {len(points)} points, {len(antichains)} antichains"]
    lines += [f"{point_to_text(a)} -> {{{', '.join(str(v + 1) for v in sorted(s))}}}"
              for a, s in table]
    lines.append("bijection ok" if ok else "BIJECTION FAILED")
    payload = {
        "generators": gens.kind,
        "n": p.n,
        "points": [point_to_text(a) for a in points],
        "table": [{"point": point_to_text(a), "antichain": sorted(v + 1 for v in s)}
                  for a, s in table],
        "antichain_count": len(antichains),
        "ok": ok,
    }
    out = _emit(args, "\n".join(lines), payload)
    if not ok:
        raise VerificationFailed(out)
    return out


def cmd_convert(args) -> str:
    text = _read(args.input)
    header = next((ln.split("#", 1)[0].split() for ln in text.splitlines()
                   if ln.split("#", 1)[0].strip()), [""])[0]
    if header == "poset":
        p = parse_poset(text)
        bip, index_map = graph_from_poset(p)
        body = format_graph(bip.to_graph(), [bip.header_comment(),
                            "poset element -> label: " + ", ".join(
                                f"{e + 1}->{index_map[e] + 1}" for e in range(p.n))])
        payload = {"graph": body, "index_map": {str(e + 1): index_map[e] + 1 for e in range(p.n)}}
        return _emit(args, body, payload)
    if header == "graph":
        bip = BipartiteLabeledGraph.from_graph(parse_graph(text))
        p = poset_from_graph(bip)
        body = format_poset(p, ["poset P_G of a Cohen-Macaulay bipartite graph"])
        return _emit(args, body, {"poset": body})
    raise ValidationError("input must start with a 'poset <n>' or 'graph <n>' header", 1)


def cmd_lexprod(args) -> str:
    p1 = parse_poset(_read(args.first))
    p2 = parse_poset(_read(args.second))
    prod = lex_product(p1, p2)
    body = format_poset(prod, [f"lexicographic product; (a, b) -> (a-1)*{p2.n} + b"])
    return _emit(args, body, {"poset": body, "n": prod.n})


def cmd_interpolate(args) -> str:
    p = parse_poset(_read(args.poset))
    try:
        t = Fraction(args.t)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"bad rational t={args.t!r}") from None
    try:
        system = build_system(p, t, args.evaluator, _strategy(args))
    except SingularSystemError as exc:
        raise ValidationError(str(exc)) from None
    coeffs = solve_system(system)
    if any(c.denominator != 1 for c in coeffs):
        raise ConsistencyError(f"non-integer coefficients {[str(c) for c in coeffs]}")
    poly = Polynomial(int(c) for c in coeffs)
    fast = independence_polynomial(comparability_graph(p), _strategy(args)).series
    ok = poly == fast
    lines = [f"# t = {t}, nodes m*t for m = 1..{p.n + 1}"]
    lines += [f"A(P[K_{m}], {t}) = {y}" for m, y in enumerate(system.rhs, start=1)]
    lines.append(f"recovered: {poly.to_text()}")
    lines.append("matches antichain polynomial" if ok else "MISMATCH with antichain polynomial")
    payload = {"system": system.to_json(), "recovered": _poly_payload(poly),
               "evaluator": args.evaluator, "match": ok}
    out = _emit(args, "\n".join(lines), payload)
    if not ok:
        raise VerificationFailed(out)
    return out


def cmd_bench_boolean(args) -> str:
    if not 0 <= args.k <= 20:
        raise ValidationError(f"k must be in 0..20, got {args.k}")
    p = boolean_lattice(args.k)
    g = comparability_graph(p)
    start = time.perf_counter()
    result = _fast_series(g, args)
    elapsed = time.perf_counter() - start
    count = result.series(1)
    payload = {"k": args.k, "elements": p.n, "count": str(count),
               "polynomial": _poly_payload(result.series), "stats": result.stats.to_json()}
    lines = [f"k={args.k} elements={p.n} antichains={count}",
             f"polynomial: {result.series.to_text()}",
             f"stats: nodes={result.stats.nodes} depth={result.stats.depth} "
             f"memo_hits={result.stats.memo_hits} strategy={result.stats.strategy}"]
    if not args.no_timing:
        payload["seconds"] = round(elapsed, 6)
        lines.append(f"time: {elapsed:.3f}s")
    mismatch = False
    if args.oracle:
        oracle = sum(count_independent_sets_by_size(g))
        payload["oracle_count"] = str(oracle)
        mismatch = oracle != count
        lines.append(f"oracle: {oracle} {'match' if not mismatch else 'MISMATCH'}")
    out = _emit(args, "\n".join(lines), payload)
    if mismatch:
        raise VerificationFailed(out)
    return out


def cmd_hn(args) -> str:
    ideal, n_vars, changed = parse_ideal(_read(args.ideal))
    if changed:
        print(f"warning: generators of {args.ideal} were not minimal; interreduced to {len(ideal)}",
              file=args.stderr)
    result = hilbert_numerator(ideal, n_vars, _strategy(args), memo=args.memo == "on")
    lines = [f"numerator: {result.numerator.to_text()}"]
    if result.series is not None:
        lines.append(f"series: {result.series.to_text()}")
    lines.append(f"stats: nodes={result.stats.nodes} depth={result.stats.depth} "
                 f"memo_hits={result.stats.memo_hits} strategy={result.stats.strategy}")
    payload = result.to_json()
    payload["ideal"] = ideal.to_json()
    return _emit(args, "\n".join(lines), payload)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--pivot-strategy", choices=STRATEGY_KINDS, default="max-degree")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--memo", choices=("on", "off"), default="on")
    common.add_argument("--components", choices=("on", "off"), default="on")

    parser = argparse.ArgumentParser(prog="indepset",
                                     description="Independent sets and antichains via Hilbert series.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("indpoly", parents=[common], help="independence polynomial of a graph file")
    sp.add_argument("graph")
    sp.add_argument("--oracle", action="store_true", help="cross-check against enumeration")
    sp.set_defaults(func=cmd_indpoly)

    sp = sub.add_parser("antipoly", parents=[common], help="antichain polynomial of a poset file")
    sp.add_argument("poset")
    sp.add_argument("--oracle", action="store_true", help="cross-check against enumeration")
    sp.set_defaults(func=cmd_antipoly)

    sp = sub.add_parser("groebner", parents=[common], help="Gb_P and its Buchberger verification")
    sp.add_argument("poset")
    sp.set_defaults(func=cmd_groebner)

    sp = sub.add_parser("variety", parents=[common], help="V(J_P) and the antichain bijection")
    sp.add_argument("poset")
    sp.add_argument("--cover", action="store_true", help="use the cover-relation generators")
    sp.set_defaults(func=cmd_variety)

    sp = sub.add_parser("convert", parents=[common],
                        help="poset file -> CM bipartite graph file, or back")
    sp.add_argument("input")
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("lexprod", parents=[common], help="lexicographic product P1[P2]")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_lexprod)

    sp = sub.add_parser("interpolate", parents=[common],
                        help="recover A(P,x) from evaluations of lexicographic products")
    sp.add_argument("poset")
    sp.add_argument("--t", required=True, help="non-zero rational, e.g. 1/2")
    sp.add_argument("--evaluator", choices=("lex", "direct", "both"), default="both")
    sp.set_defaults(func=cmd_interpolate)

    sp = sub.add_parser("bench-boolean", parents=[common],
                        help="count antichains of the Boolean lattice on k atoms")
    sp.add_argument("k", type=int)
    sp.add_argument("--oracle", action="store_true", help="also count by enumeration")
    sp.add_argument("--no-timing", action="store_true", help="omit wall-clock time")
    sp.set_defaults(func=cmd_bench_boolean)

    sp = sub.add_parser("hn", parents=[common], help="Hilbert numerator of a monomial ideal file")
    sp.add_argument("ideal")
    sp.set_defaults(func=cmd_hn)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.stderr = stderr
    try:
        stdout.write(args.func(args))
        return 0
    except ValidationError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except VerificationFailed as exc:
        stdout.write(exc.output)
        stderr.write("error: verification failed\n")
        return 3
    except (ConsistencyError, PivotStrategyError, SingularSystemError, ArithmeticError) as exc:
        stderr.write(f"error: {exc}\n")
        return 3
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
