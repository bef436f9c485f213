"""Command-line front end.

Exit codes: 0 on success or a verified identity, 1 when a verification
fails, 2 on usage errors.  All output is deterministic: identical inputs
produce byte-identical output, and nothing is randomized.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .action import parse_group_ring
from .elements import EISENSTEIN, FormalElement, MixedSpaceError, MixedWeightError, parse_genid
from .eisenstein import UnderdeterminedTruncationError, recognize_quasimodular
from .expressions import ExpressionSyntaxError, parse_expression
from .identities import (
    identity_report,
    mfprod_i,
    mfprod_ii,
    parity_expression,
    ramanujan,
    relprodandg,
    sum_formula,
)
from .kronecker import (
    check_derivation_diagram,
    closed_form_depth2,
    fay_check,
    kronecker_b1,
    kronecker_wplus_check,
    polar_product_candidate,
    realize_bernoulli,
    realize_kronecker,
)
from .maps import map_partial, map_pi, map_sigma
from .multipoly import MultiPoly
from .series import QSeries
from .spaces import (
    cache_clear,
    cache_status,
    default_cache_dir,
    dimension,
    enumerate_generators,
    normal_form,
    relations_to_csv,
    relations_to_json,
)


class UsageError(ValueError):
    pass


def _parse_weights(text: str) -> list[int]:
    """Accept '12', '1..12', or comma-separated combinations of both."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out or any(w < 1 for w in out):
        raise UsageError(f"bad weight range {text!r}")
    return out


def _common_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--q-order", type=int, default=30, help="q-series truncation order")
    parser.add_argument("--degree", type=int, default=8, help="total-degree truncation")
    parser.add_argument("--cache-dir", default=None, help="relation-system cache directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doubleeis",
        description="Exact computations in formal double Eisenstein spaces.",
    )
    parser.add_argument("--version", action="version", version=f"doubleeis {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dimension", help="dimensions of the formal spaces")
    p.add_argument("--space", choices=("E", "Z"), default="E")
    p.add_argument("--weights", default="1..12")
    _common_flags(p)

    p = sub.add_parser("relations", help="relation rows of one weight")
    p.add_argument("--space", choices=("E", "Z"), default="E")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--reduced", action="store_true", help="emit the row-reduced system")
    _common_flags(p)

    p = sub.add_parser("reduce", help="normal form of an expression")
    p.add_argument("--expr", required=True)
    _common_flags(p)

    p = sub.add_parser("map", help="apply a structural map to an expression")
    p.add_argument("--which", choices=("pi", "sigma", "partial"), required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--reduce", action="store_true", help="also reduce the image")
    _common_flags(p)

    p = sub.add_parser("realize", help="realize a generator as a q-series or rational")
    p.add_argument("--kind", choices=("kronecker", "bernoulli"), default="kronecker")
    p.add_argument("--gen", required=True)
    p.add_argument("--check-closed-form", action="store_true")
    _common_flags(p)

    p = sub.add_parser("recognize", help="express a generator's q-series in G2,G4,G6")
    p.add_argument("--gen", required=True)
    _common_flags(p)

    p = sub.add_parser("fay-check", help="verify the three-term Fay identity")
    p.add_argument("--polar-only", action="store_true", help="check the bare pole part")
    _common_flags(p)

    p = sub.add_parser("wplus-check", help="bi-period space membership")
    p.add_argument("--candidate", choices=("kronecker", "polar"), default="kronecker")
    _common_flags(p)

    p = sub.add_parser("act", help="apply a group-ring element to a generator expression")
    p.add_argument("--matrix", required=True, help="e.g. '1+T^-1' or '5-3*U+U*epsilon'")
    _common_flags(p)

    p = sub.add_parser("verify", help="verify one identity family")
    p.add_argument(
        "--identity",
        choices=("sum-formula", "parity", "relprodandg", "mfprod", "ramanujan", "diagram"),
        required=True,
    )
    p.add_argument("--max-weight", type=int, default=None)
    _common_flags(p)

    p = sub.add_parser("cache", help="inspect or clear the relation-system cache")
    p.add_argument("action", choices=("status", "clear"))
    p.add_argument("--cache-dir", default=None)
    return parser


def _emit(args, rows: list[dict], text_lines: list[str]):
    if args.format == "json":
        print(json.dumps(rows, indent=2, sort_keys=True))
    elif args.format == "csv":
        if rows:
            keys = list(rows[0])
            print(",".join(keys))
            for r in rows:
                print(",".join(str(r[k]) for k in keys))
    else:
        for line in text_lines:
            print(line)


def _cmd_dimension(args) -> int:
    weights = _parse_weights(args.weights)
    rows = [
        {"weight": w, "dimension": dimension(args.space, w, cache_dir=args.cache_dir)}
        for w in weights
    ]
    _emit(args, rows, [f"dim {args.space}_{r['weight']} = {r['dimension']}" for r in rows])
    return 0


def _cmd_relations(args) -> int:
    if args.format == "json":
        print(json.dumps(relations_to_json(args.space, args.weight, args.reduced), indent=2))
    else:
        # the CSV table is also the most readable text form
        sys.stdout.write(relations_to_csv(args.space, args.weight, args.reduced))
    return 0


def _cmd_reduce(args) -> int:
    element = parse_expression(args.expr)
    nf = normal_form(element, cache_dir=args.cache_dir)
    data = [{"input": element.to_text(), "normal_form": nf.to_text(), "is_zero": not nf}]
    _emit(args, data, [nf.to_text()])
    return 0


def _cmd_map(args) -> int:
    element = parse_expression(args.expr)
    fn = {"pi": map_pi, "sigma": map_sigma, "partial": map_partial}[args.which]
    image = fn(element)
    lines = [image.to_text()]
    data = {"input": element.to_text(), "map": args.which, "image": image.to_text()}
    if args.reduce:
        nf = normal_form(image, cache_dir=args.cache_dir)
        data["normal_form"] = nf.to_text()
        data["is_zero"] = not nf
        lines.append(f"normal form: {nf.to_text()}")
    _emit(args, [data], lines)
    return 0


def _cmd_realize(args) -> int:
    gen = parse_genid(args.gen)
    if args.kind == "bernoulli":
        if args.check_closed_form:
            raise UsageError("--check-closed-form applies to the q-series realization only")
        value = realize_bernoulli(gen)
        _emit(args, [{"gen": str(gen), "value": str(value), "provenance": "constant-term"}],
              [f"{gen} -> {value}"])
        return 0
    series = realize_kronecker(gen, args.q_order)
    data = {"gen": str(gen), "value": series.to_text(), "provenance": "series-extraction"}
    lines = [f"{gen} -> {series.to_text()}"]
    if args.check_closed_form:
        if gen.kind != "G2" or gen.args[2] or gen.args[3]:
            raise UsageError("--check-closed-form applies to G(k1,k2;0,0) generators")
        closed = closed_form_depth2(gen.args[0], gen.args[1], args.q_order)
        data["closed_form"] = closed.to_text()
        data["matches"] = series == closed
        lines.append(f"closed form: {closed.to_text()}")
        lines.append(f"matches: {series == closed}")
        if not data["matches"]:
            _emit(args, [data], lines)
            return 1
    _emit(args, [data], lines)
    return 0


def _cmd_recognize(args) -> int:
    gen = parse_genid(args.gen)
    series = realize_kronecker(gen, args.q_order)
    try:
        combo = recognize_quasimodular(series, gen.weight)
    except UnderdeterminedTruncationError as exc:
        raise UsageError(str(exc)) from None
    if combo is None:
        _emit(args, [{"gen": str(gen), "quasimodular": False}],
              [f"{gen}: not quasimodular of weight {gen.weight} (to the given order)"])
        return 1
    pretty = " + ".join(f"{c} * G2^{a} G4^{b} G6^{c2}" for (a, b, c2), c in sorted(combo.items()))
    _emit(
        args,
        [{"gen": str(gen), "quasimodular": True,
          "monomials": [{"exponents": list(m), "coefficient": str(c)} for m, c in sorted(combo.items())]}],
        [f"{gen} = {pretty or '0'}"],
    )
    return 0


def _cmd_fay(args) -> int:
    if args.polar_only:
        ok = fay_check(True, None, args.degree, args.q_order)
        label = "polar part"
    else:
        table = kronecker_b1(args.degree, args.q_order)
        ok = fay_check(True, table, args.degree, args.q_order)
        label = "Kronecker function"
    _emit(args, [{"candidate": label, "degree": args.degree, "q_order": args.q_order, "holds": ok}],
          [f"Fay identity for the {label} at degree {args.degree}, q-order {args.q_order}: "
           + ("verified" if ok else "FAILED")])
    return 0 if ok else 1


def _cmd_wplus(args) -> int:
    if args.candidate == "polar":
        from .action import wplus_check

        ok = wplus_check(polar_product_candidate(args.q_order), MultiPoly.zero(args.degree),
                         args.degree, args.q_order)
    else:
        ok = kronecker_wplus_check(args.degree, args.q_order)
    _emit(args, [{"candidate": args.candidate, "degree": args.degree,
                  "q_order": args.q_order, "member": ok}],
          [f"{args.candidate} candidate in the bi-period space: " + ("yes" if ok else "NO")])
    return 0 if ok else 1


def _cmd_act(args) -> int:
    elem = parse_group_ring(args.matrix)
    rows = [{"coefficient": c, "matrix": list(m.entries)} for c, m in elem.terms]
    _emit(args, rows, [f"{c} * {m.entries}" for c, m in elem.terms])
    return 0


def _verify_instances(args):
    name = args.identity
    q = args.q_order
    if name == "sum-formula":
        top = args.max_weight or 10
        for k in range(2, top + 1):
            for d in range(top - k + 1):
                yield f"sum-formula k={k} d={d}", {"k": k, "d": d}, sum_formula(k, d)
    elif name == "parity":
        top = args.max_weight or 9
        for weight in range(3, top + 1, 2):
            for gen in enumerate_generators(EISENSTEIN, weight):
                if gen.kind == "G2":
                    yield (f"parity {gen}", {"indices": list(gen.args)},
                           parity_expression(*gen.args))
    elif name == "relprodandg":
        top = args.max_weight or 12
        for k in range(4, top + 1, 2):
            for k1 in range(1, k):
                yield f"relprodandg ({k1},{k - k1})", {"k1": k1, "k2": k - k1}, relprodandg(k1, k - k1)
    elif name == "mfprod":
        top = args.max_weight or 12
        for k in range(4, top + 1, 2):
            yield f"mfprod-i k={k}", {"k": k, "part": "i"}, mfprod_i(k)
        for k in range(6, top + 1, 2):
            yield f"mfprod-ii k={k}", {"k": k, "part": "ii"}, mfprod_ii(k)
    elif name == "ramanujan":
        for which in ("G2", "G4", "G6"):
            element, _ = ramanujan(which, q)
            yield f"ramanujan {which}", {"which": which}, element
    else:
        raise UsageError(f"no instance family for {name!r}")


def _cmd_verify(args) -> int:
    if args.identity == "diagram":
        top = args.max_weight or 8
        reports = []
        ok_all = True
        for weight in range(1, top + 1):
            ok = check_derivation_diagram(weight, args.q_order)
            ok_all &= ok
            reports.append({"name": f"diagram weight {weight}", "holds": ok})
        _emit(args, reports,
              [f"{r['name']}: {'ok' if r['holds'] else 'FAILED'}" for r in reports])
        return 0 if ok_all else 1

    reports = []
    lines = []
    ok_all = True
    for label, params, element in _verify_instances(args):
        report = identity_report(args.identity, params, element, args.q_order)
        good = report["reduced_to_zero"] and report["realized_zero_to_order"] is not None
        ok_all &= good
        reports.append(report)
        lines.append(f"{label}: " + ("ok" if good else "FAILED"))
    lines.append(f"{len(reports)} instances, " + ("all verified" if ok_all else "FAILURES present"))
    _emit(args, reports, lines)
    return 0 if ok_all else 1


def _cmd_cache(args) -> int:
    if args.action == "status":
        status = cache_status(args.cache_dir)
        print(json.dumps(status, indent=2))
    else:
        removed = cache_clear(args.cache_dir)
        print(f"removed {removed} cache file(s) from {args.cache_dir or default_cache_dir()}")
    return 0


_COMMANDS = {
    "dimension": _cmd_dimension,
    "relations": _cmd_relations,
    "reduce": _cmd_reduce,
    "map": _cmd_map,
    "realize": _cmd_realize,
    "recognize": _cmd_recognize,
    "fay-check": _cmd_fay,
    "wplus-check": _cmd_wplus,
    "act": _cmd_act,
    "verify": _cmd_verify,
    "cache": _cmd_cache,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, ExpressionSyntaxError, MixedSpaceError, MixedWeightError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():  # pragma: no cover - thin wrapper
    sys.exit(run())
