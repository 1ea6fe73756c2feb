"""Command-line driver.

Every subcommand writes one JSON document to stdout.  Exit status is 0 on
success, 2 when the mathematics says no (a failed identity, an invalid
activity, a counterexample), and 1 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codec, covering, forest, gaingraph, lbs, nbc, verify
from .forest import ForestClass

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _interval(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(":")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"interval must look like a:b, got {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _load_json(path: str):
    return json.loads(Path(path).read_text())


def cmd_nbc(args) -> tuple[dict, int]:
    a, b = args.interval
    G = gaingraph.complete_interval(args.n, a, b)
    if args.order != "lex":
        order = [gaingraph.GainEdge(*e) for e in _load_json(args.order)]
        G = G.reordered(order)
    out = nbc.nbc_report(G)
    out["interval"] = [a, b]
    return out, EXIT_OK


def cmd_trees(args) -> tuple[dict, int]:
    k2 = args.colors - args.k1 if args.k2 is None else args.k2
    cls = ForestClass(args.cls, args.k1, k2)
    if cls.k != args.colors:
        raise UsageError(f"k1 + k2 = {cls.k} does not match --colors {args.colors}")
    items = forest.enumerate_forests(args.n, args.colors, cls, spanning_only=not args.forests)
    out = {
        "n": args.n,
        "colors": args.colors,
        "class": args.cls,
        "k1": args.k1,
        "k2": k2,
        "forests": args.forests,
        "count": len(items),
    }
    if args.statistic:
        if args.forests:
            raise UsageError("--statistic applies to spanning trees only")
        out["statistic"] = args.statistic
        out["distribution"] = list(forest.distribution(items, forest.statistic(args.statistic), args.n))
    if args.list:
        out["items"] = [F.to_json() for F in items]
    return out, EXIT_OK


def cmd_codec(args) -> tuple[dict, int]:
    op = args.op
    if op.endswith("encode"):
        if not args.tree:
            raise UsageError(f"{op} needs --tree")
        T = codec.RootedTree.from_json(_load_json(args.tree))
        if T.n != args.n:
            raise UsageError(f"tree has {T.n} vertices, --n is {args.n}")
        word = codec.pruefer_encode(T) if op == "pruefer-encode" else codec.blue_encode(T)
        return {"n": args.n, "code": op.split("-")[0], "word": codec.format_word(word)}, EXIT_OK
    if not args.word:
        raise UsageError(f"{op} needs --word")
    word = codec.parse_word(args.word)
    T = codec.pruefer_decode(word, args.n) if op == "pruefer-decode" else codec.blue_decode(word, args.n)
    return T.to_json(), EXIT_OK


def cmd_covering(args) -> tuple[dict, int]:
    sys_, act = covering.from_json(_load_json(args.file))
    card = covering.cardinality_vector(sys_)
    derived = covering.activity_vector_from_cardinality(card, sys_.rank)
    cov = covering.verify_covering(sys_)
    out = {
        "rank": sys_.rank,
        "bases": len(sys_.bases),
        "cardinality_vector": list(card),
        "activity_vector_from_cardinality": list(derived.vector),
        "feasible": derived.feasible,
        "covering": _verdict_json(cov),
    }
    ok = bool(cov)
    if act is not None:
        v = covering.verify_activity(sys_, act)
        out["activity"] = _verdict_json(v)
        ok = ok and bool(v)
        if v:
            out["activity_vector"] = list(covering.activity_vector(sys_, act))
            ident = covering.check_cardinality_identity(sys_, act)
            out["cardinality_identity"] = _verdict_json(ident)
            ok = ok and bool(ident)
    return out, EXIT_OK if ok else EXIT_MISMATCH


def _verdict_json(v: covering.Verdict) -> dict:
    out = {"ok": v.ok}
    if not v.ok:
        out["reason"] = v.reason
        w = v.witness
        out["witness"] = sorted(w) if isinstance(w, frozenset) else repr(w)
    return out


def cmd_conjecture(args) -> tuple[dict, int]:
    out = lbs.conjecture_report(args.n, args.variant)
    return out, EXIT_OK if out["equal"] else EXIT_MISMATCH


def cmd_verify(args) -> tuple[dict, int]:
    if args.scale is not None:
        if args.scale < 2:
            raise UsageError("--scale must be >= 2")
        out = verify.verify_suite(args.scale)
        return out, EXIT_MISMATCH if out["summary"][verify.FAIL] else EXIT_OK
    if not args.target:
        raise UsageError("verify needs --target or --scale")
    rep = _single_target(args)
    return rep.to_json(), EXIT_MISMATCH if rep.verdict == verify.FAIL else EXIT_OK


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"target {args.target} needs --{name.replace('_', '-')}")


def _single_target(args) -> verify.VerificationReport:
    t = args.target
    if t == "sec3":
        return verify.verify_worked_example()
    if t == "sec3.1":
        return verify.verify_two_pure()
    if t in ("thm2.2", "thm4.6", "thm2.1", "order"):
        _need(args, "n", "interval")
        a, b = args.interval
        fn = {"thm2.2": verify.verify_nbc_interval, "thm4.6": verify.verify_tree_statistics,
              "thm2.1": verify.verify_nbc_partition, "order": verify.verify_order_invariance}[t]
        return fn(args.n, a, b)
    if t == "thm4.4":
        _need(args, "n", "k1", "k2")
        return verify.verify_forest_counts(args.n, args.k1, args.k2)
    if t == "prop4.5":
        _need(args, "n", "k1", "k2", "cls")
        return verify.verify_forest_partition(args.n, args.k1, args.k2, args.cls)
    _need(args, "n")
    fn = {"eq2": verify.verify_bounded_linial, "thm5.1": verify.verify_braid, "thm5.2": verify.verify_shi,
          "codec": verify.verify_codec, "lbs": verify.verify_lbs, "conj6.1": verify.verify_conjecture}.get(t)
    if fn is None:
        raise UsageError(f"unknown target {t!r}")
    return fn(args.n)


TARGETS = ("sec3", "sec3.1", "thm2.1", "thm2.2", "thm4.4", "thm4.6", "prop4.5", "eq2",
           "thm5.1", "thm5.2", "codec", "lbs", "conj6.1", "order")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nbcactivity", description="Activity of NBC sets, colored trees and covering systems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("nbc", help="NBC sets of K_n^[a,b]")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--interval", type=_interval, required=True)
    s.add_argument("--order", default="lex", help="'lex' or a JSON file listing [tail,head,gain] in order")
    s.set_defaults(func=cmd_nbc)

    s = sub.add_parser("trees", help="count colored trees or forests of a class")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--colors", type=int, default=1)
    s.add_argument("--class", dest="cls", choices=forest.MODES, default="unrestricted")
    s.add_argument("--k1", type=int, default=0)
    s.add_argument("--k2", type=int)
    s.add_argument("--forests", action="store_true", help="count forests instead of spanning trees")
    s.add_argument("--statistic", choices=forest.STATISTICS)
    s.add_argument("--list", action="store_true", help="include every tree in the output")
    s.set_defaults(func=cmd_trees)

    s = sub.add_parser("codec", help="Prüfer and Blue codes of rooted trees")
    s.add_argument("op", choices=["pruefer-encode", "pruefer-decode", "blue-encode", "blue-decode"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--tree")
    s.add_argument("--word")
    s.set_defaults(func=cmd_codec)

    s = sub.add_parser("covering", help="check a covering system given as JSON")
    s.add_argument("action", choices=["verify"])
    s.add_argument("file")
    s.set_defaults(func=cmd_covering)

    s = sub.add_parser("conjecture", help="compare the two LBS/non-increasing tree statistics")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--variant", choices=["literal", "restricted"], required=True)
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("verify", help="run one verification target or the whole suite")
    s.add_argument("--target", choices=TARGETS)
    s.add_argument("--scale", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--interval", type=_interval)
    s.add_argument("--k1", type=int)
    s.add_argument("--k2", type=int)
    s.add_argument("--class", dest="cls", choices=forest.MODES)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code = args.func(args)
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"nbcactivity: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(_dump(out))
    return code


def main():
    sys.exit(run())
