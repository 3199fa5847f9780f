"""Command line interface: ``rtm <command> ...``.

Exit codes: 0 success, 1 a check failed (witness on stdout), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from rtm import checks
from rtm.errors import ConsistencyError, RtmError
from rtm.forest import ForestSum, parse_forest
from rtm.hopf import antipode, coproduct, dynkin
from rtm.mzv import PrecisionConfig, kernel_check, zeta_num
from rtm.relations import RunConfig, generate, rank_exact, read_relations, span_inclusion, write_relations
from rtm.tree_maps import apply, partial_as_forest_sum, partial_n
from rtm.words import parse_word_sum, parse_zindex, z_decode

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _forest(text: str):
    return parse_forest("" if text in ("1", "I") else text)


def _scalar_text(c) -> str:
    return str(Fraction(c))


def _forest_sum_json(fs: ForestSum) -> list:
    return [[f.key, _scalar_text(c)] for f, c in sorted(fs.items(), key=lambda kv: kv[0].key)]


def _emit(obj, as_json: bool, data) -> None:
    print(json.dumps(data) if as_json else obj)


def cmd_coproduct(args) -> int:
    t = coproduct(_forest(args.forest))
    _emit(t, args.json, [[l, r, _scalar_text(c)] for l, r, c in t.triples()])
    return EXIT_OK


def cmd_antipode(args) -> int:
    s = antipode(_forest(args.forest))
    _emit(s, args.json, _forest_sum_json(s))
    return EXIT_OK


def cmd_dynkin(args) -> int:
    d = dynkin(_forest(args.forest))
    _emit(d, args.json, _forest_sum_json(d))
    return EXIT_OK


def _word_sum_json(p) -> list:
    return [[w or "1", _scalar_text(c)] for w, c in p.sorted_items()]


def cmd_apply(args) -> int:
    p = apply(_forest(args.forest), parse_word_sum(args.word))
    _emit(p, args.json, _word_sum_json(p))
    return EXIT_OK


def cmd_partial(args) -> int:
    p = partial_n(args.n, parse_word_sum(args.word))
    _emit(p, args.json, _word_sum_json(p))
    return EXIT_OK


def cmd_ladder_decomp(args) -> int:
    fs = partial_as_forest_sum(args.n)
    _emit(fs, args.json, _forest_sum_json(fs))
    return EXIT_OK


def cmd_relations(args) -> int:
    cfg = RunConfig(args.max_degree, args.max_weight, args.derivations, out=args.out, format=args.format)
    rs = generate(cfg)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            write_relations(rs, fh, cfg.format)
        print(f"wrote {len(rs)} rows to {cfg.out}", file=sys.stderr)
    else:
        write_relations(rs, sys.stdout, cfg.format)
    return EXIT_OK


def _report(result: checks.CheckResult) -> int:
    print(result.line())
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.what == "main-theorem":
        return _report(checks.main_theorem(args.n, args.max_word_weight))
    if args.what == "hopf-axioms":
        return _report(checks.hopf_axioms(args.max_degree))
    if args.what == "series":
        return _report(checks.series_identities(args.order, max(args.order, 8)))
    if args.what == "ladders":
        return _report(checks.ladder_identities(args.n))
    raise RtmError(f"unknown verification {args.what!r}")


def _eps(text: str) -> Fraction:
    try:
        eps = Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad epsilon {text!r}") from exc
    if eps <= 0:
        raise argparse.ArgumentTypeError("epsilon must be positive")
    return eps


def cmd_mzv_eval(args) -> int:
    text = args.index.strip()
    word = z_decode(parse_zindex(text)) if text.startswith("(") else text
    r = zeta_num(word, PrecisionConfig(args.eps))
    print(f"{mpmath.nstr(r.value, args.digits)} ± {float(r.bound):.1g}")
    return EXIT_OK


def cmd_check_kernel(args) -> int:
    rep = kernel_check(_forest(args.forest), args.word, PrecisionConfig(args.eps))
    print(rep)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_rank(args) -> int:
    rs = read_relations(args.inp)
    for weight in rs.weights():
        print(f"weight {weight}: {len(rs.at_weight(weight))} rows, rank {rank_exact(rs.at_weight(weight))}")
    return EXIT_OK


def cmd_span(args) -> int:
    res = span_inclusion(read_relations(args.sub), read_relations(args.sup))
    if res.included:
        for weight, (r_sub, r_sup) in sorted(res.ranks.items()):
            print(f"weight {weight}: rank(sub) {r_sub} <= rank(sup) {r_sup}")
        print("PASS span inclusion")
        return EXIT_OK
    print(f"FAIL span inclusion; witness: {res.witness.to_json()}")
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rtm", description="Rooted tree maps and multiple zeta value relations.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    for name, fn in (("coproduct", cmd_coproduct), ("antipode", cmd_antipode), ("dynkin", cmd_dynkin)):
        sp = with_json(sub.add_parser(name, help=f"{name} of a forest (canonical key, '1' for the empty forest)"))
        sp.add_argument("forest")
        sp.set_defaults(func=fn)

    sp = with_json(sub.add_parser("apply", help="apply the tree map of a forest to a word or word sum"))
    sp.add_argument("forest")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_apply)

    sp = with_json(sub.add_parser("partial", help="apply the derivation partial_n"))
    sp.add_argument("n", type=int)
    sp.add_argument("word")
    sp.set_defaults(func=cmd_partial)

    sp = with_json(sub.add_parser("ladder-decomp", help="partial_n as a combination of ladder forests"))
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_ladder_decomp)

    sp = sub.add_parser("relations", help="generate relation rows")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--max-weight", type=int, required=True)
    sp.add_argument("--derivations", action="store_true", help="also emit derivation rows")
    sp.add_argument("--format", choices=("text", "jsonl"), default="jsonl")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("verify", help="exact symbolic verifications")
    vsub = sp.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("main-theorem")
    v.add_argument("--n", type=int, default=6)
    v.add_argument("--max-word-weight", type=int, default=7)
    v = vsub.add_parser("hopf-axioms")
    v.add_argument("--max-degree", type=int, default=5)
    v = vsub.add_parser("series")
    v.add_argument("--order", type=int, default=6)
    v = vsub.add_parser("ladders")
    v.add_argument("--n", type=int, default=8)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("mzv", help="numerical multiple zeta values")
    msub = sp.add_subparsers(dest="what", required=True)
    m = msub.add_parser("eval")
    m.add_argument("index", help="z-index like (2,1) or an admissible word like xyy")
    m.add_argument("--eps", type=_eps, default=Fraction(1, 10**30))
    m.add_argument("--digits", type=int, default=17)
    m.set_defaults(func=cmd_mzv_eval)

    sp = sub.add_parser("check", help="numerical checks")
    csub = sp.add_subparsers(dest="what", required=True)
    c = csub.add_parser("kernel", help="confirm Z(f(w)) = 0 numerically")
    c.add_argument("forest")
    c.add_argument("word")
    c.add_argument("--eps", type=_eps, default=Fraction(1, 10**30))
    c.set_defaults(func=cmd_check_kernel)

    sp = sub.add_parser("rank", help="exact rank per weight of a jsonl relation file")
    sp.add_argument("--in", dest="inp", required=True)
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("span", help="is every row of --sub in the row space of --sup?")
    sp.add_argument("--sub", required=True)
    sp.add_argument("--sup", required=True)
    sp.set_defaults(func=cmd_span)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RtmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}")
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
