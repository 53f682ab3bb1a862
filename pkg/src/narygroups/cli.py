"""Command-line front end.

Exit codes: 0 when the requested property holds, 1 when it fails (a witness is
printed on stdout), 2 on parse, validation or budget errors (stderr).
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import classify, hosszu, iso, polyadic, terms
from .errors import MissingSkewMap, NaryError, ParseError
from .groups import klein_group
from .polyadic import NaryGroup, NaryOp

COMMANDS = ("verify", "construct", "decompose", "skew", "retract", "iso",
            "enumerate", "klein", "independence", "characterize")


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _kind(text: str) -> str:
    """``"nop"`` or ``"hg"``, decided by content rather than file extension."""
    toks = []
    for line in text.splitlines():
        toks.extend(line.split("#", 1)[0].split())
        if len(toks) >= 5:
            break
    if len(toks) >= 5 and toks[0] == "arity":
        if toks[4] == "values":
            return "nop"
        if toks[4] == "table":
            return "hg"
    raise ParseError("unrecognised file: expected an operation file or an HG data file")


def _load_op(path: str, args) -> NaryOp:
    text = _read(path)
    if _kind(text) == "hg":
        return hosszu.parse_hg(text).op
    return polyadic.parse_nop(text, budget=args.dense_budget)


def _load_group(path: str, args) -> NaryGroup:
    text = _read(path)
    if _kind(text) == "hg":
        return hosszu.construct(hosszu.parse_hg(text))
    return polyadic.certify(polyadic.parse_nop(text, budget=args.dense_budget), budget=args.check_budget)


def _load_hg(path: str) -> hosszu.HGAlgebra:
    text = _read(path)
    if _kind(text) != "hg":
        raise ParseError(f"{path} is not an HG data file")
    return hosszu.parse_hg(text)


def _mapping(values: Sequence[int]) -> str:
    return " ".join(f"{x}->{v}" for x, v in enumerate(values))


def _bit(flag: bool) -> int:
    return int(bool(flag))


def _ints(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _witness_text(w) -> str:
    if w is None:
        return "_"
    if isinstance(w, (tuple, list)):
        return "(" + " ".join(_witness_text(x) for x in w) + ")"
    return str(int(w))


def _print_verdict(v: polyadic.Verdict):
    print(f"verdict {'true' if v else 'false'}")
    if not v:
        print(f"reason {v.reason}")
        if v.witness is not None:
            print("witness " + " ".join(_witness_text(x) for x in v.witness))


# commands ------------------------------------------------------------------

def cmd_verify(args) -> int:
    op = _load_op(args.file, args)
    print(f"arity {op.arity} order {op.order} method {args.method}")
    try:
        v = polyadic.is_nary_group(op, args.method, i=args.i, j=args.j, budget=args.check_budget,
                                   audit=op.hg is not None, seed=args.seed)
    except MissingSkewMap as exc:
        v = polyadic.Verdict(False, str(exc))
    _print_verdict(v)
    if not v:
        return 1
    g = polyadic.certify(op, budget=args.check_budget)
    for name, val in polyadic.predicates(g).items():
        print(f"{name}={_bit(val)}")
    return 0


def cmd_construct(args) -> int:
    hg = _load_hg(args.hg)
    g = hosszu.construct(hg)
    print(f"certified arity {g.arity} order {g.order}")
    print(f"skew {_mapping(g.skew)}")
    if args.dense_out:
        text = polyadic.format_nop(g.op, budget=args.dense_budget)
        with open(args.dense_out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.dense_out}")
    return 0


def cmd_decompose(args) -> int:
    g = _load_group(args.file, args)
    if args.k_ary is None or args.k_ary == 2:
        sys.stdout.write(hosszu.format_hg(hosszu.decompose(g, args.at)))
        return 0
    khg = hosszu.decompose_k(g, args.k_ary, args.at)
    print(f"arity {khg.n}")
    print(f"retract_arity {khg.m}")
    print("phi " + " ".join(map(str, khg.phi)))
    print("bs " + " ".join(map(str, khg.bs)))
    print("retract")
    sys.stdout.write(polyadic.format_nop(khg.base.op, budget=args.dense_budget))
    return 0


def cmd_skew(args) -> int:
    g = _load_group(args.file, args)
    n, k = g.arity, g.order
    print(f"skew {_mapping(g.skew)}")
    print(f"hat {_mapping([polyadic.hat_of(g, x) for x in range(k)])}")
    ok = True
    for m in range(1, args.depth + 1):
        s = polyadic.skew_exponent(n, m)
        bad = [x for x in range(k) if polyadic.iterated_skew(g, x, m) != polyadic.nary_power(g, x, s)]
        print(f"iterated m={m} S={s} {'ok' if not bad else 'fail x=' + str(bad[0])}")
        ok = ok and not bad
    return 0 if ok else 1


def cmd_retract(args) -> int:
    g = _load_group(args.file, args)
    anchors = _ints(args.at)
    r = polyadic.retract(g, anchors, args.arity, budget=args.dense_budget)
    op = NaryOp(2, r.order, r.mul) if args.arity == 2 else r.op
    sys.stdout.write(polyadic.format_nop(op, budget=args.dense_budget))
    return 0


def cmd_iso(args) -> int:
    g1, g2 = _load_group(args.file1, args), _load_group(args.file2, args)
    w = iso.iso_retract(g1, g2)
    print(f"h: {_mapping(w.map)}" if w is not None else "none")
    if args.oracle:
        brute = iso.iso_bruteforce(g1, g2, seed=args.seed)
        agree = (brute is None) == (w is None)
        if w is not None:
            agree = agree and iso.is_homomorphism(w.map, g1, g2, budget=args.dense_budget, seed=args.seed)
        print(f"oracle {'agree' if agree else 'disagree'}")
        if not agree:
            return 1
    return 0 if w is not None else 1


def cmd_enumerate(args) -> int:
    report = classify.enumerate_classes(args.k, args.n, threads=args.threads)
    sys.stdout.write(report.render())
    if args.table_check:
        diff = classify.verify_against_table(report)
        sys.stdout.write(diff.render())
        return 1 if diff else 0
    return 0


def cmd_klein(args) -> int:
    report = classify.enumerate_classes(4, args.n, groups=[klein_group()])
    lines = report.render().splitlines()[:-1]
    for line in lines:
        print(line)
    print(f"classes {len(report.classes)} l={report.l}")
    return 0


def cmd_independence(args) -> int:
    hg = _load_hg(args.hg)
    v = terms.independent(hg, _ints(args.set), args.family, budget=args.term_budget)
    print(f"{args.family.upper()}-independent {'true' if v else 'false'}")
    if v.certificate is not None:
        print(f"certificate {v.certificate}")
    return 0 if v else 1


def cmd_characterize(args) -> int:
    op = _load_op(args.file, args).dense(args.dense_budget)
    group = polyadic.is_nary_group(op, "full", budget=args.check_budget)
    print(f"group={_bit(group)}")
    res = polyadic.check_characterizations(op, budget=args.check_budget)
    for name, val in res.items():
        print(f"{name}={_bit(val)}")
    consistent = all(res[key] == bool(group) for key in ("prop1", "units", "pattern", "tyutin"))
    if group:
        g = polyadic.certify(op, budget=args.check_budget)
        if g.arity % 2:
            print(f"form19={_bit(hosszu.form19_check(g, budget=args.dense_budget))}")
        else:
            print("form19=n/a")
        a = hosszu.k_exponential_check(g, args.kexp)
        print(f"k_exponential k={args.kexp} anchor={'none' if a is None else a}")
    print(f"consistent={_bit(consistent)}")
    return 0 if consistent else 1


# parser --------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--dense-budget", type=_positive, default=polyadic.DENSE_BUDGET)
    common.add_argument("--check-budget", type=_positive, default=polyadic.CHECK_BUDGET)
    common.add_argument("--term-budget", type=_positive, default=terms.TERM_BUDGET)

    p = argparse.ArgumentParser(prog="narygroups", description="Finite n-ary group toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="decide whether an operation is an n-ary group")
    s.add_argument("file")
    s.add_argument("--method", choices=("full", "sokolov", "dornte"), default="full")
    s.add_argument("--i", type=int, default=2)
    s.add_argument("--j", type=int, default=2)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", parents=[common], help="certify HG data and build the n-ary group")
    s.add_argument("--hg", required=True)
    s.add_argument("--dense-out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("decompose", parents=[common], help="HG data of an n-ary group at an anchor")
    s.add_argument("file")
    s.add_argument("--at", type=int, default=0)
    s.add_argument("--k-ary", type=int)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("skew", parents=[common], help="skew and hat maps, iterated skew check")
    s.add_argument("file")
    s.add_argument("--depth", type=_positive, default=3)
    s.set_defaults(func=cmd_skew)

    s = sub.add_parser("retract", parents=[common], help="retract table at the given anchors")
    s.add_argument("file")
    s.add_argument("--at", required=True)
    s.add_argument("--arity", type=int, required=True)
    s.set_defaults(func=cmd_retract)

    s = sub.add_parser("iso", parents=[common], help="isomorphism test")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("enumerate", parents=[common], help="classify n-ary groups on k elements")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--table-check", action="store_true")
    s.add_argument("--threads", type=_positive, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("klein", parents=[common], help="n-ary groups derived from the Klein four-group")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_klein)

    s = sub.add_parser("independence", parents=[common], help="M- or G-independence of a subset")
    s.add_argument("--hg", required=True)
    s.add_argument("--set", required=True)
    s.add_argument("--family", choices=("M", "G", "m", "g"), default="G")
    s.set_defaults(func=cmd_independence)

    s = sub.add_parser("characterize", parents=[common], help="alternative characterizations report")
    s.add_argument("file")
    s.add_argument("--kexp", type=_positive, default=1)
    s.set_defaults(func=cmd_characterize)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (NaryError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
