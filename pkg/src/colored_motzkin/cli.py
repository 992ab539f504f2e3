"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 invalid input word, 3 verification failure.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .bijection import phi, phi_inv, phi_inv_trace, phi_trace
from .core import (
    InvalidWordError,
    PathClass,
    classify,
    format_path,
    format_word,
    level_steps,
    odd_columns,
    parse_path,
    parse_word,
    require_motzkin,
    require_yamanouchi,
)
from .enumeration import LevelPolicy, count_motzkin_dp, count_syt_dp, gen_motzkin, gen_syt
from .formulas import syt_count_formula
from .render import render_path, render_tableau
from .verify import SUITES, make_grid, run

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cmotzkin", description="Colored Motzkin paths and standard Young tableaux.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write output to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("map", parents=[common], help="path -> Yamanouchi word")
    m.add_argument("--d", type=_nonneg, required=True)
    m.add_argument("--path", required=True, help='tokens such as "U1 L D1"')
    m.add_argument("--trace", action="store_true", help="print one line per iteration first")

    u = sub.add_parser("unmap", parents=[common], help="Yamanouchi word -> path")
    u.add_argument("--d", type=_nonneg, required=True)
    u.add_argument("--word", required=True, help='letters such as "1 1 2" or "112"')
    u.add_argument("--trace", action="store_true")

    e = sub.add_parser("enumerate", parents=[common], help="list every object of a family")
    e.add_argument("family", choices=["motzkin", "syt"])
    e.add_argument("--n", type=_nonneg, required=True)
    e.add_argument("--d", type=_nonneg, required=True,
                   help="color bound for paths, row bound for tableaux")
    e.add_argument("--class", dest="cls", choices=[c.value for c in PathClass])

    c = sub.add_parser("count", parents=[common], help="count a family")
    c.add_argument("family", choices=["motzkin", "syt"])
    c.add_argument("--n", type=_nonneg, required=True)
    c.add_argument("--d", type=_nonneg, required=True)
    c.add_argument("--method", choices=["dp", "enumerate", "formula"], default="dp")
    c.add_argument("--level-policy", choices=[lp.value for lp in LevelPolicy],
                   default=LevelPolicy.ANYWHERE.value)

    v = sub.add_parser("verify", parents=[common], help="exhaustively certify the bijection")
    v.add_argument("--n-max", type=_nonneg)
    v.add_argument("--d-max", type=_nonneg)
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--format", choices=["table", "records"], default="table")

    r = sub.add_parser("render", parents=[common], help="ASCII drawing of a path or tableau")
    r.add_argument("kind", choices=["path", "tableau"])
    r.add_argument("word")

    s = sub.add_parser("stats", parents=[common], help="level steps of a path and odd columns of its image")
    s.add_argument("--d", type=_nonneg, required=True)
    s.add_argument("--path", required=True)
    return p


def _filter_class(paths, d, cls):
    if cls is None:
        return paths
    if d < 1:
        raise UsageError("--class needs --d >= 1")
    want = PathClass(cls)
    return (p for p in paths if classify(p, d) is want)


def _count(args) -> int:
    n, d = args.n, args.d
    policy = LevelPolicy(args.level_policy)
    floor = policy is LevelPolicy.FLOOR_ONLY
    if args.family == "syt":
        if floor:
            raise UsageError("--level-policy applies to motzkin counts only")
        if args.method == "dp":
            return count_syt_dp(n, d)
        if args.method == "enumerate":
            return sum(1 for _ in gen_syt(n, d))
        if d not in (2, 3, 4, 5):
            raise UsageError(f"no closed formula for {d} rows (supported: 2, 3, 4, 5)")
        return syt_count_formula(n, d)
    if args.method == "dp":
        return count_motzkin_dp(n, d, policy)
    if args.method == "enumerate":
        paths = gen_motzkin(n, d)
        if floor:
            if d < 1:
                return int(n == 0)
            return sum(1 for p in paths if classify(p, d) is not PathClass.BAR)
        return sum(1 for _ in paths)
    rows = 2 * d if floor else 2 * d + 1
    if rows not in (2, 3, 4, 5):
        raise UsageError(f"no closed formula for d={d} with this level policy")
    return syt_count_formula(n, rows)


def _lines(items) -> str:
    return "".join(f"{x}\n" for x in items)


def _dispatch(args) -> tuple[str, int]:
    cmd = args.command
    if cmd == "map":
        path = parse_path(args.path)
        require_motzkin(path, args.d)
        if args.trace:
            t = phi_trace(path, args.d)
            return t.to_text() + "\n" + format_word(t.output), EXIT_OK
        return format_word(phi(path, args.d)), EXIT_OK
    if cmd == "unmap":
        word = parse_word(args.word)
        if args.trace:
            t = phi_inv_trace(word, args.d)
            return t.to_text() + "\n" + format_path(t.output), EXIT_OK
        return format_path(phi_inv(word, args.d)), EXIT_OK
    if cmd == "enumerate":
        if args.family == "motzkin":
            items = _filter_class(gen_motzkin(args.n, args.d), args.d, args.cls)
            return _lines(format_path(p) for p in items), EXIT_OK
        if args.cls is not None:
            raise UsageError("--class applies to motzkin enumeration only")
        return _lines(format_word(w) for w in gen_syt(args.n, args.d)), EXIT_OK
    if cmd == "count":
        return str(_count(args)), EXIT_OK
    if cmd == "verify":
        if (args.n_max is None) != (args.d_max is None):
            raise UsageError("give both --n-max and --d-max, or neither")
        suites = SUITES if args.suite == "all" else [args.suite]
        report = run(make_grid(args.n_max, args.d_max), suites)
        text = report.to_table() if args.format == "table" else report.to_records()
        return text, EXIT_OK if report.passed else EXIT_VERIFY
    if cmd == "render":
        if args.kind == "path":
            return render_path(parse_path(args.word)), EXIT_OK
        word = parse_word(args.word)
        require_yamanouchi(word, max(word, default=1))
        return render_tableau(word), EXIT_OK
    if cmd == "stats":
        path = parse_path(args.path)
        require_motzkin(path, args.d)
        w = phi(path, args.d)
        return f"level_steps={level_steps(path)} odd_columns={odd_columns(w)}", EXIT_OK
    raise UsageError(f"unknown command {cmd}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = _dispatch(args)
    except UsageError as e:
        print(f"cmotzkin: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidWordError as e:
        print(f"cmotzkin: invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    if args.command != "enumerate":
        text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
