"""Command-line interface.

    linedigraph gen debruijn --d 2 --k 3
    linedigraph gen random --n 20 --d 4 --seed 7 > g.el
    linedigraph factorize g.el
    linedigraph line g.el --canonical
    linedigraph verify theorem --n 20 --d 4 --seed 7
    linedigraph export g.el --format dot

Data goes to stdout, diagnostics to stderr.  Exit status is 0 on success, 1 on
a domain error or a failed verification, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from . import formats
from .digraph import Digraph, DigraphError
from .factorization import NoPerfectMatching, dicycle_factorization, random_regular_digraph
from .line import (
    VerificationReport,
    canonical_line_digraph,
    iterated_line_digraph,
    lemma2_isomorphism,
    spiked_dicycle,
    verify_growth_decomposition,
    verify_theorem,
)
from .topologies import (
    complete_digraph_with_loops,
    de_bruijn,
    fya_relabeling,
    remark_reports,
    word_string,
)


class CommandError(Exception):
    """A domain error to report with exit status 1."""


def _read_input(path: str, input_format: str | None) -> Digraph:
    fmt = input_format or ("edgelist" if path == "-" else formats.detect_format(path))
    if fmt == "dot":
        raise CommandError(f"{path}: DOT files cannot be read, only written")
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="ascii") as fh:
                text = fh.read()
    except OSError as e:
        raise CommandError(f"{path}: {e.strerror or e}") from None
    except UnicodeDecodeError:
        raise CommandError(f"{path}: not an ASCII text file") from None
    try:
        return formats.read_digraph(text, fmt)
    except DigraphError as e:
        raise CommandError(f"{path}: {e}") from None


def _cmd_gen(args, out) -> int:
    labels = None
    if args.family == "debruijn":
        d, words = de_bruijn(args.d, args.k)
        labels = [word_string(w, args.d) for w in words]
    elif args.family == "kplus":
        d = complete_digraph_with_loops(args.d)
    elif args.family == "spiked":
        d = spiked_dicycle(args.n, args.spikes)
    else:
        d = random_regular_digraph(args.n, args.d, args.seed)
    out.write(formats.write_adjacency(d, args.format, labels if args.format == "dot" else None))
    return 0


def _cmd_factorize(args, out) -> int:
    d = _read_input(args.file, args.input_format)
    out.write(formats.write_factorization(dicycle_factorization(d)))
    return 0


def _cmd_line(args, out) -> int:
    d = _read_input(args.file, args.input_format)
    if args.iterate < 0:
        raise CommandError("--iterate must be nonnegative")
    if args.canonical:
        for _ in range(args.iterate):
            d = canonical_line_digraph(d)
    else:
        d = iterated_line_digraph(d, args.iterate).digraph
    out.write(formats.write_adjacency(d, args.format))
    return 0


def _cmd_export(args, out) -> int:
    d = _read_input(args.file, args.input_format)
    out.write(formats.write_adjacency(d, args.format))
    return 0


def _instances(args) -> list[tuple[str, Digraph]]:
    if args.file is not None:
        return [(args.file, _read_input(args.file, args.input_format))]
    if args.n is None or args.d is None:
        raise CommandError("give either FILE or both --n and --d")
    seeds = range(args.seed, args.seed + args.count)
    return [
        (f"n={args.n} d={args.d} seed={s}", random_regular_digraph(args.n, args.d, s))
        for s in seeds
    ]


def _verify_reports(args) -> list[VerificationReport]:
    claim = args.claim
    if claim in ("theorem", "decomposition"):
        check = verify_theorem if claim == "theorem" else verify_growth_decomposition
        return [check(d) for _, d in _instances(args)]
    if claim == "lemma2":
        ns = [args.n] if args.n is not None else range(1, 9)
        ss = [args.spikes] if args.spikes is not None else range(0, 5)
        return [lemma2_isomorphism(n, s)[1] for n in ns for s in ss]
    if claim == "fya":
        if args.d is None or args.k is None:
            raise CommandError("verify fya needs --d and --k")
        return [fya_relabeling(args.d, args.k)[1]]
    # remark
    ds = [args.d] if args.d is not None else range(1, 7)
    return [r for d in ds for r in remark_reports(d)]


def _cmd_verify(args, out) -> int:
    reports = _verify_reports(args)
    ok = True
    for r in reports:
        if args.verbose:
            out.write(r.to_text() + "\n")
        out.write(r.summary_line() + "\n")
        ok = ok and r.equal
    return 0 if ok else 1


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--input-format",
        choices=["edgelist", "mm"],
        help="override detection by file extension (.mm is Matrix Market, anything else an edge list)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linedigraph",
        description="Line digraphs of regular digraphs, dicycle factorizations and their verification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    gen = sub.add_parser("gen", help="generate a digraph")
    gen_sub = gen.add_subparsers(dest="family", required=True, metavar="FAMILY")
    g = gen_sub.add_parser("debruijn", help="de Bruijn digraph B(d, k)")
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g = gen_sub.add_parser("kplus", help="complete digraph with loops K_d^+")
    g.add_argument("--d", type=int, required=True)
    g = gen_sub.add_parser("spiked", help="spiked dicycle")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--spikes", type=int, required=True)
    g = gen_sub.add_parser("random", help="seeded random d-regular digraph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    for p in gen_sub.choices.values():
        p.add_argument("--format", choices=["edgelist", "dot", "mm"], default="edgelist")
        p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("factorize", help="dicycle factorization of a regular digraph")
    p.add_argument("file", metavar="FILE", help="input digraph ('-' for stdin)")
    _add_input_options(p)
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("line", help="(iterated) line digraph")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--iterate", type=int, default=1, metavar="K")
    p.add_argument(
        "--canonical",
        action="store_true",
        help="name vertices j*n+v for arc (u, v) in factor j (regular input only)",
    )
    p.add_argument("--format", choices=["edgelist", "dot", "mm"], default="edgelist")
    _add_input_options(p)
    p.set_defaults(func=_cmd_line)

    p = sub.add_parser("verify", help="run a verification and print CLAIM lines")
    p.add_argument("claim", choices=["theorem", "lemma2", "decomposition", "fya", "remark"])
    p.add_argument("file", metavar="FILE", nargs="?", help="input digraph for theorem/decomposition")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--spikes", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1, help="number of consecutive seeds")
    p.add_argument("-v", "--verbose", action="store_true", help="print a report block per claim")
    _add_input_options(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="convert a digraph to another format")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--format", choices=["edgelist", "dot", "mm"], required=True)
    _add_input_options(p)
    p.set_defaults(func=_cmd_export)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        return args.func(args, out)
    except (CommandError, DigraphError, NoPerfectMatching) as e:
        err.write(f"linedigraph: error: {e}\n")
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
