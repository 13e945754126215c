"""Command-line interface.

Exit codes: 0 success, 1 realizer rejected, 2 unreadable input or bad
arguments, 3 unsupported poset class, 4 a constructed realizer failed its own
check, 5 extension cap exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys

from .classify import classify
from .errors import CapExceeded, InvalidModel, ParseError, UnsupportedClass
from .fileio import (
    format_poset,
    format_realizer,
    format_realizer_json,
    parse_poset,
    parse_realizer,
    to_dot,
)
from .graft import realize_any
from .oracle import DEFAULT_CAP, DEFAULT_K_MAX, KINDS, RandomModel, brute_dimension, sample
from .poset import find_violation

EXIT_OK, EXIT_REJECTED, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_INTERNAL, EXIT_CAP = range(6)
SEED_ENV = "POSETDIM_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _describe(violation) -> str:
    if violation[0] == "not_permutation":
        return f"word {violation[1] + 1} is not a permutation of the elements"
    if violation[0] == "order":
        _, k, a, b = violation
        return f"word {k + 1} puts {b} before {a} although {a} < {b}"
    _, a, b = violation
    return f"{a} precedes {b} in every word although they are incomparable"


def cmd_classify(args) -> int:
    cls = classify(parse_poset(_read(args.file)))
    out = sys.stdout
    if cls.connected:
        out.write(f"connected {cls.kinds[0]}\n")
        return EXIT_OK
    out.write(f"disconnected {len(cls.components)} components\n")
    for k, (comp, kind) in enumerate(zip(cls.components, cls.kinds), start=1):
        out.write(f"component {k} {kind}: {' '.join(comp)}\n")
    return EXIT_OK


def cmd_realize(args) -> int:
    p = parse_poset(_read(args.file))
    try:
        words = realize_any(p)
    except UnsupportedClass as exc:
        return _fail(EXIT_UNSUPPORTED, str(exc))
    violation = find_violation(p, words)
    if violation is not None:
        return _fail(EXIT_INTERNAL, "constructed words do not realize the poset: " + _describe(violation))
    if args.format == "machine":
        sys.stdout.write(format_realizer_json(p, words, True))
    else:
        sys.stdout.write(format_realizer(words))
    return EXIT_OK


def cmd_verify(args) -> int:
    p = parse_poset(_read(args.poset))
    words = parse_realizer(_read(args.realizer))
    if sorted(words[0]) != sorted(p.labels):
        raise ParseError("realizer elements do not match the poset elements")
    violation = find_violation(p, words)
    if violation is None:
        sys.stdout.write("ok\n")
        return EXIT_OK
    sys.stdout.write("not a realizer: " + _describe(violation) + "\n")
    return EXIT_REJECTED


def cmd_dim(args) -> int:
    p = parse_poset(_read(args.file))
    try:
        res = brute_dimension(p, args.max_k, args.cap)
    except CapExceeded:
        sys.stdout.write("cap exceeded\n")
        return EXIT_CAP
    if res.exceeded:
        sys.stdout.write(f"exceeds {args.max_k}\n")
        return EXIT_OK
    sys.stdout.write(f"{res.value}\n")
    sys.stdout.write(format_realizer(res.witness))
    return EXIT_OK


def cmd_gen(args) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV, "0")
        try:
            seed = int(env, 0)
        except ValueError:
            return _fail(EXIT_PARSE, f"{SEED_ENV}={env!r} is not an integer")
    try:
        model = RandomModel(args.kind, args.n, args.c, seed)
        p = sample(model)
    except InvalidModel as exc:
        return _fail(EXIT_PARSE, str(exc))
    sys.stdout.write(format_poset(p))
    return EXIT_OK


def cmd_dot(args) -> int:
    sys.stdout.write(to_dot(parse_poset(_read(args.file))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="posetdim", description="Three-word realizers for tree and unicycle posets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", help="report connectivity and the class of each component")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("realize", help="print a three-word realizer")
    s.add_argument("file")
    s.add_argument("--format", choices=("text", "machine"), default="text")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("verify", help="check that a realizer file realizes a poset file")
    s.add_argument("poset")
    s.add_argument("realizer")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("dim", help="exact dimension of a small poset")
    s.add_argument("file")
    s.add_argument("--max-k", type=int, default=DEFAULT_K_MAX)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("gen", help="print a random poset")
    s.add_argument("--kind", choices=KINDS, required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--c", type=float, default=1.0)
    s.add_argument("--seed", type=lambda v: int(v, 0))
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("dot", help="print the Hasse diagram in DOT")
    s.add_argument("file")
    s.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(EXIT_PARSE, str(exc))
    except OSError as exc:
        return _fail(EXIT_PARSE, str(exc))


def entry() -> None:
    sys.exit(main())
