#!/usr/bin/env python3
"""
yhkernel - command-line front end.
Parses framed braid words and p-adic framings, evaluates them in
Yokonuma-Hecke algebras, computes classical and p-adic Markov traces, and runs
the relation and property suites.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from src.config.config import (
    APP_DESCRIPTION,
    APP_NAME,
    APP_VERSION,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_PARAMETER_ERROR,
    EXIT_PARSE_ERROR,
    MIN_MODULUS,
    MIN_STRANDS,
    OUTPUT_FORMATS,
)
from src.core.checks import run_checks
from src.core.errors import KernelError, ParameterError, ParseError
from src.core.framed_braids import padic_split, parse_word, split
from src.core.padic import parse_padic
from src.core.trace import markov_trace, padic_trace, tower_from_word
from src.core.yokonuma import YParams, y_eval_word
from src.utils.exporter import ResultExporter, write_output
from src.utils.logger import get_logger, set_verbose

logger = get_logger('cli')


def _validate_params(args, need_algebra: bool = True):
    """Exactly one of --d or (--p, --R); n >= 1."""
    if args.n < MIN_STRANDS:
        raise ParameterError(f"--n must be >= {MIN_STRANDS}, got {args.n}")
    if not need_algebra:
        return
    if args.d is not None and args.p is not None:
        raise ParameterError("Give either --d or --p/--R, not both")
    if args.d is None and args.p is None:
        raise ParameterError("Give --d, or --p together with --R")
    if args.d is not None and args.d < MIN_MODULUS:
        raise ParameterError(f"--d must be >= {MIN_MODULUS}, got {args.d}")
    if args.p is not None and args.R is None:
        raise ParameterError("--p needs --R")


def _read_words(args) -> List[str]:
    """Positional word, else --file (one word per line), else stdin."""
    if args.word is not None:
        return [args.word]
    if args.file is not None:
        lines = Path(args.file).read_text(encoding="utf-8").splitlines()
        return [line.strip() for line in lines if line.strip() and not line.lstrip().startswith('#')]
    return [sys.stdin.read().strip()]


def cmd_trace(args) -> int:
    """Classical trace with --d, p-adic trace with --p/--R."""
    _validate_params(args)
    exporter = ResultExporter(args.format)
    words = _read_words(args)
    payloads, lines = [], []
    for text in words:
        word = parse_word(text, args.n)
        if args.d is not None:
            value = markov_trace(y_eval_word(word, YParams(args.d, args.n)))
            payloads.append(exporter.trace_payload(value))
            lines.append(exporter.trace(value))
        else:
            value = padic_trace(tower_from_word(word, args.p, args.R))
            payloads.append(exporter.padic_trace_payload(value))
            lines.append(exporter.padic_trace(value))
        logger.debug(f"traced {text!r}")
    if args.file is None:
        write_output(lines[0], args.output)
    else:
        write_output(exporter.batch(words, payloads, lines), args.output)
    return EXIT_OK


def cmd_eval(args) -> int:
    """Canonical normal form of a word in Y_{d,n}(u), or at every level of a tower."""
    _validate_params(args)
    exporter = ResultExporter(args.format)
    outputs = []
    for text in _read_words(args):
        word = parse_word(text, args.n)
        if args.d is not None:
            outputs.append(exporter.element(y_eval_word(word, YParams(args.d, args.n))))
        else:
            outputs.append(exporter.tower(tower_from_word(word, args.p, args.R)))
    write_output("\n".join(outputs), args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    """Run the suites; exit code 1 if any check fails."""
    _validate_params(args)
    if args.samples < 1:
        raise ParameterError(f"--samples must be >= 1, got {args.samples}")
    reports = run_checks(
        n=args.n, d=args.d, p=args.p, R=args.R,
        square=args.square, samples=args.samples, seed=args.seed,
    )
    write_output(ResultExporter(args.format).reports(reports), args.output)
    return EXIT_OK if all(report.all_passed for report in reports) else EXIT_CHECK_FAILED


def cmd_padic(args) -> int:
    """Inspect a p-adic value given as p^R:d0,d1,..."""
    value = parse_padic(args.value)
    write_output(ResultExporter(args.format).padic(value), args.output)
    return EXIT_OK


def cmd_split(args) -> int:
    """Split form t^a . beta of a framed braid word (p-adic with --p/--R)."""
    _validate_params(args, need_algebra=False)
    exporter = ResultExporter(args.format)
    outputs = []
    for text in _read_words(args):
        word = parse_word(text, args.n)
        if args.p is not None:
            if args.R is None:
                raise ParameterError("--p needs --R")
            outputs.append(exporter.padic_split(padic_split(word, args.p, args.R)))
        else:
            outputs.append(exporter.split(split(word, args.d)))
    write_output("\n".join(outputs), args.output)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument('--format', choices=OUTPUT_FORMATS, default=DEFAULT_OUTPUT_FORMAT,
                        help='Output format')
    parser.add_argument('--output', type=Path, help='Write results to this file instead of stdout')
    parser.add_argument('-v', '--verbose', action='store_true', help='Debug logging on stderr')


def _add_algebra(parser: argparse.ArgumentParser, word: bool = True):
    parser.add_argument('--n', type=int, required=True, help='Number of strands')
    parser.add_argument('--d', type=int, help='Framing modulus d')
    parser.add_argument('--p', type=int, help='Prime p for p-adic towers')
    parser.add_argument('--R', '--r', dest='R', type=int, help='Depth (number of levels p^1..p^R)')
    if word:
        parser.add_argument('word', nargs='?', help='Framed braid word, e.g. "f1^2 s1 s2^-1"; stdin if omitted')
        parser.add_argument('--file', help='Batch input: one word per line')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description=APP_DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  yhkernel trace --d 2 --n 2 "s1"
  yhkernel trace --p 2 --R 2 --n 1 "f1^{2^2:1,1}"
  yhkernel eval --d 1 --n 2 "s1 s1"
  yhkernel check --d 2 --n 3
  yhkernel check --p 2 --R 2 --n 2 --square
  yhkernel padic "3^3:1,1,1"
  yhkernel split --n 3 "s1 f1^2 s2"
        """
    )
    parser.add_argument('--version', action='version', version=f"{APP_NAME} {APP_VERSION}")

    subparsers = parser.add_subparsers(dest='command', help='Command to run')

    # Trace command
    trace_parser = subparsers.add_parser('trace', help='Markov trace (classical or p-adic)')
    _add_algebra(trace_parser)
    _add_common(trace_parser)
    trace_parser.set_defaults(func=cmd_trace)

    # Eval command
    eval_parser = subparsers.add_parser('eval', help='Normal form in Y_{d,n}(u)')
    _add_algebra(eval_parser)
    _add_common(eval_parser)
    eval_parser.set_defaults(func=cmd_eval)

    # Check command
    check_parser = subparsers.add_parser('check', help='Run relation and property suites')
    _add_algebra(check_parser, word=False)
    check_parser.add_argument('--square', action='store_true',
                              help='Also check the commuting square delta o tr = tr o phi')
    check_parser.add_argument('--samples', type=int, default=DEFAULT_SAMPLES,
                              help='Random cases per property')
    check_parser.add_argument('--seed', type=int, default=DEFAULT_SEED, help='Random seed')
    _add_common(check_parser)
    check_parser.set_defaults(func=cmd_check)

    # Padic command
    padic_parser = subparsers.add_parser('padic', help='Inspect a p-adic value')
    padic_parser.add_argument('value', help='p-adic value as p^R:d0,d1,...')
    _add_common(padic_parser)
    padic_parser.set_defaults(func=cmd_padic)

    # Split command
    split_parser = subparsers.add_parser('split', help='Split form of a framed braid word')
    _add_algebra(split_parser)
    _add_common(split_parser)
    split_parser.set_defaults(func=cmd_split)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_OK

    set_verbose(args.verbose)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except KernelError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAMETER_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAMETER_ERROR


if __name__ == "__main__":
    sys.exit(main())
