"""Command line: ``ecgcode gen|verify|pair|bench|report``.

Exit codes: 0 success, 1 domain failure (no convergence, failed
verification), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
import time

from . import codebook_io
from .candidates import ConstraintSpec
from .ecg import AlphabetError, run_pair
from .edit_model import ProfileError, build_profile, parse_eoi, parse_quotas
from .fec import format_tuples
from .generator import (GenerationConfig, GenerationError, NonConvergenceError, find_violation,
                        grow_codebook)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _add_generation_flags(p: argparse.ArgumentParser):
    p.add_argument("--size", "-m", type=int, required=True, help="number of codewords")
    p.add_argument("--eoi", default="sub,ins,del", help="edit ops, e.g. sub,ins,del or sub:A>G,del:T")
    p.add_argument("--eq", required=True, help="errors to correct per op (comma-separated)")
    p.add_argument("--raw-check", action="store_true",
                   help="use --eq directly as the pair-check quota")
    p.add_argument("--aug-len", type=int, default=2, help="bases appended per round (L2)")
    p.add_argument("--ctx-len", type=int, default=6, help="context bases seen by the constraints (L1)")
    p.add_argument("--run", type=int, default=3, help="longest homopolymer allowed")
    p.add_argument("--gc-bal", type=float, default=0.6, help="max G/C and A/T fraction per window")
    p.add_argument("--candidates", type=int, default=32, help="suffixes sampled per selection")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-steps", type=int, default=64)
    p.add_argument("--min-extra-steps", type=int, default=0)
    p.add_argument("--verbose", "-v", action="store_true", help="progress lines on stderr")


def _config(args, parser, aug_len=None) -> GenerationConfig:
    try:
        eoi = parse_eoi(args.eoi)
        eq = parse_quotas(args.eq)
        if len(eoi) != len(eq):
            raise ProfileError(f"--eoi has {len(eoi)} ops but --eq has {len(eq)} values")
        spec = ConstraintSpec(args.run, args.gc_bal, args.ctx_len,
                              args.aug_len if aug_len is None else aug_len)
        return GenerationConfig(args.size, eoi, eq, raw_check=args.raw_check, constraint=spec,
                                candidates_per_step=args.candidates, seed=args.seed,
                                max_steps=args.max_steps, min_extra_steps=args.min_extra_steps)
    except ValueError as exc:
        parser.error(str(exc))


def _progress(step, total, elapsed):
    print(f"step={step} loss={total} elapsed={elapsed:.3f}", file=sys.stderr, flush=True)


def cmd_gen(args, parser) -> int:
    config = _config(args, parser)
    try:
        book = grow_codebook(config, _progress if args.verbose else None)
    except NonConvergenceError as exc:
        print(f"error: no convergence: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    codebook_io.save(book, args.out, record_time=args.record_time)
    print(f"m={book.m} n={book.n} redundancy={book.redundancy():.4f} steps={book.steps} -> {args.out}")
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    try:
        book = codebook_io.load(args.path)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except codebook_io.CodebookFileError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_FAIL
    hit = find_violation(book.sequences, book.profile)
    if hit is not None:
        i, j, value = hit
        print(f"FAIL pair ({i}, {j}): {book.sequences[i]} -> {book.sequences[j]} loss={value}")
        return EXIT_FAIL
    print(f"OK m={book.m} n={book.n} check eq={','.join(map(str, book.profile.eq))}")
    return EXIT_OK


def cmd_pair(args, parser) -> int:
    try:
        profile = build_profile(args.eoi, args.eq)
        state = run_pair(args.s1.upper(), args.s2.upper(), profile)
    except (ProfileError, AlphabetError, ValueError) as exc:
        parser.error(str(exc))
    print(f"fecs {format_tuples(state.terminal_fecs())}")
    print(f"loss {state.loss()} (L={profile.L})")
    print(f"visits {state.visits}")
    return EXIT_OK


def cmd_bench(args, parser) -> int:
    try:
        sweep = [int(v) for v in args.aug_lens.split(",")]
        if not sweep or any(v < 1 for v in sweep):
            raise ValueError
    except ValueError:
        parser.error(f"--aug-lens must be comma-separated positive integers, got {args.aug_lens!r}")
    os.environ["ECG_THREADS"] = "1"
    configs = [_config(args, parser, aug_len=v) for v in sweep]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["aug_len", "seconds", "n", "redundancy"])
    status = EXIT_OK
    for aug, config in zip(sweep, configs):
        start = time.perf_counter()
        try:
            book = grow_codebook(config, _progress if args.verbose else None)
            row = [aug, f"{time.perf_counter() - start:.3f}", book.n, f"{book.redundancy():.4f}"]
        except GenerationError as exc:
            print(f"aug_len={aug}: {exc}", file=sys.stderr)
            row = [aug, f"{time.perf_counter() - start:.3f}", "", ""]
            status = EXIT_FAIL
        writer.writerow(row)
        sys.stdout.flush()
    return status


def cmd_report(args, parser) -> int:
    rows = []
    for path in args.paths:
        try:
            book = codebook_io.load(path)
        except (OSError, codebook_io.CodebookFileError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            return EXIT_FAIL
        if book.n < 1:
            print(f"error: {path}: empty words have no baseline", file=sys.stderr)
            return EXIT_FAIL
        rows.append(codebook_io.report_row(book))
    codebook_io.write_report(rows, sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ecgcode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="grow a codebook")
    _add_generation_flags(p)
    p.add_argument("--out", "-o", required=True)
    p.add_argument("--record-time", action="store_true", help="store wall time in the file")
    p.set_defaults(func=cmd_gen, parser=p)

    p = sub.add_parser("verify", help="check every pair of a codebook file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify, parser=p)

    p = sub.add_parser("pair", help="feasible edit counts for one pair")
    p.add_argument("s1")
    p.add_argument("s2")
    p.add_argument("--eoi", default="sub,ins,del")
    p.add_argument("--eq", required=True, help="quotas used as-is")
    p.set_defaults(func=cmd_pair, parser=p)

    p = sub.add_parser("bench", help="time generation over several augment lengths")
    _add_generation_flags(p)
    p.add_argument("--aug-lens", default="2,3,4,5,8")
    p.set_defaults(func=cmd_bench, parser=p)

    p = sub.add_parser("report", help="redundancy vs. baseline CSV for codebook files")
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_report, parser=p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, args.parser)


if __name__ == "__main__":
    sys.exit(main())
