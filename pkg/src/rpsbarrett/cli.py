"""Command-line entry point: ``rpsbarrett <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from .barrett import (
    ba_mpm_detail,
    build_barrett_context,
    dense_barrett_mpm,
    make_params,
)
from .cosets import build_mersenne_system
from .counter import OpCounter
from .errors import ConditionViolated, RpsError, ValidationError
from .exponent import ba_mpe, dense_mpe
from .poly import Gf2Poly, from_hex
from .rps import RpsContext, crt_reconstruct, decode_partial, read_moduli, write_moduli

EXIT_OK, EXIT_OTHER, EXIT_VALIDATION, EXIT_MISMATCH = 0, 1, 2, 3


def _poly(text):
    try:
        return Gf2Poly(from_hex(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a hex polynomial: {text!r}") from exc


def _exponent(text):
    try:
        e = int(text, 16) if text.lower().startswith("0x") else int(text, 10)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an exponent: {text!r}") from exc
    if e < 0:
        raise argparse.ArgumentTypeError("exponent must be nonnegative")
    return e


def _out(line=""):
    sys.stdout.write(line + "\n")


def cmd_gen_moduli(args):
    sysm = build_mersenne_system(args.p)
    rps = sysm.rps
    header = [
        f"N = {sysm.N}, G = H = u^{sysm.N} + 1",
        f"G moduli: indices 0..{len(sysm.g_indices) - 1}",
    ]
    write_moduli(args.out, rps.moduli, header)
    gd, od = sysm.g_degrees, sysm.other_degrees
    _out("N\tn\tL\tg_moduli\tg_max_degree\tother_moduli\tother_max_degree")
    _out(f"{sysm.N}\t{rps.n}\t{rps.L}\t{len(gd)}\t{max(gd)}\t{len(od)}\t{max(od)}")
    return EXIT_OK


def _context(args):
    if args.moduli:
        rps = RpsContext(read_moduli(args.moduli))
        return build_barrett_context(args.modulus, args.g, args.h, rps)
    return build_barrett_context(args.modulus, args.g, args.h)


def _print_counter(counter):
    _out()
    _out(counter.format_table())


def cmd_mpm(args):
    if args.dense:
        c, q = dense_barrett_mpm(args.a, args.b, make_params(args.modulus, args.g, args.h))
        _out(f"C\t{c.to_hex()}")
        _out(f"Q\t{q.to_hex()}")
        return EXIT_OK
    bctx = _context(args)
    counter = OpCounter()
    res = ba_mpm_detail(bctx.encode(args.a), bctx.encode(args.b), bctx, counter,
                        args.parallel, args.swapped)
    # deg Q <= N - 2 < L - beta, so the known channels always suffice
    _out(f"C\t{crt_reconstruct(res.c, bctx.rps).to_hex()}")
    _out(f"Q\t{decode_partial(res.q, bctx.rps).to_hex()}")
    _print_counter(counter)
    return EXIT_OK


def cmd_mpe(args):
    if args.dense:
        c = dense_mpe(args.a, args.e, make_params(args.modulus, args.g, args.h))
        _out(f"C\t{c.to_hex()}")
        return EXIT_OK
    bctx = _context(args)
    counter = OpCounter()
    c = ba_mpe(bctx.encode(args.a), args.e, bctx, counter, args.parallel, args.swapped)
    _out(f"C\t{crt_reconstruct(c, bctx.rps).to_hex()}")
    _out(f"mpm_calls\t{counter.mpm_calls}")
    _print_counter(counter)
    return EXIT_OK


def cmd_verify(args):
    from .verify import run_verify

    results = run_verify(args.trials, args.max_degree, args.seed)
    bad = False
    _out("suite\ttrials\tmismatches")
    for r in results:
        _out(f"{r.name}\t{r.trials}\t{r.failures}")
    for r in results:
        if r.ok:
            continue
        bad = True
        for m in r.mismatches:
            fields = " ".join(f"{k}={v}" for k, v in m.items())
            _out(f"MISMATCH suite={r.name} seed={args.seed} {fields}")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_bench(args):
    from .report import format_table, write_bench_report

    cfg = bench_mod.load_config(args.config) if args.config else dict(bench_mod.DEFAULTS)
    rows = bench_mod.run_bench(cfg)
    _out(format_table(rows, bench_mod.COLUMNS))
    _out()
    _out("# bex_schedule = (n - a/2 - 1/2) a + (n - a) counts every evaluation;")
    _out("# bex_reference = (n - a/2 - 1) a + (n - a) is short by a/2, see bex_delta_reference")
    if args.out_dir:
        for path in write_bench_report(rows, bench_mod.COLUMNS, args.out_dir):
            _out(f"wrote\t{path}")
    return EXIT_OK


def _add_arith_flags(sp):
    sp.add_argument("--modulus", type=_poly, required=True, help="P as hex")
    sp.add_argument("--g", type=_poly, required=True, help="G as hex")
    sp.add_argument("--h", type=_poly, required=True, help="H as hex")
    sp.add_argument("--moduli", help="moduli file; assembled from G, H when omitted")
    sp.add_argument("--a", type=_poly, required=True, help="A as hex, deg A < N")
    sp.add_argument("--swapped", action="store_true", help="extend C instead of Q")
    sp.add_argument("--dense", action="store_true", help="run the dense reference instead")
    sp.add_argument("--parallel", action="store_true", help="vectorized channel path")


def build_parser():
    ap = argparse.ArgumentParser(prog="rpsbarrett",
                                 description="Barrett modular multiplication in residue form over GF(2)")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen-moduli", help="coset moduli for N = 2^p - 1")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_gen_moduli)

    sp = sub.add_parser("mpm", help="C = A*B mod P")
    _add_arith_flags(sp)
    sp.add_argument("--b", type=_poly, required=True, help="B as hex, deg B < N")
    sp.set_defaults(func=cmd_mpm)

    sp = sub.add_parser("mpe", help="C = A^e mod P")
    _add_arith_flags(sp)
    sp.add_argument("--e", type=_exponent, required=True, help="decimal or 0x-hex")
    sp.set_defaults(func=cmd_mpe)

    sp = sub.add_parser("verify", help="randomized checks against the naive oracles")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--max-degree", type=int, default=32)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="timing and operation counts")
    sp.add_argument("--config", help="key=value file (p, trials, swapped, parallel, seed)")
    sp.add_argument("--out-dir", help="write bench.tsv and PNG figures here")
    sp.set_defaults(func=cmd_bench)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VALIDATION if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ConditionViolated as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    except (ValidationError, RpsError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_OTHER


if __name__ == "__main__":
    sys.exit(main())
