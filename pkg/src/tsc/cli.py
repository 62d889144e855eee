"""Command-line interface: compress | reconstruct | diagram | bench.

Exit codes: 0 success, 2 usage error (argparse convention), 1 data error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from .baselines import (
    decode_dft_wire,
    dft_compress,
    dft_reconstruct,
    dft_wire_cost,
    encode_dft_wire,
    paa_compress,
    paa_reconstruct,
    random_compress,
)
from .errors import TscError
from .io import read_signal, write_csv, write_wav
from .metrics import compression_fraction
from .persistence import compute_diagram
from .signal import Budget, BudgetKind, Method
from .simplify import reconstruct, simplify
from .wire import decode_wire, encode_wire


def _budget_from_args(args) -> Budget:
    chosen = [
        (BudgetKind.BYTES, args.bytes),
        (BudgetKind.POINTS, args.points),
        (BudgetKind.PERSISTENCE_THRESHOLD, args.threshold),
        (BudgetKind.COMPRESSION_FRACTION, args.fraction),
    ]
    given = [(kind, amount) for kind, amount in chosen if amount is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --bytes/--points/--threshold/--fraction")
    return Budget(*given[0])


class UsageError(Exception):
    pass


def cmd_compress(args) -> int:
    signal = read_signal(args.input, sample_rate_hz=args.rate or 1.0)
    if args.method == "tsc":
        comp = simplify(signal, _budget_from_args(args))
        payload = encode_wire(comp)
    elif args.method == "paa":
        if args.window is None:
            raise UsageError("--method paa requires --window")
        payload = encode_wire(paa_compress(signal, args.window))
    elif args.method == "dft":
        if args.coeffs is None:
            raise UsageError("--method dft requires --coeffs")
        payload = encode_dft_wire(dft_compress(signal, args.coeffs, args.selection))
    elif args.method == "random":
        if args.points is None:
            raise UsageError("--method random requires --points")
        payload = encode_wire(random_compress(signal, int(args.points), args.seed))
    else:  # pragma: no cover - argparse choices guard this
        raise UsageError(f"unknown method {args.method}")
    Path(args.output).write_bytes(payload)
    frac = compression_fraction(signal, len(payload))
    print(f"bytes={len(payload)} fraction={frac:.6f}")
    return 0


def cmd_reconstruct(args) -> int:
    data = Path(args.input).read_bytes()
    rate = args.rate or 1.0
    if len(data) > 5 and data[5] == int(Method.DFT):
        signal = dft_reconstruct(decode_dft_wire(data, sample_rate_hz=rate))
    else:
        comp = decode_wire(data, sample_rate_hz=rate)
        if comp.method is Method.PAA:
            signal = paa_reconstruct(comp)
        else:
            signal = reconstruct(comp)
    if str(args.output).lower().endswith(".wav"):
        if args.rate is None:
            raise UsageError("WAV output requires --rate (sample rate is not in the wire format)")
        write_wav(args.output, signal)
    else:
        write_csv(args.output, signal)
    print(f"samples={len(signal)}")
    return 0


def cmd_diagram(args) -> int:
    signal = read_signal(args.input)
    rows = compute_diagram(signal).to_csv_rows()
    text = "\n".join(rows) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    rows = bench_mod.run_bench(
        args.corpus,
        methods=args.methods.split(","),
        fractions=[float(f) for f in args.fractions.split(",")],
        noise_multiples=[float(x) for x in args.noise.split(",")],
        seed=args.seed,
        jobs=args.jobs,
    )
    bench_mod.write_rows(rows, args.output)
    n_detail = sum(1 for r in rows if r.row_kind == "detail")
    print(f"rows={len(rows)} detail={n_detail} out={args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tsc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compress", help="compress a WAV/CSV signal to a wire file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--method", choices=bench_mod.METHODS, default="tsc")
    p.add_argument("--bytes", type=float, default=None, help="byte budget (tsc)")
    p.add_argument("--points", type=float, default=None, help="point budget (tsc, random)")
    p.add_argument("--threshold", type=float, default=None, help="persistence cutoff (tsc)")
    p.add_argument("--fraction", type=float, default=None, help="compression fraction (tsc)")
    p.add_argument("--window", type=int, default=None, help="window size (paa)")
    p.add_argument("--coeffs", type=int, default=None, help="coefficient count (dft)")
    p.add_argument("--selection", choices=("largest", "first"), default="largest")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rate", type=float, default=None, help="sample rate for CSV input")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("reconstruct", help="reconstruct a wire file to CSV or WAV")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--rate", type=float, default=None, help="sample rate (required for WAV output)")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("diagram", help="persistence diagram of a signal as CSV")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("bench", help="sweep a corpus over compression and noise levels")
    p.add_argument("corpus")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--methods", default="tsc,paa,dft,random")
    p.add_argument("--fractions", default="0.5,0.9,0.95,0.99")
    p.add_argument("--noise", default="0")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (TscError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
