#!/usr/bin/env python3
"""Write the synthetic spoken-digit-like benchmark corpus to a directory.

Usage: python3 scripts/make_corpus.py out_dir [--n 50] [--seed 0] [--length N]
"""

import argparse

from tsc.synthetic import write_corpus


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir")
    parser.add_argument("--n", type=int, default=50, help="number of signals")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--length", type=int, default=None, help="fixed sample count (default: varied)"
    )
    args = parser.parse_args()
    paths = write_corpus(args.out_dir, n_signals=args.n, seed=args.seed, length=args.length)
    print(f"wrote {len(paths)} WAV files to {args.out_dir}")


if __name__ == "__main__":
    main()
