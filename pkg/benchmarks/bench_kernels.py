"""Compiled vs pure-Python carry-less multiplication, plus a cutoff sweep."""

import argparse

from jparity import _kernel
from jparity.bench import run_benchmark


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=10 ** 6)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--cutoffs", default="4,8,16,32,64",
                    help="Karatsuba base-case sizes in 64-bit words")
    args = ap.parse_args()
    cutoffs = [int(c) for c in args.cutoffs.split(",") if c]
    print(f"active backend: {_kernel.BACKEND}")
    print(f"{'kernel':<16}{'operation':<22}{'degree':>10}{'seconds':>12}")
    for row in run_benchmark(args.max_degree, repeat=args.repeat, cutoffs=cutoffs):
        print(f"{row.kernel:<16}{row.operation:<22}{row.degree:>10}{row.seconds:>12.4f}")


if __name__ == "__main__":
    main()
