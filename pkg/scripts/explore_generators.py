"""Largest gap of the restricted set over other generator pairs <3k-2, 3k-1>.

These are scans, not proofs; a pair whose largest gap sits near the bound is
flagged since the scan may simply be too short.
"""
import argparse

from semigap.core import ConstraintProfile, GeneratorPair
from semigap.sieve import scan


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=7)
    ap.add_argument("--bound", type=int, default=60000)
    args = ap.parse_args()

    prof = ConstraintProfile()
    print(f"{'gens':>10} {'gaps':>6} {'max gap':>8}")
    for k in range(2, args.kmax + 1):
        gens = GeneratorPair(3 * k - 2, 3 * k - 1)
        rep = scan(gens, prof, args.bound)
        flag = "  (close to bound)" if rep.max_gap and rep.max_gap > args.bound // 2 else ""
        print(f"{str(gens):>10} {len(rep.gaps):6d} {str(rep.max_gap):>8}{flag}")


if __name__ == "__main__":
    main()
