"""Which powers base**e fail to be members, under the default and a-bounded profiles.

Empirical only: nothing here says anything about exponents past --limit.
"""
import argparse

from semigap.core import ConstraintProfile, DEFAULT_GENS
from semigap.sieve import probe_powers

PROFILES = {
    "default": ConstraintProfile(),
    "a<=10": ConstraintProfile(a_max=10),
    "1<=a<=10": ConstraintProfile(a_min=1, a_max=10),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--base", type=int, default=2)
    ap.add_argument("--limit", type=int, default=40)
    args = ap.parse_args()

    # stay inside the 64-bit range
    limit = args.limit
    while args.base**limit >= 2**63:
        limit -= 1
    for name, prof in PROFILES.items():
        exps = probe_powers(DEFAULT_GENS, prof, args.base, limit)
        print(f"{name:>10}: {len(exps):2d} non-member exponents <= {limit}: {exps}")


if __name__ == "__main__":
    main()
