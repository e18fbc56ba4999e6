"""Emit the interval table for the default instance and diff it against the shipped fixture."""
import argparse

from semigap.acceptance import Instance, published_rows, table_discrepancies
from semigap.table import emit_table, render


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=20000)
    ap.add_argument("--format", choices=["md", "csv", "json"], default="md")
    args = ap.parse_args()

    inst = Instance(bound=args.bound)
    rows = emit_table(inst.report, [(r.lo, r.hi) for r in published_rows(args.bound)])
    print(render(rows, args.format), end="")

    diffs = table_discrepancies(inst)
    print(f"\n{len(rows) - len(diffs)}/{len(rows)} rows identical to the fixture")
    for published, ours in diffs:
        extra = sorted(ours.members() - published.members())
        missing = sorted(published.members() - ours.members())
        print(f"  {published.interval}: members not listed {extra}, listed but not members {missing}")


if __name__ == "__main__":
    main()
