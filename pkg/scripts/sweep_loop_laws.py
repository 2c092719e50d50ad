#!/usr/bin/env python3
"""Tabulate which identity laws hold in the loops L_n(m).

For every odd n in the requested range and every m with
gcd(m, n) = gcd(m-1, n) = 1, builds the (n+1)-element loop and prints
one row per loop with its full law profile. The closing summary counts
how often each law held, which makes parameter patterns (left
alternative exactly at m = 2, commutativity exactly at the midpoint m)
easy to spot by eye.
"""

import argparse
import json
import sys

from intervalsemirings import build_loop, check_laws, loop_parameters

LAWS = ("commutative", "left_alternative", "right_alternative", "moufang",
        "left_bol", "right_bol", "wip", "p_groupoid")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmin", type=int, default=5)
    ap.add_argument("--nmax", type=int, default=19)
    ap.add_argument("--json", action="store_true",
                    help="emit one JSON object per loop")
    args = ap.parse_args(argv)
    if args.nmin > args.nmax or args.nmin < 5:
        ap.error("need 5 <= nmin <= nmax")

    counts = {law: 0 for law in LAWS}
    total = 0
    if not args.json:
        header = ["n", "m"] + [law.replace("_", "-") for law in LAWS]
        print("  ".join(f"{h:>17s}" if i >= 2 else f"{h:>3s}"
                        for i, h in enumerate(header)))
    for n in range(args.nmin | 1, args.nmax + 1, 2):
        for m in loop_parameters(n):
            profile = check_laws(build_loop(n, m))
            total += 1
            row = {law: getattr(profile, law) for law in LAWS}
            for law, held in row.items():
                counts[law] += held
            if args.json:
                print(json.dumps({"n": n, "m": m, **row}))
            else:
                cells = [f"{n:>3d}", f"{m:>3d}"]
                cells += [f"{'yes' if row[law] else '.':>17s}"
                          for law in LAWS]
                print("  ".join(cells))
    if not args.json:
        print(f"\n{total} loops;", ", ".join(
            f"{law.replace('_', '-')}: {c}" for law, c in counts.items()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
