#!/usr/bin/env python3
"""Survey special elements of the interval semirings zn(n).

For each modulus in the requested range, counts zero-divisor pairs,
nontrivial idempotents, units, nilpotents, and the four kinds of
Smarandache certificates, all by exhaustive scan. Prime rows show the
clean pattern (no zero divisors, n-1 units); composite rows show how
the counts grow with the factorization.
"""

import argparse
import json
import sys

from intervalsemirings import (
    SemiringHandle,
    find_idempotents,
    find_nilpotents,
    find_s_special,
    find_units,
    find_zero_divisors,
    zn_interval,
)

COLUMNS = ("zd", "idem", "units", "nilp", "s-zd", "s-anti", "s-idem",
           "s-unit")


def survey(n):
    h = SemiringHandle.for_domain(zn_interval(n))
    return {
        "zd": len(find_zero_divisors(h).findings),
        "idem": len(find_idempotents(h).findings) - 2,  # drop 0 and 1
        "units": len(find_units(h).findings),
        "nilp": len(find_nilpotents(h).findings),
        "s-zd": len(find_s_special(h, "s-zero-divisor").findings),
        "s-anti": len(find_s_special(h, "s-anti-zero-divisor").findings),
        "s-idem": len(find_s_special(h, "s-idempotent").findings),
        "s-unit": len(find_s_special(h, "s-unit").findings),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmin", type=int, default=2)
    ap.add_argument("--nmax", type=int, default=30)
    ap.add_argument("--json", action="store_true",
                    help="emit one JSON object per modulus")
    args = ap.parse_args(argv)
    if not 2 <= args.nmin <= args.nmax:
        ap.error("need 2 <= nmin <= nmax")

    if not args.json:
        print("  ".join(["  n"] + [f"{c:>6s}" for c in COLUMNS]))
    for n in range(args.nmin, args.nmax + 1):
        row = survey(n)
        if args.json:
            print(json.dumps({"n": n, **row}))
        else:
            print("  ".join([f"{n:>3d}"] + [f"{row[c]:>6d}"
                                            for c in COLUMNS]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
