#!/usr/bin/env python3
"""Print the single-orbit classification tables.

For each support size n: the subgroups of the symmetric group, and the orbit
isomorphism classes found by explicit equivariant-bijection search over a
pool of 2n+2 names.  n = 4 takes a few seconds.

Usage: python scripts/classify_orbits.py [max_n]
"""

import sys
import time

from finbench.nominal import single_orbit_enumerate, subgroups_of_Sn


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    for n in range(max_n + 1):
        start = time.monotonic()
        subs = subgroups_of_Sn(n)
        classes = single_orbit_enumerate(n)
        took = time.monotonic() - start
        print(f"support size {n}: {len(subs)} subgroups, "
              f"{len(classes)} orbit classes  ({took:.1f}s)")
        for spec in classes:
            gens = ", ".join(str(list(g)) for g in spec.gens) or "trivial"
            print(f"    |S| = {len(spec.group):2d}   generators: {gens}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
