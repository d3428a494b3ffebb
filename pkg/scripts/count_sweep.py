"""Tabulate |R(n, G)| and |E(n, G)| over a grid of spheres and orthogonal targets.

Also prints how many classes admit an extension to an SO(n+1) action, which
should equal |R(n, G)|.
"""

import argparse

from equibundle.classify import enumerate_bundles, lifts_to_higher_action
from equibundle.hom_classes import TargetGroup, enumerate_hom_classes


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--mmax", type=int, default=8)
    args = ap.parse_args()
    print(f"{'n':>3} {'G':>7} {'|R|':>5} {'|E|':>5} {'lift':>5}")
    for n in range(3, args.nmax + 1):
        for m in range(2, args.mmax + 1):
            for fam in ("SO", "O"):
                g = TargetGroup(fam, m)
                reps = enumerate_hom_classes(n, g)
                bundles = enumerate_bundles(n, g)
                lifted = sum(lifts_to_higher_action(b) for b in bundles)
                print(f"{n:>3} {str(g):>7} {len(reps):>5} {len(bundles):>5} {lifted:>5}")


if __name__ == "__main__":
    main()
