#!/usr/bin/env python3
"""Sweep great webs and check the counting identities and bigon
abundance on each.

The V <= 3 sweep at delta=3, t=4 is exhaustive at the bundle level;
larger parameters are sampled randomly.
"""

import argparse
import random
import sys
import time

from sgk.generators import exhaustive_great_webs, random_great_web
from sgk.specialvertex import verify_counting_identities
from sgk.webs import check_bigon_abundance


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--delta", type=int, default=3)
    ap.add_argument("--t", type=int, default=4)
    ap.add_argument("--vmax", type=int, default=3)
    ap.add_argument("--random", type=int, default=0, metavar="N",
                    help="additionally sample N random webs")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    webs = list(exhaustive_great_webs(args.delta, args.t, args.vmax))
    rng = random.Random(args.seed)
    for _ in range(args.random):
        w = random_great_web(rng, delta=args.delta, t=args.t,
                             vmax=args.vmax + 2)
        if w is not None:
            webs.append(w)

    bad = 0
    for w in webs:
        counting = verify_counting_identities(w)
        abundance = check_bigon_abundance(w)
        if not (counting.ok and abundance.ok):
            bad += 1
            print(f"FAIL V={w.vertex_count} E={w.edge_count} "
                  f"counting={counting.detail} abundance={abundance.detail}")
    dt = time.perf_counter() - t0
    print(f"{len(webs)} webs, {bad} failures, {dt:.2f}s")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
