#!/usr/bin/env python3
"""Exhaustively verify the special-vertex type disjunction over a
parameter grid and report the realized types."""

import sys

from sgk.specialvertex import verify_type_lemma


def main() -> int:
    ok = True
    grid = [(3, d, t) for d in (3, 4, 5) for t in (4, 6, 8)]
    grid += [(4, d, t) for d in (3, 4, 5) for t in (4, 6)]
    for n, delta, t in grid:
        res = verify_type_lemma(n, delta, t)
        if res.ok:
            print(f"N={n} delta={delta} t={t}: ok, "
                  f"{res.detail['checked']} vectors, "
                  f"types {', '.join(res.detail['types'])}")
        else:
            ok = False
            print(f"N={n} delta={delta} t={t}: COUNTEREXAMPLE {res.detail}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
