#!/usr/bin/env python3
"""Replay every catalogued case analysis and print the closing summary.

Exit status is nonzero if any table leaves survivors or any recorded
leaf fails re-verification.
"""

import sys

from sgk.replay import CATALOG, emit_table, replay, verify_trace


def main() -> int:
    ok = True
    total = 0.0
    for tid in CATALOG:
        trace = replay(tid)
        total += trace.elapsed
        sound = verify_trace(trace)
        status = "closed" if trace.closed else "OPEN"
        if not sound:
            status += " UNSOUND"
        leaves = sum(len(t.closed) for t in trace.tables)
        print(f"{tid:10s} {status:8s} {leaves:5d} leaves  {trace.elapsed:6.2f}s")
        if "--emit-table" in sys.argv:
            print(emit_table(trace))
        ok = ok and trace.closed and sound
    print(f"total {total:.2f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
