"""Replay of the exhaustive vertex case analyses.

Each catalog entry names a context and the special-vertex types whose
corner sequences must all be ruled out.  A replay enumerates every
refinement up to symmetry, records which rule closed each branch, and
reports survivors (a closed replay has none).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from time import perf_counter
from typing import Optional, Sequence

from sgk.casework import CornerSequence, admissible, enumerate_admissible
from sgk.caserules import CONTEXTS, rule_by_id, rules_for


def thread_count() -> int:
    raw = os.environ.get("SGK_THREADS", "")
    try:
        k = int(raw)
    except ValueError:
        k = 0
    return k if k >= 1 else (os.cpu_count() or 1)


CATALOG: dict[str, tuple[str, tuple[tuple[int, ...], ...]]] = {
    "t4_noscc": ("t4_noscc", ((9,), (8, 1), (7, 4))),
    "t4_scc": ("t4_scc", ((9,), (8, 1), (7, 4))),
    "nonor_t6": ("nonor_t6", ((14,), (13, 4))),
    "t6_caseD": ("t6_caseD", ((15,), (14, 1), (13, 4))),
}


@dataclass(frozen=True)
class ClosedLeaf:
    sequence: CornerSequence
    rule_id: str
    detail: str

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence.to_dict(),
            "rule": self.rule_id,
            "detail": self.detail,
            "citation": rule_by_id(self.rule_id).citation,
        }


@dataclass
class CaseTable:
    vtype: tuple[int, ...]
    closed: list[ClosedLeaf]
    survivors: list[CornerSequence]

    @property
    def is_closed(self) -> bool:
        return not self.survivors

    def to_dict(self) -> dict:
        return {
            "type": list(self.vtype),
            "closed": [leaf.to_dict() for leaf in self.closed],
            "survivors": [s.to_dict() for s in self.survivors],
        }


@dataclass
class DerivationTrace:
    theorem: str
    context: str
    tables: list[CaseTable] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def closed(self) -> bool:
        return all(t.is_closed for t in self.tables)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "context": self.context,
            "closed": self.closed,
            "elapsed": self.elapsed,
            "tables": [t.to_dict() for t in self.tables],
        }


def _run_type(context_name: str, vtype: Sequence[int]) -> CaseTable:
    ctx = CONTEXTS[context_name]
    rules = rules_for(context_name)
    closed: list = []
    survivors = enumerate_admissible(ctx, vtype, rules, collect_closed=closed)
    leaves = [ClosedLeaf(seq, rid, detail) for seq, rid, detail in closed]
    return CaseTable(tuple(vtype), leaves, survivors)


def replay(theorem_id: str) -> DerivationTrace:
    if theorem_id not in CATALOG:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    context_name, vtypes = CATALOG[theorem_id]
    t0 = perf_counter()
    workers = min(thread_count(), len(vtypes))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tables = list(
                pool.map(lambda vt: _run_type(context_name, vt), vtypes)
            )
    else:
        tables = [_run_type(context_name, vt) for vt in vtypes]
    trace = DerivationTrace(theorem_id, context_name, tables)
    trace.elapsed = perf_counter() - t0
    return trace


def verify_trace(trace: DerivationTrace) -> bool:
    """Re-run admissibility on every closed leaf; the recorded rule must
    fire again with the same verdict."""
    rules = rules_for(trace.context)
    for table in trace.tables:
        for leaf in table.closed:
            verdict = admissible(leaf.sequence, rules)
            if verdict.ok or verdict.violated != leaf.rule_id:
                return False
        for seq in table.survivors:
            if not admissible(seq, rules).ok:
                return False
    return True


def _type_name(vtype: tuple[int, ...]) -> str:
    return "[" + ",".join(str(v) for v in vtype) + "]"


def emit_table(trace: DerivationTrace) -> str:
    """Human-readable case table: one row per branch representative."""
    lines = [
        f"replay {trace.theorem} (context {trace.context}): "
        + ("closed" if trace.closed else "NOT CLOSED"),
        "",
    ]
    cited: set[str] = set()
    for table in trace.tables:
        head = (
            f"type {_type_name(table.vtype)}: "
            f"{len(table.closed)} branches closed, "
            f"{len(table.survivors)} survivors"
        )
        lines.append(head)
        lines.append("-" * len(head))
        for leaf in table.closed:
            lines.append(
                f"  {str(leaf.sequence):<20} {leaf.rule_id:<22} "
                f"{leaf.detail}"
            )
            cited.add(leaf.rule_id)
        for seq in table.survivors:
            lines.append(f"  {str(seq):<20} SURVIVES")
        lines.append("")
    if cited:
        lines.append("rules cited:")
        for rid in sorted(cited):
            lines.append(f"  {rid}: {rule_by_id(rid).citation}")
    return "\n".join(lines)
