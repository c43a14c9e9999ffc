"""Certificate checking for cycle systems and orthogonal pairs.

All checkers report every defect they find instead of stopping at the first,
so a failed report pinpoints the bad cycles / edges directly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import CycleSystem, GraphSpec, OrthogonalPair, cycle_edges, graph_edges


@dataclass
class VerificationReport:
    """Outcome of a decomposition / orthogonality check.

    ok is True iff no defect was recorded.  edge_deficits maps edge -> signed
    count (cover count minus required count, nonzero entries only).
    bad_cycles lists (tag, reason) for cycles of wrong length or shape.
    max_cross_intersection is the largest number of edges shared by a cycle of
    one system and a cycle of the other; witness names one offending pair.
    """

    ok: bool = True
    edge_deficits: dict = field(default_factory=dict)
    bad_cycles: list = field(default_factory=list)
    max_cross_intersection: int = 0
    witness: tuple | None = None

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            ok=self.ok and other.ok,
            edge_deficits={**self.edge_deficits, **other.edge_deficits},
            bad_cycles=self.bad_cycles + other.bad_cycles,
            max_cross_intersection=max(
                self.max_cross_intersection, other.max_cross_intersection
            ),
            witness=self.witness or other.witness,
        )


def verify_decomposition(system: CycleSystem, length: int, tag="") -> VerificationReport:
    """Check that the cycles partition the host's edge set into `length`-cycles."""
    report = VerificationReport()
    covered = Counter()
    for i, cyc in enumerate(system.cycles):
        if len(cyc) != length:
            report.bad_cycles.append(((tag, i), f"length {len(cyc)} != {length}"))
            report.ok = False
        try:
            es = cycle_edges(cyc)
        except ValueError as exc:
            report.bad_cycles.append(((tag, i), str(exc)))
            report.ok = False
            continue
        covered.update(es)
    required = graph_edges(system.spec)
    for e in required:
        got = covered.pop(e, 0)
        if got != 1:
            report.edge_deficits[e] = got - 1
            report.ok = False
    for e, got in covered.items():
        # edges outside the host graph (hole / same-part edges)
        report.edge_deficits[e] = got
        report.ok = False
    return report


def verify_orthogonality(first: CycleSystem, second: CycleSystem) -> VerificationReport:
    """Check that any cycle of one system shares at most one edge with any
    cycle of the other.

    Runs in O(|E| * l): edges of `second` are indexed by owner cycle, then each
    cycle of `first` is scanned once.  Owners are kept as lists so repeated
    edges in an invalid system still count against every owner.
    """
    report = VerificationReport()
    owners: dict = {}
    for j, cyc in enumerate(second.cycles):
        for e in cycle_edges(cyc):
            owners.setdefault(e, []).append(j)
    for i, cyc in enumerate(first.cycles):
        shared = Counter()
        for e in cycle_edges(cyc):
            for j in owners.get(e, ()):
                shared[j] += 1
        for j, k in shared.items():
            if k > report.max_cross_intersection:
                report.max_cross_intersection = k
                report.witness = (i, j)
            if k > 1:
                report.ok = False
    return report


def verify_pair(pair: OrthogonalPair, length: int) -> VerificationReport:
    """Full certificate: both systems decompose the host into `length`-cycles
    and the two systems are orthogonal."""
    expected = len(graph_edges(pair.spec))
    report = verify_decomposition(pair.first, length, tag="first").merge(
        verify_decomposition(pair.second, length, tag="second")
    )
    for tag, system in (("first", pair.first), ("second", pair.second)):
        if length * len(system.cycles) != expected:
            report.bad_cycles.append(
                ((tag, None), f"{len(system.cycles)} cycles cover {length * len(system.cycles)} edges, host has {expected}")
            )
            report.ok = False
    return report.merge(verify_orthogonality(pair.first, pair.second))
