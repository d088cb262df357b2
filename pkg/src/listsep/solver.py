"""Exhaustive list-coloring search.

Backtracking with fail-first variable ordering: always branch on the vertex
with the fewest remaining candidate colors (ties to the lowest id), prune
neighbor candidate sets on every assignment, and immediately propagate
vertices whose candidate set shrinks to a single color. No randomization;
verdicts and node counts are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .assignments import Coloring, ListAssignment
from .graph import Graph

SAT = "SAT"
UNSAT = "UNSAT"


@dataclass(frozen=True)
class SolveResult:
    verdict: str
    witness: Coloring | None
    nodes_explored: int


class _Search:
    """Shared state for one search; nodes count every vertex assignment."""

    __slots__ = ("n", "nbrs", "cand", "color", "nodes")

    def __init__(self, g: Graph, lists: ListAssignment, fixed: Mapping[int, int]):
        if len(lists) != g.n:
            raise ValueError(
                f"assignment covers {len(lists)} vertices, graph has {g.n}"
            )
        self.n = g.n
        self.nbrs = [g.neighbors(v) for v in range(g.n)]
        self.cand = [lists.mask(v) for v in range(g.n)]
        self.color = [-1] * g.n
        self.nodes = 0
        for v, c in fixed.items():
            if not (0 <= v < g.n):
                raise ValueError(f"fixed vertex {v} out of range")
            if c < 0 or not (lists.mask(v) >> c) & 1:
                raise ValueError(f"fixed color {c} not in list of vertex {v}")
            self.cand[v] = 1 << c

    def pick(self) -> int:
        """Unassigned vertex with fewest candidates, lowest id on ties."""
        best = -1
        best_count = 1 << 30
        color = self.color
        cand = self.cand
        for v in range(self.n):
            if color[v] < 0:
                pc = cand[v].bit_count()
                if pc < best_count:
                    best = v
                    best_count = pc
                    if pc <= 1:
                        break
        return best

    def assign(self, v: int, bit: int, undo: list) -> bool:
        """Assign v and propagate forced singletons; False on a wipeout."""
        cand = self.cand
        color = self.color
        stack = [(v, bit)]
        while stack:
            w, b = stack.pop()
            if color[w] >= 0:
                continue
            color[w] = b.bit_length() - 1
            undo.append((w, -1, 0))
            self.nodes += 1
            for u in self.nbrs[w]:
                if color[u] < 0 and cand[u] & b:
                    cand[u] &= ~b
                    undo.append((u, cand[u], b))
                    if cand[u] == 0:
                        return False
                    if cand[u] & (cand[u] - 1) == 0:
                        stack.append((u, cand[u]))
        return True

    def unwind(self, undo: list) -> None:
        cand = self.cand
        color = self.color
        while undo:
            w, kind, b = undo.pop()
            if kind < 0:
                color[w] = -1
            else:
                cand[w] |= b

    def find_one(self) -> bool:
        v = self.pick()
        if v < 0:
            return True
        m = self.cand[v]
        while m:
            bit = m & -m
            m ^= bit
            undo: list = []
            if self.assign(v, bit, undo) and self.find_one():
                return True
            self.unwind(undo)
        return False

    def count(self, cap: int) -> int:
        v = self.pick()
        if v < 0:
            return 1
        found = 0
        m = self.cand[v]
        while m and found < cap:
            bit = m & -m
            m ^= bit
            undo: list = []
            if self.assign(v, bit, undo):
                found += self.count(cap - found)
            self.unwind(undo)
        return found


def solve_with_precolor(
    g: Graph, lists: ListAssignment, fixed: Mapping[int, int]
) -> SolveResult:
    """Decide existence of a proper list coloring extending `fixed`.

    Raises ValueError if a fixed color is not in the vertex's list.
    """
    st = _Search(g, lists, fixed)
    if st.find_one():
        witness: Coloring = {v: st.color[v] for v in range(g.n)}
        return SolveResult(SAT, witness, st.nodes)
    return SolveResult(UNSAT, None, st.nodes)


def solve(g: Graph, lists: ListAssignment) -> SolveResult:
    """Decide existence of a proper list coloring; SAT comes with a witness."""
    return solve_with_precolor(g, lists, {})


def count_colorings(g: Graph, lists: ListAssignment, cap: int) -> int:
    """Exact number of proper list colorings, saturating at `cap`."""
    if cap < 1:
        raise ValueError("cap must be positive")
    return _Search(g, lists, {}).count(cap)
