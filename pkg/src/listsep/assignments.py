"""Color lists, separation parameters, and validity/properness checks.

Colors are small dense integers 0..C-1 for a universe size C; per-vertex
lists are stored as bitmasks so the enumeration modules can take unions and
intersections in inner loops cheaply.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import Graph

# A coloring maps vertex id -> chosen color. Partial colorings simply omit
# vertices.
Coloring = dict


def mask_of(colors: Iterable[int]) -> int:
    m = 0
    for c in colors:
        if c < 0:
            raise ValueError(f"negative color {c}")
        m |= 1 << c
    return m


def colors_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        bit = mask & -mask
        out.append(bit.bit_length() - 1)
        mask ^= bit
    return tuple(out)


class ListAssignment:
    """Per-vertex color sets over the universe {0..universe-1}."""

    __slots__ = ("universe", "_masks")

    def __init__(self, masks: Sequence[int], universe: int) -> None:
        if universe < 1:
            raise ValueError("universe must contain at least one color")
        full = (1 << universe) - 1
        for v, m in enumerate(masks):
            if m == 0:
                raise ValueError(f"empty list at vertex {v}")
            if m & ~full:
                raise ValueError(f"vertex {v} uses a color >= universe {universe}")
        self.universe = universe
        self._masks = tuple(masks)

    @classmethod
    def from_sets(
        cls, sets: Iterable[Iterable[int]], universe: int | None = None
    ) -> ListAssignment:
        masks = [mask_of(s) for s in sets]
        if universe is None:
            top = max((m.bit_length() for m in masks), default=1)
            universe = max(top, 1)
        return cls(masks, universe)

    def __len__(self) -> int:
        return len(self._masks)

    def mask(self, v: int) -> int:
        return self._masks[v]

    def colors(self, v: int) -> tuple[int, ...]:
        return colors_of(self._masks[v])

    def size(self, v: int) -> int:
        return self._masks[v].bit_count()

    def total_size(self) -> int:
        return sum(m.bit_count() for m in self._masks)

    def to_sets(self) -> list[tuple[int, ...]]:
        return [self.colors(v) for v in range(len(self))]

    def drop_vertex(self, v: int) -> ListAssignment:
        """Lists for G - v, matching Graph.delete_vertex's relabeling."""
        if not (0 <= v < len(self)):
            raise ValueError(f"vertex {v} out of range")
        masks = list(self._masks[:v]) + list(self._masks[v + 1 :])
        return ListAssignment(masks, self.universe)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ListAssignment):
            return NotImplemented
        return self.universe == other.universe and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.universe, self._masks))

    def __repr__(self) -> str:
        body = ", ".join(f"{v}:{list(self.colors(v))}" for v in range(len(self)))
        return f"ListAssignment({body}; C={self.universe})"


@dataclass(frozen=True)
class SeparationParams:
    """List-size floor k and separation bound t.

    t >= k is the union regime (adjacent list unions must reach t); t < k is
    the intersection regime (adjacent list intersections may not exceed t).
    At t = k the union condition is vacuous for k-lists, so the checks reduce
    to plain k-choosability.
    """

    k: int
    t: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.t < 0:
            raise ValueError("t must be nonnegative")

    @property
    def regime(self) -> str:
        return "union" if self.t >= self.k else "intersection"

    @property
    def separation(self) -> int:
        return abs(self.t - self.k)


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus the first violation, if any."""

    ok: bool
    reason: str = ""
    vertex: int | None = None
    edge: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_valid_assignment(
    g: Graph, lists: ListAssignment, p: SeparationParams
) -> CheckResult:
    """Check that `lists` is a (k,t)-list assignment of g.

    Every list must have size >= k; in the union regime every edge uv needs
    |L(u) | L(v)| >= t, in the intersection regime |L(u) & L(v)| <= t.
    Reports the first offending vertex or edge.
    """
    if len(lists) != g.n:
        raise ValueError(f"assignment covers {len(lists)} vertices, graph has {g.n}")
    for v in range(g.n):
        if lists.size(v) < p.k:
            return CheckResult(
                False, f"|L({v})| = {lists.size(v)} < k = {p.k}", vertex=v
            )
    union_regime = p.regime == "union"
    for u, v in g.edges():
        if union_regime:
            got = (lists.mask(u) | lists.mask(v)).bit_count()
            if got < p.t:
                return CheckResult(
                    False, f"|L({u}) u L({v})| = {got} < t = {p.t}", edge=(u, v)
                )
        else:
            got = (lists.mask(u) & lists.mask(v)).bit_count()
            if got > p.t:
                return CheckResult(
                    False, f"|L({u}) n L({v})| = {got} > t = {p.t}", edge=(u, v)
                )
    return CheckResult(True)


def is_proper_coloring(
    g: Graph, lists: ListAssignment, coloring: Mapping[int, int]
) -> CheckResult:
    """Check c(v) in L(v) for all v and c(u) != c(v) on every edge."""
    if len(lists) != g.n:
        raise ValueError(f"assignment covers {len(lists)} vertices, graph has {g.n}")
    for v in range(g.n):
        if v not in coloring:
            raise ValueError(f"coloring misses vertex {v}")
    for v in range(g.n):
        c = coloring[v]
        if c < 0 or not (lists.mask(v) >> c) & 1:
            return CheckResult(False, f"color {c} not in L({v})", vertex=v)
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            return CheckResult(
                False, f"edge ({u},{v}) has both endpoints colored {coloring[u]}",
                edge=(u, v),
            )
    return CheckResult(True)
