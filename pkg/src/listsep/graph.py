"""Immutable simple-graph core: degrees, neighborhoods, deletions, density."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class Graph:
    """Simple undirected graph on dense vertex ids 0..n-1.

    Instances are immutable; ``delete_vertex``/``delete_edge``/``with_edge``
    return new graphs, so callers can hold G, G-u, G-v and G-uv side by side.
    Vertex deletion relabels survivors by the stable map w -> w for w < v,
    w -> w-1 for w > v.
    """

    __slots__ = ("n", "m", "_nbrs", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self._nbrs = tuple(tuple(sorted(s)) for s in adj)
        self._masks = tuple(sum(1 << w for w in s) for s in adj)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._nbrs[v]

    def neighbor_mask(self, v: int) -> int:
        """Neighborhood of v as a bitmask over vertex ids."""
        self._check_vertex(v)
        return self._masks[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (self._masks[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    def common_neighbor_count(self, u: int, v: int) -> int:
        """|N(u) & N(v)|; u and v need not be adjacent but must differ."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("common_neighbor_count requires two distinct vertices")
        return (self._masks[u] & self._masks[v]).bit_count()

    def delete_vertex(self, v: int) -> Graph:
        self._check_vertex(v)

        def relabel(w: int) -> int:
            return w if w < v else w - 1

        edges = [
            (relabel(a), relabel(b)) for a, b in self.edges() if a != v and b != v
        ]
        return Graph(self.n - 1, edges)

    def delete_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        key = (min(u, v), max(u, v))
        return Graph(self.n, [e for e in self.edges() if e != key])

    def with_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v or self.has_edge(u, v):
            raise ValueError(f"cannot add edge ({u},{v})")
        return Graph(self.n, self.edges() + [(min(u, v), max(u, v))])

    def average_degree(self) -> Fraction:
        """2m/n as an exact rational."""
        if self.n == 0:
            raise ValueError("average degree of the empty graph is undefined")
        return Fraction(2 * self.m, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash((self.n, self._nbrs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given vertices.

    Returns (subgraph, kept) where kept is the sorted tuple of original ids;
    new id i corresponds to kept[i].
    """
    kept = tuple(sorted(set(vertices)))
    for v in kept:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[u], index[v]) for u, v in g.edges() if u in index and v in index
    ]
    return Graph(len(kept), edges), kept


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to `leaves` leaf vertices."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Parts {0..a-1} and {a..a+b-1}."""
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer cycle
        edges.append((i, 5 + i))                # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return Graph(10, edges)


def icosahedron_graph() -> Graph:
    """Icosahedron as a pentagonal antiprism capped by two apexes."""
    edges = []
    for i in range(5):
        edges.append((0, 1 + i))                        # top apex
        edges.append((11, 6 + i))                       # bottom apex
        edges.append((1 + i, 1 + (i + 1) % 5))          # upper pentagon
        edges.append((6 + i, 6 + (i + 1) % 5))          # lower pentagon
        edges.append((1 + i, 6 + i))                    # antiprism band
        edges.append((1 + i, 6 + (i + 1) % 5))
    return Graph(12, edges)
