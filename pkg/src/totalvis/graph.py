"""Immutable simple undirected graphs, the edge-list format and metric helpers.

Vertices are the integers ``0..n-1``.  Vertex subsets are exchanged as
``frozenset`` objects at the public surface; the solvers work on integer
bitmasks internally (bit ``v`` set iff ``v`` is a member).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .errors import DisconnectedGraph, EdgeListSyntaxError, OutOfRangeVertex, SelfLoop

VertexSet = frozenset
UNREACHABLE = -1


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Vertex ids of a bitmask in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def set_of(mask: int) -> frozenset[int]:
    return frozenset(members(mask))


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Build instances with :func:`build_graph`; the constructor assumes the
    edge tuple is already normalised (``u < v``, sorted, no duplicates).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr_masks[u] >> v & 1)

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(a) for a in self.adjacency)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(m | (1 << v) for v, m in enumerate(self.nbr_masks))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def distances(self) -> DistanceMatrix:
        return DistanceMatrix.from_graph(self)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced_connected(self, mask: int) -> bool:
        """True iff the subgraph induced by ``mask`` is connected (and nonempty)."""
        if not mask:
            return False
        seen = mask & -mask
        frontier = seen
        while frontier:
            grow = 0
            for v in members(frontier):
                grow |= self.nbr_masks[v]
            frontier = grow & mask & ~seen
            seen |= frontier
        return seen == mask


class DistanceMatrix:
    """All-pairs hop distances; ``d[u][v]`` is :data:`UNREACHABLE` across components."""

    __slots__ = ("n", "_rows")

    def __init__(self, rows: Sequence[Sequence[int]]):
        self._rows = tuple(tuple(r) for r in rows)
        self.n = len(self._rows)

    @classmethod
    def from_graph(cls, g: Graph) -> DistanceMatrix:
        rows = []
        for s in range(g.n):
            dist = [UNREACHABLE] * g.n
            dist[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in g.adjacency[x]:
                    if dist[y] == UNREACHABLE:
                        dist[y] = dist[x] + 1
                        queue.append(y)
            rows.append(dist)
        return cls(rows)

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self._rows[u]

    def __eq__(self, other):
        return isinstance(other, DistanceMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edges`` over ``0..n-1`` and return the deduplicated graph."""
    if n < 1:
        raise OutOfRangeVertex(f"vertex count must be positive, got {n}")
    normalised = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        normalised.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(normalised)))


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format; ``#`` lines are comments."""
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListSyntaxError(f"expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListSyntaxError(f"non-integer token in {raw!r}", lineno) from None
        if header is None:
            if a < 1 or b < 0:
                raise EdgeListSyntaxError(f"bad header {raw!r}", lineno)
            header = (a, b, lineno)
        else:
            edges.append((a, b))
    if header is None:
        raise EdgeListSyntaxError("missing 'n m' header", max(1, len(text.splitlines())))
    n, m, hline = header
    if len(edges) != m:
        raise EdgeListSyntaxError(f"header announces {m} edges, found {len(edges)}", hline)
    return build_graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_edge_list(g))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return g.distances


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in g.distances[0]


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph(f"graph on {g.n} vertices is not connected")


def diameter(g: Graph) -> int:
    require_connected(g)
    return max(max(row) for row in g.distances.rows())


def leaf_set(g: Graph) -> frozenset[int]:
    return frozenset(v for v in g.vertices() if g.degree(v) == 1)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    mask = mask_of(vertices)
    return all(not (g.nbr_masks[v] & mask) for v in members(mask))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges)
    return h


def is_block_graph(g: Graph) -> bool:
    """True iff every biconnected component (block) is a clique."""
    for block in nx.biconnected_components(to_networkx(g)):
        k = len(block)
        inner = sum(1 for v in block for w in g.adjacency[v] if w in block) // 2
        if inner != k * (k - 1) // 2:
            return False
    return True
