"""Exact (connected) domination by increasing-cardinality subset scans."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph, mask_of, require_connected


@dataclass(frozen=True)
class DominationResult:
    value: int
    witness: frozenset[int]


def dominates(g: Graph, mask: int) -> bool:
    covered = 0
    for v in range(g.n):
        if mask >> v & 1:
            covered |= g.closed_masks[v]
    return covered == g.full_mask


def is_connected_dominating(g: Graph, mask: int) -> bool:
    return dominates(g, mask) and g.induced_connected(mask)


def _scan(g: Graph, size: int, connected: bool) -> Iterator[tuple[int, ...]]:
    check = is_connected_dominating if connected else dominates
    for combo in combinations(range(g.n), size):
        if check(g, mask_of(combo)):
            yield combo


def _minimum(g: Graph, connected: bool) -> DominationResult:
    for size in range(1, g.n + 1):
        for combo in _scan(g, size, connected):
            return DominationResult(size, frozenset(combo))
    raise AssertionError("V(G) dominates a connected graph")


def domination_number(g: Graph) -> DominationResult:
    require_connected(g)
    return _minimum(g, connected=False)


def domination_value(g: Graph) -> int:
    """gamma of any graph, connected or not (the second lexicographic factor may be disconnected)."""
    return _minimum(g, connected=False).value


def connected_domination_number(g: Graph) -> DominationResult:
    """Smallest connected dominating set; ``K1`` gives value 1."""
    require_connected(g)
    return _minimum(g, connected=True)


def minimum_connected_dominating_sets(g: Graph) -> list[frozenset[int]]:
    """Every minimum connected dominating set, in lexicographic order."""
    size = connected_domination_number(g).value
    return [frozenset(c) for c in _scan(g, size, connected=True)]

