"""Geodesic visibility and exact maximum total mutual-visibility search.

A set ``X`` is a total mutual-visibility (TMV) set when every pair of
vertices of the graph is joined by a shortest path whose interior avoids
``X``.  The property is hereditary (subsets of TMV sets are TMV), which is
what makes the branch-and-bound below exact: a partial selection that is
already violated can be discarded together with all of its supersets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import Infeasible, TooLarge
from .graph import Graph, mask_of, members, require_connected, set_of

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: frozenset[int]
    nodes_explored: int = 0


class _Index:
    """Per-graph precomputation shared by every solver call.

    For each pair ``(u, v)`` at distance >= 2 it stores the interior layers
    of the geodesic DAG: ``layers[k-1]`` is the set of vertices ``w`` with
    ``d(u, w) = k`` and ``d(w, v) = d(u, v) - k``.
    """

    def __init__(self, g: Graph):
        require_connected(g)
        self.g = g
        d = g.distances
        nbr = g.nbr_masks
        self.nbr = nbr
        self.pairs: list[tuple[int, tuple[int, ...]]] = []
        self.through: list[list[int]] = [[] for _ in range(g.n)]
        for u in range(g.n):
            du = d[u]
            for v in range(u + 1, g.n):
                duv = du[v]
                if duv < 2:
                    continue
                dv = d[v]
                layers = []
                for k in range(1, duv):
                    layers.append(mask_of(w for w in range(g.n) if du[w] == k and dv[w] == duv - k))
                idx = len(self.pairs)
                self.pairs.append((1 << u, tuple(layers)))
                for layer in layers:
                    for w in members(layer):
                        self.through[w].append(idx)

        self.single_bad = 0
        for w in range(g.n):
            if not self.addable(0, w):
                self.single_bad |= 1 << w
        self.conflict = [0] * g.n
        for a in range(g.n):
            if self.single_bad >> a & 1:
                continue
            for b in range(a + 1, g.n):
                if self.single_bad >> b & 1:
                    continue
                if not self.addable(1 << a, b):
                    self.conflict[a] |= 1 << b
                    self.conflict[b] |= 1 << a

    def visible(self, p: int, blocked: int) -> bool:
        reach, layers = self.pairs[p]
        nbr = self.nbr
        for layer in layers:
            open_ = layer & ~blocked
            nxt = 0
            while open_:
                low = open_ & -open_
                if nbr[low.bit_length() - 1] & reach:
                    nxt |= low
                open_ ^= low
            if not nxt:
                return False
            reach = nxt
        return True

    def addable(self, chosen: int, w: int) -> bool:
        """True iff ``chosen | {w}`` is TMV, given that ``chosen`` already is."""
        blocked = chosen | (1 << w)
        visible = self.visible
        return all(visible(p, blocked) for p in self.through[w])

    def is_tmv(self, mask: int) -> bool:
        return all(self.visible(p, mask) for p in range(len(self.pairs)))


@lru_cache(maxsize=512)
def _index(g: Graph) -> _Index:
    return _Index(g)


def is_pair_visible(g: Graph, x: Iterable[int], u: int, v: int) -> bool:
    """True iff some shortest ``u,v``-path has no internal vertex in ``x``."""
    require_connected(g)
    d = g.distances
    duv = d[u][v]
    if duv < 2:
        return True
    blocked = mask_of(x)
    reach = 1 << u
    for k in range(1, duv):
        nxt = 0
        for w in range(g.n):
            if d[u][w] == k and d[w][v] == duv - k and not blocked >> w & 1 and g.nbr_masks[w] & reach:
                nxt |= 1 << w
        if not nxt:
            return False
        reach = nxt
    return True


def is_tmv_set(g: Graph, x: Iterable[int]) -> bool:
    return _index(g).is_tmv(mask_of(x))


def _clique_cover(cand: int, conflict: list[int]) -> int:
    """Greedy partition of ``cand`` into cliques of the conflict graph.

    A TMV set holds at most one vertex per clique, so the count bounds how
    many more vertices can still be chosen.
    """
    count = 0
    while cand:
        low = cand & -cand
        cand ^= low
        pool = cand & conflict[low.bit_length() - 1]
        while pool:
            nxt = pool & -pool
            cand ^= nxt
            pool &= conflict[nxt.bit_length() - 1] & ~nxt
        count += 1
    return count


def _search(g: Graph, include: int, exclude: int, independent: bool) -> SolveResult:
    idx = _index(g)
    if include & exclude:
        raise ValueError("must_include and must_exclude intersect")
    if not idx.is_tmv(include) or (independent and any(g.nbr_masks[v] & include for v in members(include))):
        raise Infeasible(f"forced vertices {sorted(members(include))} are not a feasible set")

    conflict = idx.conflict
    if independent:
        conflict = [c | m for c, m in zip(conflict, g.nbr_masks)]
    exclude |= idx.single_bad | convex_p3_mask(g)
    cand = g.full_mask & ~include & ~exclude
    for v in members(include):
        cand &= ~conflict[v]
    cand = mask_of(w for w in members(cand) if idx.addable(include, w))

    # Simplicial vertices are compulsory in maximum sets; use them to seed the bound.
    best = popcount(include) - 1
    seed = (simplicial_mask(g) | include) & ~exclude
    if seed != include and idx.is_tmv(seed):
        if not independent or all(not (g.nbr_masks[v] & seed) for v in members(seed)):
            best = popcount(seed) - 1
    best_mask = None
    nodes = 0
    addable = idx.addable

    def dfs(chosen: int, cand: int, size: int) -> None:
        nonlocal best, best_mask, nodes
        nodes += 1
        if not cand:
            if size > best:
                best, best_mask = size, chosen
            return
        if size + popcount(cand) <= best:
            return
        if size + _clique_cover(cand, conflict) <= best:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        if addable(chosen, v):
            dfs(chosen | low, rest & ~conflict[v], size + 1)
        dfs(chosen, rest, size)

    dfs(include, cand, popcount(include))
    assert best_mask is not None
    return SolveResult(best, set_of(best_mask), nodes)


def popcount(mask: int) -> int:
    return mask.bit_count()


def max_tmv(g: Graph, must_include: Iterable[int] = (), must_exclude: Iterable[int] = ()) -> SolveResult:
    """Largest TMV set containing ``must_include`` and avoiding ``must_exclude``.

    The witness is the lexicographically smallest optimum (compare sorted
    tuples).  Raises :class:`Infeasible` when ``must_include`` is not TMV.
    """
    return _search(g, mask_of(must_include), mask_of(must_exclude), independent=False)


def mu_t(g: Graph) -> SolveResult:
    return max_tmv(g)


def mu_it(g: Graph) -> SolveResult:
    """Largest set that is both independent and TMV."""
    return _search(g, 0, 0, independent=True)


# -- local structure -----------------------------------------------------------

def simplicial_mask(g: Graph) -> int:
    nbr = g.nbr_masks
    out = 0
    for v in g.vertices():
        ns = nbr[v]
        if all((nbr[w] | (1 << w)) & ns == ns for w in members(ns)):
            out |= 1 << v
    return out


def simplicial_set(g: Graph) -> frozenset[int]:
    return set_of(simplicial_mask(g))


@lru_cache(maxsize=512)
def convex_p3_mask(g: Graph) -> int:
    closed = g.closed_masks
    out = 0
    for u in g.vertices():
        for w in range(u + 1, g.n):
            common = closed[u] & closed[w]
            if common and not common & (common - 1):
                out |= common
    return out


def convex_p3_centers(g: Graph) -> frozenset[int]:
    """Vertices ``v`` with ``N[u] & N[w] == {v}`` for some pair ``u != w``."""
    return set_of(convex_p3_mask(g))


def twin_partition_of_simplicials(g: Graph) -> list[frozenset[int]]:
    """Simplicial vertices grouped by closed neighbourhood, classes ordered by min id."""
    groups: dict[int, list[int]] = {}
    for v in members(simplicial_mask(g)):
        groups.setdefault(g.closed_masks[v], []).append(v)
    return sorted((frozenset(c) for c in groups.values()), key=min)


# -- compulsory / forbidden ------------------------------------------------------

def _excluded_value(g: Graph, v: int) -> int:
    return max_tmv(g, (), (v,)).value


def _included_value(g: Graph, v: int) -> int:
    try:
        return max_tmv(g, (v,), ()).value
    except Infeasible:
        return -1


def compulsory_and_forbidden(g: Graph, best: SolveResult | None = None,
                             executor=None) -> tuple[frozenset[int], frozenset[int]]:
    """Both sets from one optimum plus one constrained solve per undecided vertex.

    Only members of an optimal witness can be compulsory and only non-members
    can be forbidden; simplicial vertices are compulsory and convex-P3
    centres forbidden outright.
    """
    if best is None:
        best = mu_t(g)
    simp = simplicial_mask(g)
    p3 = convex_p3_mask(g)
    inside = [v for v in sorted(best.witness) if not simp >> v & 1]
    outside = [v for v in g.vertices() if v not in best.witness and not p3 >> v & 1]
    if executor is None:
        ex_vals = [_excluded_value(g, v) for v in inside]
        in_vals = [_included_value(g, v) for v in outside]
    else:
        ex_vals = list(executor.map(_excluded_value, itertools.repeat(g), inside))
        in_vals = list(executor.map(_included_value, itertools.repeat(g), outside))
    compulsory = {v for v in best.witness if simp >> v & 1}
    compulsory.update(v for v, val in zip(inside, ex_vals) if val < best.value)
    forbidden = set(members(p3 & ~mask_of(best.witness)))
    forbidden.update(v for v, val in zip(outside, in_vals) if val < best.value)
    return frozenset(compulsory), frozenset(forbidden)


def compulsory_set(g: Graph) -> frozenset[int]:
    return compulsory_and_forbidden(g)[0]


def forbidden_set(g: Graph) -> frozenset[int]:
    return compulsory_and_forbidden(g)[1]


# -- independent oracle ----------------------------------------------------------

def _restricted_distance_ok(g: Graph, allowed: int, u: int, v: int, target: int) -> bool:
    """BFS from ``u`` inside ``allowed``; True iff ``v`` is reached in ``target`` steps."""
    nbr = g.nbr_masks
    seen = frontier = 1 << u
    goal = 1 << v
    for _ in range(target):
        grow = 0
        for w in members(frontier):
            grow |= nbr[w]
        frontier = grow & allowed & ~seen
        if frontier & goal:
            return True
        if not frontier:
            return False
        seen |= frontier
    return False


def oracle_is_tmv(g: Graph, x: int) -> bool:
    d = g.distances
    free = g.full_mask & ~x
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if d[u][v] >= 2 and not _restricted_distance_ok(g, free | (1 << u) | (1 << v), u, v, d[u][v]):
                return False
    return True


def brute_force_max_tmv(g: Graph, independent: bool = False) -> SolveResult:
    """Exhaustive scan: sizes from ``n`` down, subsets in lexicographic order.

    Independent of the branch-and-bound path; it uses restricted BFS rather
    than geodesic layers.  ``independent=True`` filters to independent sets.
    """
    require_connected(g)
    if g.n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force is limited to n <= {BRUTE_FORCE_LIMIT}, got {g.n}")
    checked = 0
    for k in range(g.n, -1, -1):
        for combo in itertools.combinations(range(g.n), k):
            x = mask_of(combo)
            if independent and any(g.nbr_masks[v] & x for v in combo):
                continue
            checked += 1
            if oracle_is_tmv(g, x):
                return SolveResult(k, frozenset(combo), checked)
    raise AssertionError("the empty set is always TMV")
