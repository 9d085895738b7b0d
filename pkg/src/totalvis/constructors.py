"""Graph products and deterministic family generators.

Product vertex ``(g, h)`` always gets id ``g * n(H) + h`` (row-major), and
iterated products associate to the left.  Join and corona place the first
operand's vertices first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import networkx as nx

from .errors import BadParameter
from .graph import Graph, build_graph, is_connected

# Figure labelings: position in the tuple is the vertex id.
FIGURE1_LABELS = ("u", "u1", "u2", "u3", "u4", "u5", "v", "h", "i", "j", "k", "l")
FIGURE2_LABELS = tuple("abcdefghijk")
FIGURE3_LABELS = tuple("abcdefghijklm")

_FIGURE1_EDGES = [
    ("u", "u1"), ("u1", "u2"), ("u2", "u3"), ("u3", "u4"), ("u4", "u5"), ("u5", "v"),
    ("v", "h"), ("h", "i"), ("i", "j"), ("j", "k"), ("k", "l"), ("l", "u"),
    ("u1", "l"), ("u2", "k"), ("u3", "j"), ("u4", "i"), ("u5", "h"),
]
_FIGURE2_EDGES = [
    ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "g"),
    ("f", "h"), ("h", "i"), ("i", "j"), ("j", "b"),
    ("c", "k"), ("k", "h"), ("e", "k"), ("k", "j"),
]
_FIGURE3_EDGES = _FIGURE2_EDGES + [("c", "l"), ("l", "h"), ("e", "m"), ("m", "j")]

FAMILIES = (
    "path", "cycle", "complete", "star", "complete_bipartite", "random_tree",
    "random_connected", "random_block", "crown", "bowtie",
    "figure1", "figure2", "figure3", "figure4_host",
)


def _labelled(labels: tuple[str, ...], edges) -> Graph:
    index = {name: i for i, name in enumerate(labels)}
    return build_graph(len(labels), [(index[a], index[b]) for a, b in edges])


def ids_of(labels: tuple[str, ...], names) -> frozenset[int]:
    """Map figure vertex names to ids, e.g. ``ids_of(FIGURE2_LABELS, "adgi")``."""
    index = {name: i for i, name in enumerate(labels)}
    return frozenset(index[x] for x in names)


# -- products ----------------------------------------------------------------

def cartesian_product(g: Graph, h: Graph) -> Graph:
    k = h.n
    edges = []
    for x in g.vertices():
        for a, b in h.edges:
            edges.append((x * k + a, x * k + b))
    for a, b in g.edges:
        for y in h.vertices():
            edges.append((a * k + y, b * k + y))
    return build_graph(g.n * k, edges)


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    k = h.n
    edges = []
    for x in g.vertices():
        for a, b in h.edges:
            edges.append((x * k + a, x * k + b))
    for a, b in g.edges:
        for y in h.vertices():
            for y2 in h.vertices():
                edges.append((a * k + y, b * k + y2))
    return build_graph(g.n * k, edges)


def join_graph(g: Graph, h: Graph) -> Graph:
    off = g.n
    edges = list(g.edges)
    edges += [(a + off, b + off) for a, b in h.edges]
    edges += [(x, off + y) for x in g.vertices() for y in h.vertices()]
    return build_graph(g.n + h.n, edges)


def corona_product(g: Graph, h: Graph) -> Graph:
    """Copy ``i`` of ``h`` occupies ids ``n(G) + i*n(H) .. n(G) + (i+1)*n(H) - 1``."""
    edges = list(g.edges)
    for i in g.vertices():
        base = g.n + i * h.n
        edges += [(base + a, base + b) for a, b in h.edges]
        edges += [(i, base + y) for y in h.vertices()]
    return build_graph(g.n * (1 + h.n), edges)


def product_vertex(g_vertex: int, h_vertex: int, h_order: int) -> int:
    return g_vertex * h_order + h_vertex


def product_pair(vertex: int, h_order: int) -> tuple[int, int]:
    return divmod(vertex, h_order)


# -- families ----------------------------------------------------------------

def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return build_graph(n, [])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def crown(n: int) -> Graph:
    """Cycle v_0..v_{n-1} (ids 0..n-1) plus u_i (id n+i) adjacent to v_i and v_{i+1}."""
    if n < 3:
        raise BadParameter(f"crown needs a cycle host with n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges += [(n + i, i), (n + i, (i + 1) % n)]
    return build_graph(2 * n, edges)


def prufer_decode(seq: list[int], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return build_graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise BadParameter("random_tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def random_connected(n: int, seed: int, p: float = 0.5) -> Graph:
    """Erdos-Renyi G(n, p) resampled until connected."""
    if n < 1 or not 0.0 < p <= 1.0:
        raise BadParameter(f"random_connected needs n >= 1 and 0 < p <= 1, got n={n}, p={p}")
    rng = random.Random(seed)
    while True:
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = build_graph(n, edges)
        if is_connected(g):
            return g


def random_block(blocks: int, max_size: int, seed: int) -> Graph:
    """Tree of ``blocks`` cliques (sizes 2..max_size) glued at cut vertices."""
    if blocks < 1 or max_size < 2:
        raise BadParameter("random_block needs blocks >= 1 and max_size >= 2")
    rng = random.Random(seed)
    size = rng.randint(2, max_size)
    edges = list(combinations(range(size), 2))
    n = size
    for _ in range(blocks - 1):
        anchor = rng.randrange(n)
        size = rng.randint(2, max_size)
        members = [anchor] + list(range(n, n + size - 1))
        edges += combinations(members, 2)
        n += size - 1
    return build_graph(n, edges)


def figure1() -> Graph:
    return _labelled(FIGURE1_LABELS, _FIGURE1_EDGES)


def figure2() -> Graph:
    return _labelled(FIGURE2_LABELS, _FIGURE2_EDGES)


def figure3() -> Graph:
    return _labelled(FIGURE3_LABELS, _FIGURE3_EDGES)


def figure4_host() -> Graph:
    return cartesian_product(cartesian_product(complete(3), complete(3)), complete(2))


def free_trees(n: int) -> Iterator[Graph]:
    """All non-isomorphic trees of order ``n``."""
    if n == 1:
        yield build_graph(1, [])
        return
    for t in nx.nonisomorphic_trees(n):
        yield build_graph(n, t.edges())


def connected_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices (no isomorphism reduction)."""
    slots = list(combinations(range(n), 2))
    for bits in range(1 << len(slots)):
        if bits.bit_count() < n - 1:
            continue
        g = build_graph(n, [e for i, e in enumerate(slots) if bits >> i & 1])
        if is_connected(g):
            yield g


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its size parameters.

    ``n`` is the main order parameter (leaves for ``star``, block count for
    ``random_block``, host cycle order for ``crown``); ``m`` is the second
    part size for ``complete_bipartite`` and the maximum block size for
    ``random_block``.
    """

    family: str
    n: int | None = None
    m: int | None = None
    seed: int = 0
    p: float = 0.5


def generate(spec: FamilySpec) -> Graph:
    fam, n, m = spec.family, spec.n, spec.m
    fixed = {
        "figure1": figure1, "figure2": figure2, "figure3": figure3,
        "figure4_host": figure4_host, "bowtie": bowtie,
    }
    if fam in fixed:
        return fixed[fam]()
    if fam not in FAMILIES:
        raise BadParameter(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
    if n is None or n < 1:
        raise BadParameter(f"family {fam!r} needs a positive n")
    if fam == "path":
        return path(n)
    if fam == "cycle":
        return cycle(n)
    if fam == "complete":
        return complete(n)
    if fam == "star":
        return star(n)
    if fam == "complete_bipartite":
        if m is None or m < 1:
            raise BadParameter("complete_bipartite needs a positive m")
        return complete_bipartite(n, m)
    if fam == "crown":
        return crown(n)
    if fam == "random_tree":
        return random_tree(n, spec.seed)
    if fam == "random_connected":
        return random_connected(n, spec.seed, spec.p)
    # random_block
    return random_block(n, 3 if m is None else m, spec.seed)
