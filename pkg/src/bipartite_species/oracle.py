"""Brute-force enumeration of small unlabeled graphs.

Adjacency is a bitset over vertex pairs ``(i, j)``, ``i < j``, taken in
lexicographic order; pair number 0 is the most significant bit, so integer
comparison of bitsets is lexicographic comparison along the pair order.
Unlabeled structures are counted as orbits of the symmetric group, found by
applying every relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

MAX_VERTICES = 8
DEFAULT_LIMIT = 6
OPT_IN_LIMIT = 7

FAMILIES = (
    "bicolored",
    "connected-bicolored",
    "bicolored-tau-symmetric",
    "bipartite",
    "connected-bipartite",
    "bipartite-block",
)


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_bits(n: int) -> dict[tuple[int, int], int]:
    pairs = vertex_pairs(n)
    m = len(pairs)
    return {p: 1 << (m - 1 - k) for k, p in enumerate(pairs)}


@dataclass(frozen=True)
class SmallGraph:
    n: int
    adjacency: int = 0

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"SmallGraph supports 0..{MAX_VERTICES} vertices, got {self.n}")
        if not 0 <= self.adjacency < 1 << len(vertex_pairs(self.n)):
            raise ValueError("adjacency bitset out of range")

    @classmethod
    def from_edges(cls, n: int, edges) -> "SmallGraph":
        bits = _pair_bits(n)
        adj = 0
        for u, v in edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            adj |= bits[(min(u, v), max(u, v))]
        return cls(n, adj)

    def edges(self) -> list[tuple[int, int]]:
        return [p for p, bit in _pair_bits(self.n).items() if self.adjacency & bit]

    def neighbor_masks(self) -> list[int]:
        masks = [0] * self.n
        for u, v in self.edges():
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def relabel(self, perm) -> "SmallGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return SmallGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


@dataclass(frozen=True)
class ColoredSmallGraph:
    graph: SmallGraph
    colors: int  # bit v set means vertex v is black

    def __post_init__(self):
        for u, v in self.graph.edges():
            if (self.colors >> u & 1) == (self.colors >> v & 1):
                raise ValueError(f"edge {(u, v)} joins two vertices of the same color")


def _reach(masks: list[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        v = 0
        f = frontier
        while f:
            if f & 1:
                nxt |= masks[v]
            f >>= 1
            v += 1
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _connected(masks: list[int], allowed: int) -> bool:
    if not allowed:
        return False
    start = (allowed & -allowed).bit_length() - 1
    return _reach(masks, start, allowed) == allowed


def is_connected(g: SmallGraph) -> bool:
    """The empty graph on zero vertices is not connected."""
    return _connected(g.neighbor_masks(), (1 << g.n) - 1)


def is_bipartite(g: SmallGraph) -> bool:
    masks = g.neighbor_masks()
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in range(g.n):
                if masks[u] >> v & 1:
                    if color[v] < 0:
                        color[v] = 1 - color[u]
                        stack.append(v)
                    elif color[v] == color[u]:
                        return False
    return True


def is_two_connected(g: SmallGraph) -> bool:
    """No cut vertex; K1 and K2 count as nonseparable."""
    masks = g.neighbor_masks()
    everyone = (1 << g.n) - 1
    if not _connected(masks, everyone):
        return False
    if g.n <= 2:
        return True
    return all(_connected(masks, everyone & ~(1 << v)) for v in range(g.n))


# -- relabelings ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _pair_permutations(n: int) -> tuple[tuple[int, ...], ...]:
    """For every vertex permutation, the image bit of each pair bit (MSB first)."""
    bits = _pair_bits(n)
    pairs = vertex_pairs(n)
    return tuple(
        tuple(bits[tuple(sorted((perm[u], perm[v])))] for u, v in pairs)
        for perm in permutations(range(n))
    )


def _apply(pair_perm: tuple[int, ...], adjacency: int, m: int) -> int:
    out = 0
    for k in range(m):
        if adjacency >> (m - 1 - k) & 1:
            out |= pair_perm[k]
    return out


def _check_size(n: int, limit: int = MAX_VERTICES) -> None:
    if not 0 <= n <= limit:
        raise ValueError(f"brute force is limited to 0..{limit} vertices, got {n}")


def canonical_form(g: SmallGraph) -> int:
    """Smallest adjacency bitset over all relabelings of ``g``."""
    _check_size(g.n)
    m = len(vertex_pairs(g.n))
    return min(_apply(pp, g.adjacency, m) for pp in _pair_permutations(g.n))


def _graph_orbit(adjacency: int, n: int) -> set[int]:
    m = len(vertex_pairs(n))
    return {_apply(pp, adjacency, m) for pp in _pair_permutations(n)}


def _color_permutations(n: int):
    return [tuple(1 << p for p in perm) for perm in permutations(range(n))]


def _permute_colors(color_perm: tuple[int, ...], colors: int) -> int:
    out = 0
    for v, bit in enumerate(color_perm):
        if colors >> v & 1:
            out |= bit
    return out


def canonical_colored_form(g: ColoredSmallGraph) -> tuple[int, int]:
    """Smallest ``(colors, adjacency)`` over relabelings that carry the colors along."""
    n = g.graph.n
    _check_size(n)
    m = len(vertex_pairs(n))
    return min(
        (_permute_colors(cp, g.colors), _apply(pp, g.graph.adjacency, m))
        for cp, pp in zip(_color_permutations(n), _pair_permutations(n))
    )


# -- orbit counting ---------------------------------------------------------------

def _count_graphs(n: int, predicate) -> int:
    m = len(vertex_pairs(n))
    seen: set[int] = set()
    count = 0
    for adj in range(1 << m):
        if adj in seen or not predicate(SmallGraph(n, adj)):
            continue
        seen |= _graph_orbit(adj, n)
        count += 1
    return count


def _cross_mask(n: int, colors: int) -> int:
    return sum(
        bit for (u, v), bit in _pair_bits(n).items() if (colors >> u & 1) != (colors >> v & 1)
    )


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _count_bicolored(n: int, connected_only: bool, reversible_only: bool) -> int:
    m = len(vertex_pairs(n))
    everyone = (1 << n) - 1
    color_perms = _color_permutations(n)
    pair_perms = _pair_permutations(n)
    seen: set[tuple[int, int]] = set()
    count = 0
    for colors in range(1 << n):
        for adj in _submasks(_cross_mask(n, colors)):
            if (colors, adj) in seen:
                continue
            orbit = {
                (_permute_colors(cp, colors), _apply(pp, adj, m))
                for cp, pp in zip(color_perms, pair_perms)
            }
            seen |= orbit
            if connected_only and not is_connected(SmallGraph(n, adj)):
                continue
            if reversible_only and (everyone & ~colors, adj) not in orbit:
                continue
            count += 1
    return count


def oracle_count(family: str, n: int, allow_seven: bool = False) -> int:
    """Number of unlabeled structures of ``family`` on ``n`` vertices.

    ``n`` is limited to 6, or 7 with ``allow_seven``. The
    ``bicolored-tau-symmetric`` family counts unlabeled bicolored graphs
    that are isomorphic to their color-swapped version.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    _check_size(n, OPT_IN_LIMIT if allow_seven else DEFAULT_LIMIT)
    if family == "bicolored":
        return _count_bicolored(n, False, False)
    if family == "connected-bicolored":
        return _count_bicolored(n, True, False)
    if family == "bicolored-tau-symmetric":
        return _count_bicolored(n, False, True)
    if family == "bipartite":
        return _count_graphs(n, is_bipartite)
    if family == "connected-bipartite":
        return _count_graphs(n, lambda g: is_bipartite(g) and is_connected(g))
    return _count_graphs(n, lambda g: is_bipartite(g) and is_two_connected(g))
