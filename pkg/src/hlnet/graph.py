"""Hypercube-like networks: construction, subcubes and basic graph queries.

Vertices are dense integers ``0 .. 2**n - 1``. A network built by joining a
left and a right half places the left half on the low ids and the right half
on ``2**(n-1)`` onwards, so every subcube reachable by repeatedly taking the
left child is simply ``range(2**r)``.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache

Edge = tuple[int, int]
EdgeSet = tuple[Edge, ...]

MAX_DIMENSION = 20
ISOMORPHISM_LIMIT = 10


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0 .. num_vertices - 1``.

    Edges are kept as a sorted tuple (lexicographic on ``(min, max)``) so they
    can be addressed by index, plus adjacency lists and neighbour bitmasks.
    """

    def __init__(self, num_vertices: int, edges: Iterable[Sequence[int]]):
        if num_vertices < 0:
            raise ValueError("num_vertices must be non-negative")
        normed = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(f"edge {(u, v)} has an unknown endpoint")
            key = _norm(u, v)
            if key in normed:
                raise ValueError(f"parallel edge {key}")
            normed.add(key)
        self._n_vertices = num_vertices
        self.edges: EdgeSet = tuple(sorted(normed))

    @property
    def num_vertices(self) -> int:
        return self._n_vertices

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        masks = [0] * self.num_vertices
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edge_index

    def index_of(self, u: int, v: int) -> int:
        try:
            return self.edge_index[_norm(u, v)]
        except KeyError:
            raise KeyError(f"{_norm(u, v)} is not an edge") from None

    def __repr__(self) -> str:
        return f"{type(self).__name__}(|V|={self.num_vertices}, |E|={self.num_edges})"


@dataclass(frozen=True)
class ConstructionTree:
    """How an HL-network was assembled.

    A leaf (``dimension == 0``) is K_1. An inner node joins ``left`` and
    ``right`` by ``matching``, where ``matching[i]`` is the right-local id
    paired with left-local vertex ``i``.
    """

    dimension: int
    left: ConstructionTree | None = None
    right: ConstructionTree | None = None
    matching: tuple[int, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.dimension == 0


LEAF = ConstructionTree(0)


class HLNetwork(Graph):
    """An n-dimensional hypercube-like network with its construction tree."""

    def __init__(self, dimension: int, edges: Iterable[Sequence[int]], tree: ConstructionTree):
        if not 0 <= dimension <= MAX_DIMENSION:
            raise ValueError(f"dimension must lie in [0, {MAX_DIMENSION}]")
        if tree.dimension != dimension:
            raise ValueError("construction tree dimension does not match")
        super().__init__(1 << dimension, edges)
        self.dimension = dimension
        self.tree = tree

    def __repr__(self) -> str:
        return f"HLNetwork(n={self.dimension}, |E|={self.num_edges})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HLNetwork):
            return NotImplemented
        return self.dimension == other.dimension and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.dimension, self.edges))

    def __getstate__(self):
        # cached_property values are cheap to rebuild; keep pickles small
        return {"dimension": self.dimension, "edges": self.edges, "tree": self.tree}

    def __setstate__(self, state):
        self.__init__(state["dimension"], state["edges"], state["tree"])


def _check_bijection(matching: Sequence[int], size: int) -> tuple[int, ...]:
    m = tuple(int(x) for x in matching)
    if len(m) != size or sorted(m) != list(range(size)):
        raise ValueError("matching is not a bijection between the two halves")
    return m


def compose(left: HLNetwork, right: HLNetwork, matching: Sequence[int]) -> HLNetwork:
    """Join two equal-dimension HL-networks by a perfect matching.

    ``matching[i]`` is the vertex of ``right`` paired with vertex ``i`` of
    ``left``. Right-half ids are shifted by ``2**left.dimension``.
    """
    if left.dimension != right.dimension:
        raise ValueError(
            f"dimension mismatch: {left.dimension} vs {right.dimension}"
        )
    half = left.num_vertices
    m = _check_bijection(matching, half)
    edges = list(left.edges)
    edges.extend((u + half, v + half) for u, v in right.edges)
    edges.extend((i, half + j) for i, j in enumerate(m))
    tree = ConstructionTree(left.dimension + 1, left.tree, right.tree, m)
    return HLNetwork(left.dimension + 1, edges, tree)


def k1() -> HLNetwork:
    return HLNetwork(0, (), LEAF)


@lru_cache(maxsize=None)
def build_hypercube(n: int) -> HLNetwork:
    """Q_n with n-bit labels; the top bit separates the two halves."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_DIMENSION:
        raise ValueError(f"n > {MAX_DIMENSION} exceeds the memory guard")
    if n == 0:
        return k1()
    half = build_hypercube(n - 1)
    return compose(half, half, range(half.num_vertices))


def build_random_hl(n: int, seed: int | random.Random) -> HLNetwork:
    """Random member of HL_n: both halves drawn recursively, matching shuffled.

    The same seed always yields the same network.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_DIMENSION:
        raise ValueError(f"n > {MAX_DIMENSION} exceeds the memory guard")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return _random_hl(n, rng)


def _random_hl(n: int, rng: random.Random) -> HLNetwork:
    if n == 0:
        return k1()
    left = _random_hl(n - 1, rng)
    right = _random_hl(n - 1, rng)
    matching = list(range(left.num_vertices))
    rng.shuffle(matching)
    return compose(left, right, matching)


def hl3_matching_classes() -> list[list[tuple[int, ...]]]:
    """Bucket all 24 matchings of C_4 (+) C_4 by isomorphism class of the result."""
    c4 = build_hypercube(2)
    classes: list[tuple[HLNetwork, list[tuple[int, ...]]]] = []
    for sigma in itertools.permutations(range(4)):
        g = compose(c4, c4, sigma)
        for rep, members in classes:
            if are_isomorphic(rep, g):
                members.append(sigma)
                break
        else:
            classes.append((g, [sigma]))
    return [members for _, members in classes]


@lru_cache(maxsize=None)
def build_crossed_cube_3() -> HLNetwork:
    """The member of HL_3 that is not isomorphic to Q_3.

    Realised as C_4 (+) C_4 under the lexicographically smallest matching
    whose result is not a 3-cube.
    """
    c4 = build_hypercube(2)
    q3 = build_hypercube(3)
    for sigma in itertools.permutations(range(4)):
        g = compose(c4, c4, sigma)
        if not are_isomorphic(g, q3):
            return g
    raise AssertionError("every matching of C_4 (+) C_4 gave Q_3")


def hl_from_edges(n: int, edges: Iterable[Sequence[int]]) -> HLNetwork:
    """Rebuild an HLNetwork (with its construction tree) from a dense edge list.

    Raises ValueError if the labelling is not a recursive half/half split
    joined by perfect matchings at every level.
    """
    plain = Graph(1 << n, edges)
    tree = _recover_tree(plain.edges, 0, n)
    return HLNetwork(n, plain.edges, tree)


def _recover_tree(edges: Sequence[Edge], offset: int, n: int) -> ConstructionTree:
    if n == 0:
        if edges:
            raise ValueError("leaf with edges")
        return LEAF
    half = 1 << (n - 1)
    mid = offset + half
    left, right, cross = [], [], []
    for u, v in edges:
        if v < mid:
            left.append((u, v))
        elif u >= mid:
            right.append((u, v))
        else:
            cross.append((u, v))
    matching = [-1] * half
    for u, v in cross:
        i, j = u - offset, v - mid
        if matching[i] != -1:
            raise ValueError(f"vertex {u} has two cross edges at dimension {n}")
        matching[i] = j
    if -1 in matching or len(set(matching)) != half:
        raise ValueError(f"cross edges at dimension {n} are not a perfect matching")
    return ConstructionTree(
        n,
        _recover_tree(left, offset, n - 1),
        _recover_tree(right, mid, n - 1),
        tuple(matching),
    )


@dataclass(frozen=True)
class SubcubeHandle:
    level: int
    vertices: tuple[int, ...]
    subtree: ConstructionTree

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for v in self.vertices:
            mask |= 1 << v
        return mask


def subcube(g: HLNetwork, r: int) -> SubcubeHandle:
    """The r-dimensional subcube reached by always descending into the left child."""
    if not 0 <= r <= g.dimension:
        raise ValueError(f"r={r} outside [0, {g.dimension}]")
    node = g.tree
    for _ in range(g.dimension - r):
        node = node.left
    return SubcubeHandle(r, tuple(range(1 << r)), node)


class MaskedGraph(Graph):
    """A host graph with some edges switched off.

    Nothing is copied up front; adjacency is derived lazily from the host's
    edge list on first use.
    """

    def __init__(self, host: Graph, removed: frozenset[int]):
        self.host = host
        self.removed = removed
        self._n_vertices = host.num_vertices

    @cached_property
    def edges(self) -> EdgeSet:  # type: ignore[override]
        rem = self.removed
        return tuple(e for i, e in enumerate(self.host.edges) if i not in rem)

    @property
    def removed_edges(self) -> EdgeSet:
        return tuple(self.host.edges[i] for i in sorted(self.removed))

    def __repr__(self) -> str:
        return f"MaskedGraph({self.host!r} - {len(self.removed)} edges)"


def _edge_indices(g: Graph, F: Iterable[Sequence[int]]) -> frozenset[int]:
    out = set()
    for e in F:
        u, v = int(e[0]), int(e[1])
        if not g.has_edge(u, v):
            raise KeyError(f"{_norm(u, v)} is not an edge of the graph")
        out.add(g.index_of(u, v))
    return frozenset(out)


def delete_edges(g: Graph, F: Iterable[Sequence[int]]) -> MaskedGraph:
    """View of ``g - F``; the original graph is left untouched."""
    if isinstance(g, MaskedGraph):
        return MaskedGraph(g.host, g.removed | _edge_indices(g.host, _check_present(g, F)))
    return MaskedGraph(g, _edge_indices(g, F))


def _check_present(g: Graph, F: Iterable[Sequence[int]]) -> list[Sequence[int]]:
    F = list(F)
    for e in F:
        if not g.has_edge(e[0], e[1]):
            raise KeyError(f"{_norm(e[0], e[1])} is not an edge of the graph")
    return F


def edge_boundary(g: Graph, X: Iterable[int]) -> EdgeSet:
    """Edges with exactly one endpoint in X."""
    xs = set()
    for x in X:
        if not 0 <= x < g.num_vertices:
            raise KeyError(f"unknown vertex {x}")
        xs.add(x)
    return tuple(e for e in g.edges if (e[0] in xs) != (e[1] in xs))


def induced_edge_count(g: Graph, X: Iterable[int]) -> int:
    xs = set(X)
    return sum(1 for u, v in g.edges if u in xs and v in xs)


def min_degree(g: Graph) -> int:
    if g.num_vertices == 0:
        raise ValueError("empty graph has no minimum degree")
    return min(g.degrees())


def component_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by lowest vertex."""
    return components_of_masks(g.nbr_masks)


def components_of_masks(masks: Sequence[int]) -> list[int]:
    remaining = (1 << len(masks)) - 1
    comps = []
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= masks[v]
            frontier = reach & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def component_sizes(g: Graph) -> list[int]:
    return sorted(c.bit_count() for c in component_masks(g))


def largest_component_size(g: Graph) -> int:
    sizes = component_sizes(g)
    return sizes[-1] if sizes else 0


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exhaustive backtracking isomorphism test for graphs of at most 10 vertices."""
    if max(g.num_vertices, h.num_vertices) > ISOMORPHISM_LIMIT:
        raise ValueError(f"isomorphism test limited to {ISOMORPHISM_LIMIT} vertices")
    if g.num_vertices != h.num_vertices or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.num_vertices
    gm, hm = g.nbr_masks, h.nbr_masks
    gdeg, hdeg = g.degrees(), h.degrees()
    # high-degree, well-connected vertices first keeps the search shallow
    order = sorted(range(n), key=lambda v: -gdeg[v])
    image = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used >> w & 1 or hdeg[w] != gdeg[v]:
                continue
            ok = True
            for j in range(k):
                x = order[j]
                if (gm[v] >> x & 1) != (hm[w] >> image[x] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    return extend(0)
