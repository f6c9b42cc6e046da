"""Edge-disjoint paths, minimum edge cuts and the strong Menger edge test.

Each undirected edge carries one unit of capacity usable in either
direction. Two flow engines live here:

* :func:`max_edge_disjoint_paths` works on explicit edge indices and returns
  a certified path family together with a minimum cut.
* :func:`flow_value_masks` works on neighbour bitmasks and returns only the
  value and the source side of a minimum cut. It is the inner loop of the
  all-pairs (Gusfield tree) computation used by :func:`is_sm_lambda`.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field

from .graph import Edge, EdgeSet, Graph, components_of_masks


@dataclass
class FlowResult:
    source: int
    sink: int
    value: int
    paths: list[list[int]] = field(default_factory=list)
    cut: EdgeSet = ()

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "sink": self.sink,
            "value": self.value,
            "paths": self.paths,
            "cut": [list(e) for e in self.cut],
        }


@dataclass
class SmLambdaReport:
    verdict: bool
    counterexample: tuple[int, int, int, int] | None = None
    pairs_checked: int = 0

    def to_dict(self) -> dict:
        cx = None
        if self.counterexample is not None:
            u, v, flow, need = self.counterexample
            cx = {"u": u, "v": v, "flow": flow, "min_degree": need}
        return {"verdict": self.verdict, "counterexample": cx, "pairs_checked": self.pairs_checked}


def _check_pair(graph: Graph, u: int, v: int) -> None:
    n = graph.num_vertices
    if not (0 <= u < n and 0 <= v < n):
        raise KeyError(f"vertex pair ({u}, {v}) not in graph")
    if u == v:
        raise ValueError("source and sink must differ")


def max_edge_disjoint_paths(graph: Graph, u: int, v: int) -> FlowResult:
    """Maximum set of pairwise edge-disjoint u-v paths, with a matching minimum cut."""
    _check_pair(graph, u, v)
    edges = graph.edges
    inc = graph.incidence
    # flow[i] = +1 if edge i carries flow from its low to its high end, -1 reversed
    flow = [0] * len(edges)
    n = graph.num_vertices
    value = 0
    while True:
        pred = [-1] * n  # edge index used to reach each vertex
        seen = [False] * n
        seen[u] = True
        queue = deque([u])
        while queue and not seen[v]:
            x = queue.popleft()
            for i in inc[x]:
                a, b = edges[i]
                if x == a:
                    y, ok = b, flow[i] < 1
                else:
                    y, ok = a, flow[i] > -1
                if ok and not seen[y]:
                    seen[y] = True
                    pred[y] = i
                    queue.append(y)
        if not seen[v]:
            break
        y = v
        while y != u:
            i = pred[y]
            a, b = edges[i]
            if y == b:
                flow[i] += 1
                y = a
            else:
                flow[i] -= 1
                y = b
        value += 1

    cut = tuple(e for e in edges if seen[e[0]] != seen[e[1]])
    paths = _decompose(edges, inc, flow, u, v, value)
    return FlowResult(u, v, value, paths, cut)


def _decompose(edges, inc, flow, s, t, value) -> list[list[int]]:
    """Split a unit edge flow into s-t paths, dropping any circulations."""
    flow = list(flow)
    paths = []
    for _ in range(value):
        path = [s]
        pos = {s: 0}
        x = s
        while x != t:
            for i in inc[x]:
                a, b = edges[i]
                if x == a and flow[i] == 1:
                    y = b
                    break
                if x == b and flow[i] == -1:
                    y = a
                    break
            else:  # pragma: no cover - conservation guarantees an exit
                raise AssertionError("flow conservation violated")
            flow[i] = 0
            if y in pos:
                # cycle closed: cut it out, its edges stay consumed
                k = pos[y]
                for z in path[k + 1 :]:
                    del pos[z]
                path = path[: k + 1]
            else:
                path.append(y)
                pos[y] = len(path) - 1
            x = y
        paths.append(path)
    return paths


def min_edge_cut(graph: Graph, u: int, v: int) -> EdgeSet:
    return max_edge_disjoint_paths(graph, u, v).cut


def verify_flow_result(graph: Graph, res: FlowResult) -> None:
    """Raise AssertionError unless ``res`` is a consistent Menger certificate."""
    assert len(res.paths) == res.value == len(res.cut), "paths/cut/value disagree"
    seen: set[Edge] = set()
    for p in res.paths:
        assert p[0] == res.source and p[-1] == res.sink, "path endpoints wrong"
        for a, b in zip(p, p[1:]):
            e = (a, b) if a < b else (b, a)
            assert graph.has_edge(*e), f"path uses missing edge {e}"
            assert e not in seen, f"edge {e} used twice"
            seen.add(e)
    cut = set(res.cut)
    for e in cut:
        assert graph.has_edge(*e), f"cut edge {e} not in graph"
    # removing the cut separates source from sink
    reach = {res.source}
    stack = [res.source]
    while stack:
        x = stack.pop()
        for y in graph.neighbors(x):
            e = (x, y) if x < y else (y, x)
            if e not in cut and y not in reach:
                reach.add(y)
                stack.append(y)
    assert res.sink not in reach, "cut does not separate source from sink"


def flow_value_masks(adj: Sequence[int], s: int, t: int) -> tuple[int, int]:
    """Unit edge-capacity max flow on neighbour bitmasks.

    Returns ``(value, source_side)`` where ``source_side`` is the bitmask of
    vertices reachable from ``s`` in the final residual graph.
    """
    res = list(adj)
    parent = [0] * len(adj)
    value = 0
    tbit = 1 << t
    while True:
        visited = 1 << s
        frontier = [s]
        while frontier and not visited & tbit:
            nxt = []
            for x in frontier:
                new = res[x] & ~visited
                if new:
                    visited |= new
                    while new:
                        low = new & -new
                        y = low.bit_length() - 1
                        parent[y] = x
                        nxt.append(y)
                        new ^= low
            frontier = nxt
        if not visited & tbit:
            return value, visited
        y = t
        while y != s:
            x = parent[y]
            if res[y] >> x & 1:
                # edge was idle: x->y now saturated, y->x gains capacity
                res[x] &= ~(1 << y)
            else:
                # cancels flow previously sent y->x
                res[y] |= 1 << x
            y = x
        value += 1


def gusfield_tree(adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Flow-equivalent tree: vertex i > 0 hangs off ``parent[i]`` with weight ``weight[i]``."""
    n = len(adj)
    parent = [0] * n
    weight = [0] * n
    for i in range(1, n):
        p = parent[i]
        val, side = flow_value_masks(adj, i, p)
        weight[i] = val
        for j in range(i + 1, n):
            if parent[j] == p and side >> j & 1:
                parent[j] = i
    return parent, weight


def all_pairs_flow_masks(adj: Sequence[int]) -> list[list[int]]:
    """Matrix of u-v edge-disjoint path counts for every pair (diagonal 0)."""
    n = len(adj)
    parent, weight = gusfield_tree(adj)
    tree: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i in range(1, n):
        tree[i].append((parent[i], weight[i]))
        tree[parent[i]].append((i, weight[i]))
    big = n * n + 1
    out = [[0] * n for _ in range(n)]
    for u in range(n):
        row = out[u]
        stack = [(u, -1, big)]
        while stack:
            x, prev, m = stack.pop()
            if x != u:
                row[x] = m
            for y, w in tree[x]:
                if y != prev:
                    stack.append((y, x, m if m < w else w))
    return out


def all_pairs_flow(graph: Graph) -> list[list[int]]:
    return all_pairs_flow_masks(graph.nbr_masks)


def sm_lambda_masks(adj: Sequence[int]) -> SmLambdaReport:
    """Strong Menger edge test on neighbour bitmasks (see :func:`is_sm_lambda`)."""
    n = len(adj)
    deg = [a.bit_count() for a in adj]
    comps = components_of_masks(adj)
    if len(comps) > 1:
        checked = 0
        for u in range(n):
            for v in range(u + 1, n):
                checked += 1
                if not any(c >> u & 1 and c >> v & 1 for c in comps):
                    return SmLambdaReport(False, (u, v, 0, min(deg[u], deg[v])), checked)
    flows = all_pairs_flow_masks(adj)
    checked = 0
    for u in range(n):
        row = flows[u]
        du = deg[u]
        for v in range(u + 1, n):
            checked += 1
            need = du if du < deg[v] else deg[v]
            if row[v] < need:
                return SmLambdaReport(False, (u, v, row[v], need), checked)
    return SmLambdaReport(True, None, checked)


def is_sm_lambda(graph: Graph) -> SmLambdaReport:
    """Does every pair u, v have min(deg u, deg v) edge-disjoint paths?

    Disconnected graphs fail with the first cross-component pair. The
    counterexample, when present, is the first failing pair in ascending
    ``(u, v)`` order, reported as ``(u, v, flow, min_degree)``.
    """
    return sm_lambda_masks(graph.nbr_masks)


def edge_connectivity(graph: Graph) -> int:
    n = graph.num_vertices
    if n < 2:
        raise ValueError("edge connectivity needs at least 2 vertices")
    adj = graph.nbr_masks
    best = None
    for v in range(1, n):
        val, _ = flow_value_masks(adj, 0, v)
        if best is None or val < best:
            best = val
    return best

