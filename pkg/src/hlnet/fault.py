"""Conditional edge faults and the fault tolerance of the strong Menger property.

A fault set F is admissible for residual bound r when every vertex keeps at
least r surviving edges. ``sm_lambda^r(G)`` is the largest m such that every
admissible F with |F| <= m leaves G - F strongly Menger edge connected; for
HL-networks with n >= 3 and 1 <= r <= n - 2 its value is 2**r (n - r) - n.

Exhaustive searches enumerate fault sets as k-combinations of edge indices
in lexicographic order, split into tasks by their first edge index. Tasks
are consumed in order, so the reported breaking set is always the
lexicographically smallest one regardless of the worker count.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .bounds import DEFAULT_SUBSET_BUDGET, BudgetExceeded
from .graph import (
    EdgeSet,
    Graph,
    HLNetwork,
    SubcubeHandle,
    components_of_masks,
    delete_edges,
    subcube,
)
from .menger import FlowResult, max_edge_disjoint_paths, sm_lambda_masks, verify_flow_result

SAMPLING_RETRY_FACTOR = 100


class WitnessError(RuntimeError):
    """The extremal construction failed one of its own certificates."""


def paper_value(n: int, r: int) -> int:
    """2**r (n - r) - n, the exact tolerance for n >= 3 and 1 <= r <= n - 2."""
    if n < 3 or not 1 <= r <= n - 2:
        raise ValueError(f"(n={n}, r={r}) is outside 1 <= r <= n-2, n >= 3")
    return (1 << r) * (n - r) - n


def reference_value(n: int, r: int) -> tuple[int, str]:
    """Known tolerance value together with where it comes from.

    ``r = 0`` gives the previously published n - 2 (n >= 4), which is not
    covered by the general formula and is never verified here.
    """
    if r == 0 and n >= 4:
        return n - 2, "reference value for r=0, outside theorem scope"
    return paper_value(n, r), "theorem"


@dataclass(frozen=True)
class ConditionalFaultModel:
    r: int
    m: int

    def admits(self, graph: Graph, F: Sequence) -> bool:
        return len(F) <= self.m and admissible(graph, F, self.r)


def admissible(graph: Graph, F: Iterable, r: int) -> bool:
    """True iff every vertex keeps at least r edges after removing F."""
    deg = graph.degrees()
    for e in F:
        u, v = int(e[0]), int(e[1])
        if not graph.has_edge(u, v):
            raise KeyError(f"{(u, v)} is not an edge of the graph")
        deg[u] -= 1
        deg[v] -= 1
    return min(deg, default=r) >= r


@dataclass
class SearchResult:
    mode: str
    r: int
    m: int
    verdict: str  # "holds" | "refuted" | "not found"
    breaking_set: EdgeSet | None = None
    counterexample: tuple[int, int, int, int] | None = None
    sets_examined: int = 0
    starved: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        cx = None
        if self.counterexample is not None:
            u, v, flow, need = self.counterexample
            cx = {"u": u, "v": v, "flow": flow, "min_degree": need}
        return {
            "mode": self.mode,
            "r": self.r,
            "m": self.m,
            "verdict": self.verdict,
            "breaking_set": None if self.breaking_set is None else [list(e) for e in self.breaking_set],
            "counterexample": cx,
            "sets_examined": self.sets_examined,
            "starved": self.starved,
            "note": self.note,
        }


# -- exhaustive enumeration --------------------------------------------------


def _scan_task(args) -> tuple[int, tuple[int, ...] | None, tuple | None]:
    """Check every admissible k-set whose smallest edge index is ``first``.

    Returns ``(sets_examined, breaking_indices, counterexample)`` and stops
    at the first (lexicographically smallest) breaking set.
    """
    adj, edges, r, k, first = args
    masks = list(adj)
    deg = [m.bit_count() for m in masks]
    n_edges = len(edges)
    combo = [first]
    examined = 0

    def drop(i: int) -> bool:
        a, b = edges[i]
        if deg[a] <= r or deg[b] <= r:
            return False
        masks[a] ^= 1 << b
        masks[b] ^= 1 << a
        deg[a] -= 1
        deg[b] -= 1
        return True

    def restore(i: int) -> None:
        a, b = edges[i]
        masks[a] ^= 1 << b
        masks[b] ^= 1 << a
        deg[a] += 1
        deg[b] += 1

    def walk(start: int, depth: int):
        nonlocal examined
        if depth == k:
            examined += 1
            rep = sm_lambda_masks(masks)
            return None if rep.verdict else rep.counterexample
        for i in range(start, n_edges - (k - depth) + 1):
            if not drop(i):
                continue
            combo.append(i)
            found = walk(i + 1, depth + 1)
            if found is not None:
                return found
            combo.pop()
            restore(i)
        return None

    if not drop(first):
        return 0, None, None
    found = walk(first + 1, 1)
    if found is None:
        return examined, None, None
    return examined, tuple(combo), found


def _first_break_of_size(graph: Graph, r: int, k: int, workers: int = 1):
    """Lexicographically smallest admissible breaking set of size exactly k."""
    adj = graph.nbr_masks
    edges = graph.edges
    if k == 0:
        rep = sm_lambda_masks(adj) if min(graph.degrees(), default=r) >= r else None
        if rep is None:
            return 0, None, None
        return 1, (None if rep.verdict else ()), rep.counterexample
    tasks = [(adj, edges, r, k, first) for first in range(len(edges) - k + 1)]
    examined = 0
    if workers <= 1:
        for t in tasks:
            n_seen, combo, cx = _scan_task(t)
            examined += n_seen
            if combo is not None:
                return examined, combo, cx
        return examined, None, None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        window = 2 * workers
        pending = [pool.submit(_scan_task, t) for t in tasks[:window]]
        nxt = window
        while pending:
            n_seen, combo, cx = pending.pop(0).result()
            examined += n_seen
            if combo is not None:
                for fut in pending:
                    fut.cancel()
                return examined, combo, cx
            if nxt < len(tasks):
                pending.append(pool.submit(_scan_task, tasks[nxt]))
                nxt += 1
    return examined, None, None


def _subset_count(n_edges: int, m: int) -> int:
    return sum(comb(n_edges, k) for k in range(m + 1))


def _default_m(graph: Graph, r: int, extra: int = 0) -> int:
    n = getattr(graph, "dimension", None)
    if n is None:
        raise ValueError("m must be given explicitly for graphs without a dimension")
    return reference_value(n, r)[0] + extra


def _exhaustive(graph: Graph, r: int, m: int, workers: int) -> SearchResult:
    examined = 0
    for k in range(m + 1):
        n_seen, combo, cx = _first_break_of_size(graph, r, k, workers)
        examined += n_seen
        if combo is not None:
            F = tuple(graph.edges[i] for i in combo)
            return SearchResult("exhaustive", r, m, "refuted", F, cx, examined)
    return SearchResult("exhaustive", r, m, "holds", None, None, examined)


def _sample_sets(graph: Graph, r: int, size: int, samples: int, seed: int):
    """Yield admissible edge-index sets of the given size, uniformly by rejection."""
    rng = random.Random(seed)
    n_edges = graph.num_edges
    base = graph.degrees()
    found = 0
    for _ in range(SAMPLING_RETRY_FACTOR * samples):
        if found == samples:
            return
        pick = sorted(rng.sample(range(n_edges), size))
        deg = list(base)
        for i in pick:
            a, b = graph.edges[i]
            deg[a] -= 1
            deg[b] -= 1
        if min(deg) >= r:
            found += 1
            yield pick


def _sampled(graph: Graph, r: int, m: int, samples: int, seed: int) -> SearchResult:
    adj = graph.nbr_masks
    examined = 0
    size = min(m, graph.num_edges)
    for pick in _sample_sets(graph, r, size, samples, seed):
        masks = list(adj)
        for i in pick:
            a, b = graph.edges[i]
            masks[a] ^= 1 << b
            masks[b] ^= 1 << a
        examined += 1
        rep = sm_lambda_masks(masks)
        if not rep.verdict:
            F = tuple(graph.edges[i] for i in pick)
            return SearchResult("sampled", r, m, "refuted", F, rep.counterexample, examined)
    starved = examined < samples
    note = "sampled evidence only, not a proof"
    if starved:
        note += f"; sampling starved after {SAMPLING_RETRY_FACTOR * samples} draws"
    return SearchResult("sampled", r, m, "holds", None, None, examined, starved, note)


def verify_lower_bound(
    graph: Graph,
    r: int,
    m: int | None = None,
    mode: str = "exhaustive",
    samples: int = 1000,
    seed: int | None = None,
    budget: int = DEFAULT_SUBSET_BUDGET,
    workers: int = 1,
) -> SearchResult:
    """Check that no admissible fault set of size <= m breaks the strong Menger property.

    ``m`` defaults to 2**r (n - r) - n. Exhaustive mode visits every edge
    subset of size <= m (pruning inadmissible branches); sampled mode draws
    ``samples`` admissible sets of size exactly m.
    """
    if m is None:
        m = _default_m(graph, r)
    if m < 0:
        raise ValueError("m must be non-negative")
    if mode == "exhaustive":
        total = _subset_count(graph.num_edges, m)
        if total > budget:
            raise BudgetExceeded(f"{total} fault sets exceed budget {budget}")
        return _exhaustive(graph, r, m, workers)
    if mode == "sampled":
        if seed is None:
            raise ValueError("sampled mode needs a seed")
        return _sampled(graph, r, m, samples, seed)
    raise ValueError(f"unknown mode {mode!r}")


def find_breaking_fault_set(
    graph: Graph,
    r: int,
    m: int | None = None,
    samples: int = 1000,
    seed: int | None = None,
    budget: int = DEFAULT_SUBSET_BUDGET,
    workers: int = 1,
) -> SearchResult:
    """Look for an admissible F with |F| <= m such that G - F is not strongly Menger.

    The extremal construction is tried first; enumeration (or sampling, if
    enumeration would exceed the budget and a seed is given) is the fallback.
    Failure to find one is reported as "not found", never as a proof of
    nonexistence.
    """
    if m is None:
        m = _default_m(graph, r, extra=1)
    n = getattr(graph, "dimension", None)
    if isinstance(graph, HLNetwork) and n >= 3 and 1 <= r <= n - 2:
        w = extremal_witness(graph, r)
        if len(w.F) <= m:
            cx = (w.u, w.v, w.flow_value, n) if w.u < w.v else (w.v, w.u, w.flow_value, n)
            return SearchResult("witness", r, m, "refuted", w.F, cx, 1)
    if _subset_count(graph.num_edges, m) <= budget:
        res = _exhaustive(graph, r, m, workers)
    elif seed is not None:
        res = _sampled(graph, r, m, samples, seed)
    else:
        return SearchResult("none", r, m, "not found", note="budget exceeded and no seed for sampling")
    if res.verdict == "holds":
        res.verdict = "not found"
    return res


def sm_lambda_r_exhaustive(
    graph: Graph, r: int, budget: int = DEFAULT_SUBSET_BUDGET, workers: int = 1
) -> int:
    """Largest m such that every admissible fault set of size <= m keeps G strongly Menger.

    Sizes are tried in increasing order until a breaking set turns up.
    """
    return sm_lambda_r_search(graph, r, budget, workers)[0]


def sm_lambda_r_search(
    graph: Graph, r: int, budget: int = DEFAULT_SUBSET_BUDGET, workers: int = 1
) -> tuple[int, SearchResult]:
    """Like :func:`sm_lambda_r_exhaustive` but also returns the first breaking set found."""
    examined = 0
    spent = 0
    for k in range(graph.num_edges + 1):
        spent += comb(graph.num_edges, k)
        if spent > budget:
            raise BudgetExceeded(f"size {k} pushes enumeration past budget {budget}")
        n_seen, combo, cx = _first_break_of_size(graph, r, k, workers)
        examined += n_seen
        if combo is not None:
            F = tuple(graph.edges[i] for i in combo)
            return k - 1, SearchResult("exhaustive", r, k, "refuted", F, cx, examined)
    # no admissible set ever breaks it (only possible when nothing is admissible)
    return graph.num_edges, SearchResult("exhaustive", r, graph.num_edges, "holds", sets_examined=examined)


# -- extremal witness --------------------------------------------------------


@dataclass
class ExtremalWitness:
    subcube: SubcubeHandle
    u: int
    neighbors: tuple[int, ...]
    kept: EdgeSet
    F: EdgeSet
    v: int
    flow: FlowResult = field(repr=False)

    @property
    def flow_value(self) -> int:
        return self.flow.value

    def to_dict(self) -> dict:
        return {
            "r": self.subcube.level,
            "subcube": list(self.subcube.vertices),
            "u": self.u,
            "subcube_neighbors": list(self.neighbors),
            "kept": [list(e) for e in self.kept],
            "F": [list(e) for e in self.F],
            "F_size": len(self.F),
            "v": self.v,
            "flow_value": self.flow_value,
            "paths": self.flow.paths,
            "cut": [list(e) for e in self.flow.cut],
        }


def extremal_witness(graph: HLNetwork, r: int) -> ExtremalWitness:
    """Fault set of size 2**r (n - r) - n + 1 that breaks the strong Menger property.

    Take the level-r subcube, its lowest vertex u and u's subcube neighbours
    u_1 < ... < u_r. F is every edge leaving the subcube from a vertex other
    than u, except the lowest outside edge of each of u_1 .. u_{r-1}. Then u
    and a vertex v far from the subcube both keep degree n, yet only n - 1
    surviving edges leave the subcube.
    """
    n = graph.dimension
    if n < 3 or not 1 <= r <= n - 2:
        raise ValueError(f"witness needs n >= 3 and 1 <= r <= n-2 (got n={n}, r={r})")
    sc = subcube(graph, r)
    inside = sc.vertex_mask
    u = sc.vertices[0]
    nbrs = tuple(x for x in graph.neighbors(u) if inside >> x & 1)
    kept = []
    for ui in nbrs[: r - 1]:
        w = min(x for x in graph.neighbors(ui) if not inside >> x & 1)
        kept.append((ui, w) if ui < w else (w, ui))
    kept_set = set(kept)
    F = tuple(
        e
        for e in graph.edges
        if (inside >> e[0] & 1) != (inside >> e[1] & 1)
        and u not in e
        and e not in kept_set
    )
    near = inside
    for x in sc.vertices:
        near |= graph.nbr_masks[x]
    free = ~near & ((1 << graph.num_vertices) - 1)
    if not free:
        raise WitnessError("every vertex is adjacent to the subcube")
    v = (free & -free).bit_length() - 1

    residual = delete_edges(graph, F)
    flow = max_edge_disjoint_paths(residual, u, v)
    w = ExtremalWitness(sc, u, nbrs, tuple(kept), F, v, flow)
    _certify(graph, residual, w)
    return w


def _certify(graph: HLNetwork, residual: Graph, w: ExtremalWitness) -> None:
    n, r = graph.dimension, w.subcube.level
    expected = (1 << r) * (n - r) - n + 1
    if len(w.F) != expected or expected != ((1 << r) - 1) * (n - r) - (r - 1):
        raise WitnessError(f"|F| = {len(w.F)}, expected {expected}")
    deg = residual.degrees()
    if min(deg) < r:
        raise WitnessError("residual minimum degree below r")
    if deg[w.u] != n or deg[w.v] != n:
        raise WitnessError("u or v lost an edge")
    partial = set(w.neighbors[: r - 1])
    for x in w.subcube.vertices:
        if x == w.u:
            continue
        want = r + 1 if x in partial else r
        if deg[x] != want:
            raise WitnessError(f"subcube vertex {x} has residual degree {deg[x]}, expected {want}")
    if any(graph.has_edge(w.v, x) or w.v == x for x in w.subcube.vertices):
        raise WitnessError("v touches the subcube")
    if w.flow_value > n - 1:
        raise WitnessError(f"flow {w.flow_value} exceeds n - 1")
    try:
        verify_flow_result(residual, w.flow)
    except AssertionError as exc:
        raise WitnessError(f"flow certificate invalid: {exc}") from exc


# -- large component lemma ---------------------------------------------------


@dataclass
class ComponentCheck:
    mode: str
    r: int
    max_faults: int
    threshold: int
    passed: bool
    sets_examined: int
    smallest_largest_component: int
    violation: EdgeSet | None = None
    note: str = ""

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        if self.violation is not None:
            d["violation"] = [list(e) for e in self.violation]
        return d


def _largest(masks: Sequence[int]) -> int:
    return max(c.bit_count() for c in components_of_masks(masks))


def verify_lemma_2_7(
    graph: HLNetwork,
    r: int,
    mode: str = "exhaustive",
    samples: int = 10_000,
    seed: int | None = None,
    budget: int = DEFAULT_SUBSET_BUDGET,
) -> ComponentCheck:
    """Removing at most 2**r (n - r) - 1 edges leaves a component of >= 2**n - 2**r + 1 vertices.

    Exhaustive mode visits every edge set of size <= the limit. Sampled mode
    draws sets of exactly the limit size, the hardest case since the largest
    component can only shrink as edges are added.
    """
    n = graph.dimension
    if not 0 <= r <= n - 2:
        raise ValueError(f"r={r} outside [0, {n - 2}]")
    limit = (1 << r) * (n - r) - 1
    threshold = (1 << n) - (1 << r) + 1
    adj = graph.nbr_masks
    edges = graph.edges
    if mode == "exhaustive":
        total = _subset_count(len(edges), limit)
        if total > budget:
            raise BudgetExceeded(f"{total} edge sets exceed budget {budget}")
        masks = list(adj)
        combo: list[int] = []
        examined = 0
        worst = graph.num_vertices
        violation = None

        def walk(start: int) -> bool:
            nonlocal examined, worst, violation
            examined += 1
            size = _largest(masks)
            if size < worst:
                worst = size
            if size < threshold:
                violation = tuple(edges[i] for i in combo)
                return True
            if len(combo) == limit:
                return False
            for i in range(start, len(edges)):
                a, b = edges[i]
                masks[a] ^= 1 << b
                masks[b] ^= 1 << a
                combo.append(i)
                stop = walk(i + 1)
                combo.pop()
                masks[a] ^= 1 << b
                masks[b] ^= 1 << a
                if stop:
                    return True
            return False

        walk(0)
        return ComponentCheck(mode, r, limit, threshold, violation is None, examined, worst, violation)
    if mode == "sampled":
        if seed is None:
            raise ValueError("sampled mode needs a seed")
        rng = random.Random(seed)
        size = min(limit, len(edges))
        worst = graph.num_vertices
        for t in range(samples):
            pick = rng.sample(range(len(edges)), size)
            masks = list(adj)
            for i in pick:
                a, b = edges[i]
                masks[a] ^= 1 << b
                masks[b] ^= 1 << a
            got = _largest(masks)
            worst = min(worst, got)
            if got < threshold:
                bad = tuple(edges[i] for i in sorted(pick))
                return ComponentCheck(mode, r, limit, threshold, False, t + 1, worst, bad)
        return ComponentCheck(
            mode, r, limit, threshold, True, samples, worst, note="sampled evidence only, not a proof"
        )
    raise ValueError(f"unknown mode {mode!r}")
