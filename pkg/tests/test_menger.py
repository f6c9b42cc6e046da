import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hlnet.fault import extremal_witness
from hlnet.graph import Graph, build_crossed_cube_3, build_hypercube, build_random_hl, delete_edges
from hlnet.menger import (
    all_pairs_flow,
    edge_connectivity,
    flow_value_masks,
    is_sm_lambda,
    max_edge_disjoint_paths,
    min_edge_cut,
    verify_flow_result,
)


def cut_oracle(g, u, v):
    """Smallest edge boundary over all vertex sets holding u but not v."""
    others = [x for x in range(g.num_vertices) if x not in (u, v)]
    best = None
    for k in range(len(others) + 1):
        for extra in itertools.combinations(others, k):
            X = {u, *extra}
            size = sum((a in X) != (b in X) for a, b in g.edges)
            best = size if best is None else min(best, size)
    return best


def simple_paths(g, u, v):
    out = []

    def walk(path, seen):
        x = path[-1]
        if x == v:
            out.append(frozenset((min(a, b), max(a, b)) for a, b in zip(path, path[1:])))
            return
        for y in g.neighbors(x):
            if y not in seen:
                walk(path + [y], seen | {y})

    walk([u], {u})
    return out


def packing_oracle(g, u, v):
    """Largest family of pairwise edge-disjoint u-v paths, by exhaustive search."""
    paths = simple_paths(g, u, v)
    best = 0

    def grow(start, used, count):
        nonlocal best
        best = max(best, count)
        for i in range(start, len(paths)):
            if not paths[i] & used:
                grow(i + 1, used | paths[i], count + 1)

    grow(0, frozenset(), 0)
    return best


def naive_sm_lambda(g):
    pairs = [(u, v) for u in range(g.num_vertices) for v in range(u + 1, g.num_vertices)]
    values = {p: max_edge_disjoint_paths(g, *p).value for p in pairs}
    # a disconnected graph fails at its first cross-component pair
    for (u, v), val in values.items():
        if val == 0:
            return False, (u, v, 0, min(g.degree(u), g.degree(v)))
    for u, v in pairs:
        val = values[u, v]
        need = min(g.degree(u), g.degree(v))
        if val < need:
            return False, (u, v, val, need)
    return True, None


def test_q3_antipodal(q3):
    res = max_edge_disjoint_paths(q3, 0b000, 0b111)
    assert res.value == 3 == packing_oracle(q3, 0, 7)
    verify_flow_result(q3, res)


def test_q3_minus_edge(q3):
    h = delete_edges(q3, [(0, 1)])
    res = max_edge_disjoint_paths(h, 0, 1)
    assert res.value == 2 == packing_oracle(h, 0, 1) == cut_oracle(h, 0, 1)
    verify_flow_result(h, res)


def test_min_cut_examples(q3):
    cut = min_edge_cut(q3, 0, 1)
    assert len(cut) == 3 == cut_oracle(q3, 0, 1)
    path = Graph(3, [(0, 1), (1, 2)])
    assert min_edge_cut(path, 0, 2) in (((0, 1),), ((1, 2),))
    split = Graph(4, [(0, 1), (2, 3)])
    res = max_edge_disjoint_paths(split, 0, 3)
    assert res.value == 0 and res.cut == () and res.paths == []


def test_bad_pairs(q3):
    with pytest.raises(ValueError):
        max_edge_disjoint_paths(q3, 2, 2)
    with pytest.raises(KeyError):
        max_edge_disjoint_paths(q3, 0, 8)


def test_edge_connectivity(q4, cq3):
    assert edge_connectivity(q4) == 4
    assert edge_connectivity(cq3) == 3
    assert edge_connectivity(build_hypercube(2)) == 2
    with pytest.raises(ValueError):
        edge_connectivity(build_hypercube(0))


@pytest.mark.parametrize("n", range(1, 8))
def test_edge_connectivity_random_hl(n):
    for seed in range(3):
        assert edge_connectivity(build_random_hl(n, seed)) == n


def test_is_sm_lambda_examples(q3):
    assert is_sm_lambda(q3).verdict
    assert is_sm_lambda(build_hypercube(0)).verdict
    w = extremal_witness(q3, 1)
    h = delete_edges(q3, w.F)
    rep = is_sm_lambda(h)
    assert not rep.verdict
    assert max_edge_disjoint_paths(h, w.u, w.v).value == 2 < 3


def test_disconnected_graph_is_not_sm_lambda():
    g = Graph(3, [(1, 2)])  # isolated vertex 0
    rep = is_sm_lambda(g)
    assert not rep.verdict and rep.counterexample == (0, 1, 0, 0)


def test_counterexample_is_first_in_pair_order(q3):
    h = delete_edges(q3, [(1, 3), (1, 5)])
    rep = is_sm_lambda(h)
    ok, first = naive_sm_lambda(h)
    assert not ok and rep.counterexample == first


def random_instance(rng, max_n=5):
    n = rng.randint(2, max_n)
    g = build_random_hl(n, rng.randrange(1 << 30))
    F = rng.sample(g.edges, rng.randint(0, g.num_edges // 2))
    return delete_edges(g, F)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_flow_matches_cut_oracle(seed):
    rng = random.Random(seed)
    h = random_instance(rng, max_n=3)
    u, v = rng.sample(range(h.num_vertices), 2)
    res = max_edge_disjoint_paths(h, u, v)
    assert res.value == cut_oracle(h, u, v)
    verify_flow_result(h, res)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_duality_symmetry_and_engines(seed):
    rng = random.Random(seed)
    h = random_instance(rng)
    u, v = rng.sample(range(h.num_vertices), 2)
    a = max_edge_disjoint_paths(h, u, v)
    b = max_edge_disjoint_paths(h, v, u)
    verify_flow_result(h, a)
    verify_flow_result(h, b)
    assert a.value == b.value <= min(h.degree(u), h.degree(v))
    val, side = flow_value_masks(h.nbr_masks, u, v)
    assert val == a.value
    assert side >> u & 1 and not side >> v & 1
    boundary = sum((side >> x & 1) != (side >> y & 1) for x, y in h.edges)
    assert boundary == val


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_removing_an_edge_never_increases_flow(seed):
    rng = random.Random(seed)
    h = random_instance(rng)
    if not h.num_edges:
        return
    u, v = rng.sample(range(h.num_vertices), 2)
    before = max_edge_disjoint_paths(h, u, v).value
    after = max_edge_disjoint_paths(delete_edges(h, [rng.choice(h.edges)]), u, v).value
    assert before - 1 <= after <= before


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_all_pairs_tree_matches_pairwise(seed):
    rng = random.Random(seed)
    h = random_instance(rng, max_n=4)
    table = all_pairs_flow(h)
    for u in range(h.num_vertices):
        for v in range(u + 1, h.num_vertices):
            assert table[u][v] == table[v][u] == max_edge_disjoint_paths(h, u, v).value


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_sm_lambda_matches_naive(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    g = build_random_hl(n, rng.randrange(1 << 30))
    # few faults so both verdicts show up
    h = delete_edges(g, rng.sample(g.edges, rng.randint(0, n + 1)))
    rep = is_sm_lambda(h)
    ok, first = naive_sm_lambda(h)
    assert rep.verdict == ok
    assert rep.counterexample == first


@pytest.mark.parametrize("n", range(1, 6))
def test_fault_free_members_have_flow_n_everywhere(n):
    for g in (build_hypercube(n), build_random_hl(n, 99)):
        table = all_pairs_flow(g)
        assert all(table[u][v] == n for u in range(g.num_vertices) for v in range(g.num_vertices) if u != v)
        assert is_sm_lambda(g).verdict
    assert is_sm_lambda(build_crossed_cube_3()).verdict
