import itertools
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hlnet.bounds import (
    BudgetExceeded,
    bound_report,
    brute_force_e_max,
    check_boundary_bound,
    decompose,
    doubling_step_holds,
    e_max,
    e_max_table,
    f,
    sweep_lemma_2_4,
    sweep_lemma_2_5,
    sweep_lemma_2_6,
)
from hlnet.graph import build_hypercube, build_random_hl, induced_edge_count


def naive_e_max(g, k):
    return max(induced_edge_count(g, c) for c in itertools.combinations(range(g.num_vertices), k))


@pytest.mark.parametrize("g,exps", [(13, (3, 2, 0)), (1, (0,)), (8, (3,)), (6, (2, 1))])
def test_decompose(g, exps):
    assert decompose(g).exponents == exps


def test_decompose_rejects_zero():
    with pytest.raises(ValueError):
        decompose(0)
    with pytest.raises(ValueError):
        e_max(0)


@given(st.integers(1, 2**20))
def test_decompose_sums_back(g):
    t = decompose(g).exponents
    assert sum(2**x for x in t) == g
    assert list(t) == sorted(t, reverse=True) and len(set(t)) == len(t)
    assert t[0] == g.bit_length() - 1


def test_e_max_examples(q3):
    # frozen from plain enumeration over Q_3 and Q_4
    assert naive_e_max(q3, 3) == 2 == naive_e_max(build_hypercube(4), 3)
    assert naive_e_max(q3, 5) == 5
    assert e_max(1) == 0
    assert e_max(3) == 2
    assert e_max(5) == 5
    assert e_max(8) == 12 == 3 * 2**2


@pytest.mark.parametrize("k", range(0, 21))
def test_e_max_powers_of_two(k):
    assert e_max(2**k) == k * 2 ** (k - 1) if k else e_max(1) == 0


def test_e_max_monotone_and_step_bounded():
    table = e_max_table(2**20)
    diffs = np.diff(table[1:])
    assert (diffs >= 0).all()
    g = np.arange(1, 2**20)
    assert (diffs <= np.floor(np.log2(g)).astype(np.int64) + 1).all()


def test_table_matches_scalar():
    table = e_max_table(5000)
    assert table[0] == 0
    assert all(int(table[g]) == e_max(g) for g in range(1, 5001))
    rng = random.Random(3)
    big = e_max_table(2**20)
    for g in rng.sample(range(1, 2**20), 2000):
        assert int(big[g]) == e_max(g)


def test_f_examples():
    assert f(3, 1) == 3
    assert f(4, 4) == 8 == 2**2 * (4 - 2)
    for n in range(2, 21):
        for r in range(1, n):
            assert f(n, 2**r) == 2**r * (n - r)
    with pytest.raises(ValueError):
        f(0, 1)


def test_bound_report():
    rep = bound_report(4, 4, oracle=4)
    assert (rep.e_g, rep.f_g, rep.verdict) == (4, 8, "pass")
    assert rep.f_g == rep.n * rep.g - 2 * rep.e_g
    assert bound_report(4, 4, oracle=3).verdict == "fail"


def test_brute_force_examples(q3, q4):
    assert brute_force_e_max(q3, 4) == 4
    assert brute_force_e_max(q4, 8) == 12
    assert brute_force_e_max(q4, 1) == 0


@pytest.mark.parametrize("name", ["Q3", "CQ3", "Q4", "HL4"])
def test_brute_force_pruning_matches_naive(small_hl, name):
    g = small_hl[name]
    ks = range(1, g.num_vertices + 1) if g.num_vertices == 8 else [2, 3, 5, 7, 13]
    for k in ks:
        assert brute_force_e_max(g, k) == naive_e_max(g, k)


@pytest.mark.parametrize("name", ["Q3", "CQ3", "Q4", "HL4"])
def test_closed_form_uniform_over_members(small_hl, name):
    g = small_hl[name]
    for k in range(1, g.num_vertices + 1):
        assert brute_force_e_max(g, k) == e_max(k)


def test_brute_force_budget(q4):
    with pytest.raises(BudgetExceeded):
        brute_force_e_max(q4, 8, budget=1000)
    with pytest.raises(ValueError):
        brute_force_e_max(q4, 17)


def test_boundary_lower_bound_sampled():
    rng = random.Random(5)
    for n in (3, 4, 5, 6):
        g = build_random_hl(n, n)
        for _ in range(200):
            k = rng.randint(1, g.num_vertices)
            X = rng.sample(range(g.num_vertices), k)
            size, bound = check_boundary_bound(g, n, X)
            assert size >= bound


def test_boundary_bound_tight_on_face(q3):
    assert check_boundary_bound(q3, 3, [0, 1, 2, 3]) == (4, 4)


def test_sweep_2_4():
    rep = sweep_lemma_2_4(3)
    assert rep.passed and rep.minimum == 3 and rep.argmin == [1, 7]
    assert rep.checked == 7


def test_sweep_2_5_small():
    rep = sweep_lemma_2_5(2)
    assert rep.passed and rep.checked == 1 and rep.minimum == 0


def test_sweep_2_6():
    rep = sweep_lemma_2_6(4)
    assert rep.passed and rep.minimum == 0


@pytest.mark.parametrize("n", range(3, 21))
def test_sweeps_pass(n):
    assert sweep_lemma_2_4(n).passed
    assert sweep_lemma_2_5(n).passed
    assert sweep_lemma_2_6(n).passed


def test_sweep_2_6_against_scalar():
    # direct double loop with the scalar e_max
    for n in range(1, 9):
        expect = [
            (r, g) for r in range(n) for g in range(2**r, 2 ** (n - 1) + 1) if f(n, g) < f(n, 2**r)
        ]
        assert sweep_lemma_2_6(n).violations == expect


def test_sweeps_degenerate_dimensions():
    # for n = 1 and n = 2 the quantity in 2.5 is checked on its tiny range only
    assert sweep_lemma_2_5(1).checked == 0
    assert sweep_lemma_2_4(1).passed


def test_doubling_identity():
    for n in range(3, 21):
        for r in range(0, n - 1):
            for i in range(0, n - r - 1):
                assert doubling_step_holds(n, r, i)
