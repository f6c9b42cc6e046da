"""Induced-edge maxima e_g and the boundary function f(g) = n*g - 2*e_g.

Everything here is exact integer arithmetic. :func:`brute_force_e_max`
is the independent oracle for :func:`e_max`: it never consults the closed
form.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb

import numpy as np

from .graph import Graph, edge_boundary

DEFAULT_SUBSET_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would visit more sets than allowed."""


@dataclass(frozen=True)
class BinaryDecomposition:
    g: int
    exponents: tuple[int, ...]


@dataclass
class BoundReport:
    n: int
    g: int
    e_g: int
    f_g: int
    oracle_e_g: int | None = None
    verdict: str = "pass"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class SweepReport:
    lemma: str
    n: int
    passed: bool
    checked: int
    violations: list = field(default_factory=list)
    minimum: int | None = None
    argmin: list[int] = field(default_factory=list)


def decompose(g: int) -> BinaryDecomposition:
    """Powers of two summing to g, largest first (the set bits of g)."""
    if g < 1:
        raise ValueError("g must be a positive integer")
    exps = tuple(i for i in range(g.bit_length() - 1, -1, -1) if g >> i & 1)
    return BinaryDecomposition(g, exps)


def e_max(g: int) -> int:
    """Largest number of edges induced by g vertices of an HL-network."""
    t = decompose(g).exponents
    # t * 2**(t-1) is t << (t-1); the t == 0 term is zero
    first = sum(ti << (ti - 1) for ti in t if ti > 0)
    second = sum(i << ti for i, ti in enumerate(t))
    return first + second


def e_max_table(g_max: int) -> np.ndarray:
    """``table[g] = e_max(g)`` for 0 <= g <= g_max (``table[0]`` is 0)."""
    g = np.arange(g_max + 1, dtype=np.int64)
    out = np.zeros_like(g)
    above = np.zeros_like(g)  # set bits strictly above the current position
    for t in range(int(g_max).bit_length() - 1, -1, -1):
        bit = (g >> t) & 1
        out += bit * ((t << (t - 1)) if t > 0 else 0)
        out += bit * above * (1 << t)
        above += bit
    return out


def f(n: int, g: int) -> int:
    if n < 1 or g < 1:
        raise ValueError("f(n, g) needs n >= 1 and g >= 1")
    return n * g - 2 * e_max(g)


def bound_report(n: int, g: int, oracle: int | None = None) -> BoundReport:
    e = e_max(g)
    verdict = "pass" if oracle is None or oracle == e else "fail"
    return BoundReport(n, g, e, n * g - 2 * e, oracle, verdict)


def brute_force_e_max(g: Graph, k: int, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Exact maximum induced edge count over all k-vertex subsets of ``g``.

    Subsets are visited in lexicographic order. A branch is abandoned when
    even the most generous completion (each further vertex adjacent to all
    chosen ones, capped by the maximum degree) cannot beat the best so far.
    """
    n = g.num_vertices
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside [0, {n}]")
    if comb(n, k) > budget:
        raise BudgetExceeded(f"C({n}, {k}) = {comb(n, k)} subsets exceeds budget {budget}")
    if k <= 1:
        return 0
    masks = g.nbr_masks
    dmax = max(m.bit_count() for m in masks)
    # cap[c][rem]: most edges rem more vertices can add to c chosen ones
    cap = [[sum(min(dmax, c + j) for j in range(rem)) for rem in range(k + 1)] for c in range(k + 1)]
    best = -1

    def walk(start: int, chosen: int, size: int, edges: int) -> None:
        nonlocal best
        if size == k:
            if edges > best:
                best = edges
            return
        rem = k - size
        if edges + cap[size][rem] <= best:
            return
        for v in range(start, n - rem + 1):
            walk(v + 1, chosen | 1 << v, size + 1, edges + (masks[v] & chosen).bit_count())

    walk(0, 0, 0, 0)
    return best


def check_boundary_bound(g: Graph, n: int, X) -> tuple[int, int]:
    """``(|E_X|, n|X| - 2 e_|X|)`` for a nonempty vertex set X."""
    xs = set(X)
    if not xs:
        raise ValueError("X must be nonempty")
    return len(edge_boundary(g, xs)), f(n, len(xs))


def _f_table(n: int, g_max: int) -> np.ndarray:
    g = np.arange(g_max + 1, dtype=np.int64)
    return n * g - 2 * e_max_table(g_max)


def _sweep(lemma: str, n: int, values: np.ndarray, floor, offset: int = 1) -> SweepReport:
    bad = (np.nonzero(values < floor)[0] + offset).tolist()
    if values.size == 0:
        return SweepReport(lemma, n, True, 0)
    lo = int(values.min())
    argmin = (np.nonzero(values == lo)[0] + offset).tolist()
    return SweepReport(lemma, n, not bad, int(values.size), bad, lo, argmin)


def sweep_lemma_2_4(n: int) -> SweepReport:
    """f(g) >= n for every 1 <= g <= 2**n - 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    values = _f_table(n, (1 << n) - 1)[1:]
    return _sweep("2.4", n, values, n)


def sweep_lemma_2_5(n: int) -> SweepReport:
    """(n - 2) g - 2 e_g >= 0 for every 1 <= g <= 2**(n-2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    top = 1 << (n - 2) if n >= 2 else 0
    values = _f_table(n - 2, top)[1:]
    return _sweep("2.5", n, values, 0)


def sweep_lemma_2_6(n: int) -> SweepReport:
    """f(g) >= f(2**r) whenever 2**r <= g <= 2**(n-1), for each 0 <= r <= n-1.

    Violations are reported as ``(r, g)`` pairs; ``minimum`` is the smallest
    slack f(g) - f(2**r) seen.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    half = 1 << (n - 1)
    fs = _f_table(n, half)
    bad: list[tuple[int, int]] = []
    checked = 0
    slack = None
    for r in range(n):
        lo = 1 << r
        window = fs[lo:] - fs[lo]
        checked += int(window.size)
        m = int(window.min())
        slack = m if slack is None else min(slack, m)
        bad.extend((r, int(g) + lo) for g in np.nonzero(window < 0)[0])
    return SweepReport("2.6", n, not bad, checked, bad, slack)


def doubling_step_holds(n: int, r: int, i: int) -> bool:
    """f(2**(k+1)) == f(2**k) + 2**k (n - k - 2) with k = r + i."""
    k = r + i
    return f(n, 1 << (k + 1)) == f(n, 1 << k) + (1 << k) * (n - k - 2)


def bound_rows(n: int, g_max: int | None = None) -> list[BoundReport]:
    top = (1 << n) if g_max is None else g_max
    return [bound_report(n, g) for g in range(1, top + 1)]
