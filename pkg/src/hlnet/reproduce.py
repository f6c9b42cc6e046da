"""The eight acceptance checks, runnable from the CLI and from pytest.

Exact tolerance values are only claimed for n <= 4. At larger n the checks
rely on witness-certified upper bounds and sampled lower-bound evidence.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import bounds
from .fault import extremal_witness, paper_value, sm_lambda_r_exhaustive, verify_lemma_2_7
from .graph import (
    build_crossed_cube_3,
    build_hypercube,
    build_random_hl,
    delete_edges,
    hl3_matching_classes,
    min_degree,
    compose,
    are_isomorphic,
)
from .menger import flow_value_masks, max_edge_disjoint_paths, verify_flow_result

RANDOM_HL4_SEED = 1
WITNESS_SEED = 1
LEMMA27_SEED = 20270
MENGER_SEED = 7
MENGER_INSTANCES = 200
LEMMA27_SAMPLES = 10_000


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number}: {self.title} ({self.seconds:.1f}s)"


def small_graphs():
    return {
        "Q3": build_hypercube(3),
        "CQ3": build_crossed_cube_3(),
        "Q4": build_hypercube(4),
        f"random:4:{RANDOM_HL4_SEED}": build_random_hl(4, RANDOM_HL4_SEED),
    }


def criterion_1(workers: int = 1) -> CriterionResult:
    got = {
        name: sm_lambda_r_exhaustive(g, 1, workers=workers)
        for name, g in (("Q3", build_hypercube(3)), ("CQ3", build_crossed_cube_3()))
    }
    want = paper_value(3, 1)
    return CriterionResult(
        1, "sm_lambda^1 = 1 exhaustively on Q3 and CQ3", all(v == want for v in got.values()),
        {"expected": want, "computed": got},
    )


def criterion_2(workers: int = 1) -> CriterionResult:
    got = {}
    for name, g in (("Q4", build_hypercube(4)), (f"random:4:{RANDOM_HL4_SEED}", build_random_hl(4, RANDOM_HL4_SEED))):
        for r in (1, 2):
            got[f"{name} r={r}"] = sm_lambda_r_exhaustive(g, r, workers=workers)
    want = {k: paper_value(4, int(k[-1])) for k in got}
    return CriterionResult(
        2, "sm_lambda^r exhaustively on Q4 and a random HL_4 (r = 1, 2)", got == want,
        {"expected": want, "computed": got},
    )


def criterion_3() -> CriterionResult:
    failures = []
    checked = 0
    for n in range(3, 11):
        for label, g in (("Q", build_hypercube(n)), ("random", build_random_hl(n, WITNESS_SEED))):
            for r in range(1, n - 1):
                w = extremal_witness(g, r)
                checked += 1
                residual = delete_edges(g, w.F)
                ok = (
                    len(w.F) == (1 << r) * (n - r) - n + 1
                    and min_degree(residual) >= r
                    and w.flow_value == n - 1
                )
                if not ok:
                    failures.append((label, n, r, len(w.F), w.flow_value))
    return CriterionResult(
        3, "extremal witness certified for 3 <= n <= 10, 1 <= r <= n-2", not failures,
        {"witnesses": checked, "failures": failures, "note": "witness-certified upper bounds"},
    )


def criterion_4() -> CriterionResult:
    mismatches = []
    for name, g in small_graphs().items():
        for k in range(1, g.num_vertices + 1):
            got = bounds.brute_force_e_max(g, k)
            if got != bounds.e_max(k):
                mismatches.append((name, k, got, bounds.e_max(k)))
    return CriterionResult(
        4, "brute-force induced edge maxima equal the closed form", not mismatches,
        {"mismatches": mismatches},
    )


def criterion_5() -> CriterionResult:
    failed = []
    for n in range(3, 21):
        for sweep in (bounds.sweep_lemma_2_4, bounds.sweep_lemma_2_5, bounds.sweep_lemma_2_6):
            rep = sweep(n)
            if not rep.passed:
                failed.append((rep.lemma, n, rep.violations[:5]))
    return CriterionResult(5, "boundary-function sweeps for 3 <= n <= 20", not failed, {"failed": failed})


def criterion_6() -> CriterionResult:
    runs = []
    for n, r in ((3, 0), (3, 1), (4, 0), (4, 1)):
        g = build_hypercube(n)
        runs.append((f"Q{n} r={r} exhaustive", verify_lemma_2_7(g, r, "exhaustive")))
    for r in (1, 2, 3):
        g = build_hypercube(5)
        rep = verify_lemma_2_7(g, r, "sampled", samples=LEMMA27_SAMPLES, seed=LEMMA27_SEED + r)
        runs.append((f"Q5 r={r} sampled", rep))
    return CriterionResult(
        6, "large component survives small edge cuts", all(rep.passed for _, rep in runs),
        {name: {"passed": rep.passed, "sets": rep.sets_examined, "worst": rep.smallest_largest_component}
         for name, rep in runs},
    )


def menger_instances(count: int = MENGER_INSTANCES, seed: int = MENGER_SEED):
    """Reproducible (graph, fault set, u, v) draws with n <= 5."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 5)
        g = build_random_hl(n, rng.randrange(1 << 30)) if rng.random() < 0.5 else build_hypercube(n)
        k = rng.randint(0, g.num_edges // 3)
        F = rng.sample(g.edges, k)
        u, v = rng.sample(range(g.num_vertices), 2)
        yield g, F, u, v


def criterion_7() -> CriterionResult:
    problems = []
    for idx, (g, F, u, v) in enumerate(menger_instances()):
        h = delete_edges(g, F)
        fwd = max_edge_disjoint_paths(h, u, v)
        back = max_edge_disjoint_paths(h, v, u)
        try:
            verify_flow_result(h, fwd)
            verify_flow_result(h, back)
        except AssertionError as exc:
            problems.append((idx, str(exc)))
            continue
        if fwd.value > min(h.degree(u), h.degree(v)):
            problems.append((idx, "flow exceeds min degree"))
        if fwd.value != back.value:
            problems.append((idx, "asymmetric"))
        if flow_value_masks(h.nbr_masks, u, v)[0] != fwd.value:
            problems.append((idx, "flow engines disagree"))
    return CriterionResult(
        7, f"Menger duality on {MENGER_INSTANCES} random instances", not problems, {"problems": problems}
    )


def criterion_8() -> CriterionResult:
    classes = hl3_matching_classes()
    c4 = build_hypercube(2)
    q3 = build_hypercube(3)
    with_q3 = [are_isomorphic(compose(c4, c4, cls[0]), q3) for cls in classes]
    passed = len(classes) == 2 and sum(with_q3) == 1
    return CriterionResult(
        8, "C4 (+) C4 over 24 matchings gives exactly two classes", passed,
        {"class_sizes": [len(c) for c in classes], "q3_class": with_q3},
    )


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
}


def run_criterion(number: int, workers: int = 1) -> CriterionResult:
    fn = CRITERIA[number]
    t0 = time.perf_counter()
    res = fn(workers) if number in (1, 2) else fn()
    res.seconds = time.perf_counter() - t0
    return res


def run_all(workers: int = 1, only=None, echo=print) -> list[CriterionResult]:
    out = []
    for number in sorted(only or CRITERIA):
        res = run_criterion(number, workers)
        if echo is not None:
            echo(res.line())
        out.append(res)
    return out
