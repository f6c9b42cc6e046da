"""How many conditional edge faults the strong Menger property survives.

The exhaustive part takes a minute or so on one core.
"""
# %%
from hlnet.fault import (
    extremal_witness,
    paper_value,
    sm_lambda_r_search,
    verify_lemma_2_7,
    verify_lower_bound,
)
from hlnet.graph import build_crossed_cube_3, build_hypercube, build_random_hl, delete_edges
from hlnet.io import to_dot
from hlnet.menger import is_sm_lambda

# %% Exact values by exhaustive search (n <= 4) against 2^r (n - r) - n
cases = [(build_hypercube(3), 1), (build_crossed_cube_3(), 1), (build_hypercube(4), 1), (build_hypercube(4), 2)]
for g, r in cases:
    value, broken = sm_lambda_r_search(g, r)
    print(g, f"r={r}", "computed", value, "formula", paper_value(g.dimension, r),
          "first breaking set", broken.breaking_set)

# %% The extremal fault set for n = 8, r = 4
g = build_random_hl(8, 5)
w = extremal_witness(g, 4)
print(len(w.F), "faults; u =", w.u, "v =", w.v, "paths between them:", w.flow_value)
print("residual min degree:", min(delete_edges(g, w.F).degrees()))

# %% Small enough to look at: Q4 with r = 2 (paste into graphviz)
w = extremal_witness(build_hypercube(4), 2)
print(to_dot(build_hypercube(4), highlight=w.F, name="witness"))
print(is_sm_lambda(delete_edges(build_hypercube(4), w.F)))

# %% Beyond n = 4 only sampled evidence is feasible
g = build_hypercube(5)
print(verify_lower_bound(g, 2, mode="sampled", samples=300, seed=1))
print(verify_lemma_2_7(g, 3, mode="sampled", samples=2000, seed=1))
