"""Maximum induced edges e_g and the boundary function f(g) = n g - 2 e_g."""
# %%
import numpy as np

from hlnet.bounds import (
    brute_force_e_max,
    e_max,
    e_max_table,
    f,
    sweep_lemma_2_4,
    sweep_lemma_2_5,
    sweep_lemma_2_6,
)
from hlnet.graph import build_crossed_cube_3, build_hypercube, build_random_hl

# %% Closed form vs exhaustive search over vertex subsets
graphs = {"Q4": build_hypercube(4), "HL4": build_random_hl(4, 1), "CQ3": build_crossed_cube_3()}
for name, g in graphs.items():
    oracle = [brute_force_e_max(g, k) for k in range(1, g.num_vertices + 1)]
    formula = [e_max(k) for k in range(1, g.num_vertices + 1)]
    print(name, oracle == formula, oracle)

# %% f(g) for n = 5: minimum n at both ends, f(2^r) = 2^r (n - r)
n = 5
table = n * np.arange(2**n) - 2 * e_max_table(2**n - 1)
print(table[1:])
print([f(n, 2**r) for r in range(n)], [2**r * (n - r) for r in range(n)])

# %% The three arithmetic sweeps for every n up to 20
for n in range(3, 21):
    reps = [sweep_lemma_2_4(n), sweep_lemma_2_5(n), sweep_lemma_2_6(n)]
    print(n, [r.passed for r in reps], [r.checked for r in reps])
