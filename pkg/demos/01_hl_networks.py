"""Building hypercube-like networks.

Run with ``python demos/01_hl_networks.py``.
"""
# %%
from hlnet.graph import (
    are_isomorphic,
    build_crossed_cube_3,
    build_hypercube,
    build_random_hl,
    compose,
    hl3_matching_classes,
    subcube,
)
from hlnet.io import to_edge_list

# %% The smallest members: K_1, K_2, and C_4 (the only HL_2 member)
c4 = build_hypercube(2)
print(to_edge_list(c4))

# %% Joining two 4-cycles: 24 possible matchings, but only two graphs up to isomorphism
classes = hl3_matching_classes()
for members in classes:
    g = compose(c4, c4, members[0])
    kind = "Q3" if are_isomorphic(g, build_hypercube(3)) else "the other one (CQ3)"
    print(f"{len(members):2d} matchings -> {kind}, e.g. {members[0]}")

cq3 = build_crossed_cube_3()
print("CQ3 edges:", cq3.edges)

# %% Random members keep the degree/size invariants and are reproducible by seed
for seed in range(3):
    g = build_random_hl(6, seed)
    print(seed, g, "degrees:", set(g.degrees()), "same again:", build_random_hl(6, seed) == g)

# %% Subcubes: always the low ids, each vertex has n - r edges leaving
g = build_random_hl(5, 42)
h = subcube(g, 2)
outside = [sum(y not in h.vertices for y in g.neighbors(x)) for x in h.vertices]
print("G_2 =", h.vertices, "outside edges per vertex:", outside)
