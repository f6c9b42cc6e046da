"""Edge-disjoint paths, minimum cuts and the strong Menger edge property."""
# %%
from hlnet.graph import build_hypercube, build_random_hl, delete_edges
from hlnet.menger import all_pairs_flow, edge_connectivity, is_sm_lambda, max_edge_disjoint_paths

q3 = build_hypercube(3)

# %% Antipodal vertices of Q3: three paths, and a cut of the same size
res = max_edge_disjoint_paths(q3, 0b000, 0b111)
print(res.value, res.paths, res.cut)

# %% Global edge connectivity of random members equals the dimension
for n in range(1, 8):
    print(n, edge_connectivity(build_random_hl(n, n)))

# %% Knocking out two edges at one vertex: some pairs lose a path they are entitled to
h = delete_edges(q3, [(1, 3), (1, 5)])
print(is_sm_lambda(q3))
print(is_sm_lambda(h))
for row in all_pairs_flow(h):
    print(row)
