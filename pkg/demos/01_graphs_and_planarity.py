# %% [markdown]
# Multigraphs, planarity and isomorphism
#
# Everything in the package is built on one small immutable multigraph type.
# Loops and parallel edges are allowed; planarity and isomorphism look only
# at the simple underlying graph.

# %%
from whplanar import MultiGraph, are_isomorphic, contract_edges, is_planar, simple_underlying, to_dot
from whplanar.kuratowski import kuratowski_planar

k5 = MultiGraph.complete(5)
k33 = MultiGraph.complete_bipartite(3, 3)
print("K5 planar:", is_planar(k5), " K3,3 planar:", is_planar(k33))

# %%
# loops and doubled edges never change the answer
g = MultiGraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (2, 2)])
print(g.edges)
print(simple_underlying(g).edges, is_planar(g))

# %%
# the left-right test against the brute-force Kuratowski search
import random

rng = random.Random(0)
agree = 0
for _ in range(2000):
    n = rng.randint(0, 8)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    h = MultiGraph(n, edges)
    agree += is_planar(h) == kuratowski_planar(h)
print(agree, "of 2000 random graphs agree")

# %%
# contraction keeps parallel copies; here a 4-cycle shrinks to a doubled edge
c4 = MultiGraph.cycle(4)
print(contract_edges(c4, [(0, 1), (2, 3)]).edges)

# %%
# isomorphism returns a checkable bijection
perm = [3, 0, 4, 1, 2]
cert = are_isomorphic(k5, k5.relabel(perm))
print(cert.mapping, cert.validate(k5, k5.relabel(perm)))
print(are_isomorphic(MultiGraph.cycle(4), MultiGraph.complete(4)))

# %%
print(to_dot(MultiGraph(3, [(0, 1), (1, 2)], ["a", "b", "c"])))
