# %% [markdown]
# The graphs Gamma_n(A, B, Q)
#
# Two n-cycles of vertices v_i and v'_i, with steps A inside the first orbit,
# B inside the second, and Q across. Vertex v_i is index i and v'_i is n + i.

# %%
from whplanar import (
    build_gamma,
    canonicalize_gamma,
    check_conditions,
    classify_gamma,
    classify_with_regularity,
    components,
    gamma_components,
    is_planar,
)

spec = canonicalize_gamma(6, [5], [4], [0])
g = build_gamma(spec)
print(spec, g.vertex_count, "vertices", g.edge_count, "edges")

# %%
# components follow from a gcd, and each is a smaller Gamma graph
spec = canonicalize_gamma(6, [2], [4], [1, 3])
dec = gamma_components(spec)
print(dec.d, dec.quotient, len(components(build_gamma(spec))))

# %%
# the table classifier: an empty list means not connected-and-planar
for raw in [([1], [1], [0, 1]), ([1], [2], [0]), ([2], [2], [0, 1]), ([3], [3], [0, 2]), ([], [], [0, 1, 5])]:
    s = canonicalize_gamma(6, *raw)
    matches = classify_gamma(s)
    g = build_gamma(s)
    print(s, [m.class_id for m in matches], "| oracle:", len(components(g)) == 1 and is_planar(g))

# %%
# regularity filter drops rows with exactly one of A, B empty
s = canonicalize_gamma(6, [1], [], [0, 1])
print(classify_gamma(s), classify_with_regularity(s))

# %%
# conditions (1)-(8); the n/2 steps here make (8) fail while (1)-(7) hold
report = check_conditions(canonicalize_gamma(6, [3], [3], [0, 2]))
print(report)
print(check_conditions(canonicalize_gamma(6, [1], [1], [0])).all_hold())
