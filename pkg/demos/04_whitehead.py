# %% [markdown]
# Cyclic presentations and Whitehead graphs
#
# A defining word w gives n relators, its index shifts. Each cyclically
# adjacent letter pair contributes one edge per relator, so the Whitehead
# graph has n * len(w) edges and is always of the form Gamma_n(A, B, Q).

# %%
from whplanar import (
    GammaSpec,
    classify_gamma,
    is_cyclically_reduced,
    parse_word,
    plan_multiplicities,
    reduced_whitehead_spec,
    synthesize_word,
    whitehead_graph,
)
from whplanar.graph import simple_underlying

p = parse_word(6, "x0 x1 x2^-1")
spec = reduced_whitehead_spec(p)
print(spec, [m.class_id for m in classify_gamma(spec)])
print(whitehead_graph(p).edge_count, "edges")

# %%
for l in (1, 2, 3):
    w = "x1 " + " ".join(["x2^-1 x0"] * l)
    s = reduced_whitehead_spec(parse_word(8, w))
    print(l, s, [m.class_id for m in classify_gamma(s)])

# %%
# a word that is not cyclically reduced produces loops
q = parse_word(2, "x0 x1 x0^-1")
g = whitehead_graph(q)
print(is_cyclically_reduced(q), [e for e in g.edges if e[0] == e[1]])
print(simple_underlying(g).edges)

# %%
# the other direction: from a spec to a word realizing it
for raw in [((1,), (2,), (1,)), ((1, 2), (2,), (1,)), ((), (), (0, 1))]:
    target = GammaSpec(6, *raw)
    plan = plan_multiplicities(target)
    w = synthesize_word(target)
    print(target, "->", w.word_text(), "| round trip ok:", reduced_whitehead_spec(w) == target)
    print("   multiplicities", plan.m_a, plan.m_b, plan.m_q)
