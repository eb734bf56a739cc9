# %% [markdown]
# Circulant graphs
#
# circ_n(S) joins u_i to u_{i+s} for each step s. Steps are stored folded to
# min(s, n - s); an n/2 step gives a perfect matching rather than a doubled one.

# %%
from whplanar import build_circ, canonicalize_circ, circ_components, classify_circ_planar, is_planar

spec = canonicalize_circ(7, [3, 5])
print(spec)
print(build_circ(canonicalize_circ(6, [3])).edges)

# %%
# components: d = gcd(n, S), each a copy of circ_{n/d}(S/d)
for raw in ([2, 4], [3], [1], []):
    s = canonicalize_circ(6, raw)
    print(s.S, circ_components(s))

# %%
# the planarity verdict names the case that applies
for n, S in [(8, [1, 2]), (6, [2, 3]), (5, [1, 2]), (10, [2, 4]), (10, [4, 5]), (12, [1, 3])]:
    s = canonicalize_circ(n, S)
    v = classify_circ_planar(s)
    print(f"circ_{n}{set(s.S)}: {v.case.value:16s} planar={v.planar} oracle={is_planar(build_circ(s))}")

# %%
# exhaustive check against the planarity test for n <= 16, |S| <= 3
from itertools import combinations
from whplanar import CirculantSpec

mismatch = 0
total = 0
for n in range(1, 17):
    for k in range(4):
        for S in combinations(range(1, n // 2 + 1), k):
            s = CirculantSpec(n, S)
            total += 1
            mismatch += classify_circ_planar(s).planar != is_planar(build_circ(s))
print(total, "specs,", mismatch, "mismatches")
