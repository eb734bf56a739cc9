# %% [markdown]
# Verifying the classification by exhaustive search
#
# The classifier is compared against an independent route: build each graph,
# count its components by BFS and run the planarity test.

# %%
from whplanar import EnumerationBounds, verify_named_claims, verify_prop31, verify_theorem_A

report = verify_theorem_A(EnumerationBounds(2, 7))
print(report.specs_checked, "specs,", len(report.disagreements), "disagreements,", round(report.elapsed, 1), "s")
print(report.details["matched_classes"]["3"])
print(report.details["matched_classes"]["4"])

# %%
r = verify_prop31(12)
print(r.verified, r.details["coverage"])

# %%
r = verify_named_claims([4, 6])
print(r.verified)
for n, row in r.details.items():
    print(n, row)
