"""
Exhaustive scans of small Weyl groups
=====================================

``exhaustive_verify`` runs the singular-locus driver on every element and
checks it against the edge-count oracle and a list of structural identities
for translates, tangent-cone spans and B2-pairs.
"""

# %%
from schubsing.oracles import exhaustive_verify, summary_table

results = [exhaustive_verify(f, n, seeds=3) for f, n in [("A", 3), ("B", 2), ("B", 3), ("C", 3)]]
print(summary_table(results))

# %%
# Which identities were exercised, and how often, for B3.
for name, count in sorted(results[2].checks.items()):
    print(f"{name:<36} {count}")
