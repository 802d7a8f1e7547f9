"""
A singular Schubert surface in type B2
======================================

We follow one small example from the Bruhat graph to the multiplicity at
its maximal singular point. Throughout, ``s1`` is the reflection in the
short simple root ``a1`` and ``s2`` the one in the long simple root ``a2``.
"""

# %%
# The variety and its fixed points
# --------------------------------
# ``X(w)`` for ``w = s1 s2 s1`` is three dimensional. Its T-fixed points
# are the Bruhat interval ``[e, w]``.
from schubsing import (
    b2_pairs, build_graph, build_root_system, format_root, format_word,
    multiplicity_at, parse_word, peterson_translate, singular_locus, te_module,
    theta_span,
)

rs = build_root_system("B", 2)
w = parse_word(rs, "s1 s2 s1")
G = build_graph(w)
for z in G.ordered_vertices:
    print(f"{format_word(z):<10} degree {G.degree(z)}")

# %%
# Every vertex has exactly three edges, so every point is rationally
# smooth. Smoothness needs more than counting.
#
# Curves at x = s1
# ----------------
x = parse_word(rs, "s1")
for c in G.curves_at(x):
    print(c.direction.value, format_root(c.tangent_weight), "->", format_word(c.other))

# %%
# Both upward curves end at smooth points, so both are good. Their Peterson
# translates share the weight ``-a1-a2``, which is not tangent to any curve.
for mu in [(0, 1), (2, 1)]:
    tau = peterson_translate(w, x, mu)
    print(format_root(mu), tau.formatted())
print("TE:", te_module(w, x).formatted())
print("tangent cone span:", theta_span(w, x).formatted())

# %%
# The extra weight comes from an orthogonal B2-pair
# --------------------------------------------------
for p in b2_pairs(w, x):
    print(p.to_dict())

# %%
# The three-condition test
# ------------------------
# The driver walks down from ``w``; at ``s1`` the pair condition fails.
report = singular_locus(w)
for z in reversed(G.ordered_vertices):
    v = report.verdicts[z]
    print(f"{format_word(z):<10} {v.verdict.value:<9} {v.failed or ''}")
print("multiplicity at s1:", multiplicity_at(w, x))
