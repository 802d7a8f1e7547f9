"""
Two ways to read a mu-string in G2
==================================

A Peterson translate is computed at the smooth end ``y = r_mu x`` of a curve
by grouping the weights of ``T_y(X)`` into mu-strings and reflecting back to
x. This script compares the lowest-members rule used by the library with
reflecting ``T_y(X)`` as it stands, on the G2 variety ``X(s2 s1 s2 s1)``.
"""

# %%
from schubsing import (
    build_graph, build_root_system, bruhat_leq, format_root, in_convex_hull,
    parse_word, peterson_translate, te_module,
)
from schubsing.tangent import translate_string_conflicts

rs = build_root_system("G2", allow_g2=True)
w, x = parse_word(rs, "s2 s1 s2 s1"), parse_word(rs, "s2 s1")
lam = rs.highest_root
print("highest root:", format_root(lam))

# %%
# The smoothness test is not available in G2, so the singular locus is
# supplied: it is ``X(s2 s1)``.
smooth = {z for z in build_graph(w).vertices if not bruhat_leq(z, x)}
te = te_module(w, x)
print("TE at x:", te.formatted())

# %%
# At ``y`` the weight ``a2`` is the top of a lambda-string whose lower
# member ``a2 - lam`` is still in ``T_y(G/B)``. That is the only place the
# two readings part ways.
print(translate_string_conflicts(w, x, lam))
for reading in ("limit", "reflect"):
    tau = peterson_translate(w, x, lam, smooth, reading=reading)
    outside = [format_root(g) for g in tau if not in_convex_hull(g, list(te))]
    print(f"{reading:<8} {tau.formatted()}  outside hull(TE): {outside}")

# %%
# The point ``-3a1-a2`` is outside the convex hull of TE either way; only
# the as-is reading places it in the translate.
print(in_convex_hull((-3, -1), list(te)))
