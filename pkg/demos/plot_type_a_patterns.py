"""
Smoothness in type A against pattern avoidance
==============================================

In type A a Schubert variety is smooth exactly when its permutation avoids
3412 and 4231, and smooth points coincide with rationally smooth points.
Both facts are checked here against the root-theoretic test.
"""

# %%
from collections import Counter

from schubsing import all_elements, build_root_system, format_word, singular_locus
from schubsing.oracles import (
    pattern_smooth_typeA, rationally_smooth_points, to_permutation,
)

for n in (3, 4):
    rs = build_root_system("A", n)
    tally = Counter()
    for w in all_elements(rs):
        smooth = singular_locus(w).is_smooth
        tally[smooth, pattern_smooth_typeA(to_permutation(w))] += 1
    print(f"S{n + 1}:", dict(tally))

# %%
# The two singular varieties in S4 and their singular loci.
rs = build_root_system("A", 3)
for w in all_elements(rs):
    rep = singular_locus(w)
    if not rep.is_smooth:
        tops = sorted(format_word(z) for z in rep.maximal_singularities)
        same = rep.smooth_points == rationally_smooth_points(w)
        print(to_permutation(w), format_word(w), "maximal:", tops, "matches edge count:", same)
