"""
Exact root-theoretic smoothness tests for Schubert varieties ``X(w)`` in ``G/B``.

Everything is computed from the Bruhat graph of ``[e, w]`` and the root
system, with integer and rational arithmetic only.

>>> from schubsing import build_root_system, parse_word, singular_locus, format_word
>>> rs = build_root_system("B", 2)
>>> report = singular_locus(parse_word(rs, "s1 s2 s1"))
>>> sorted(format_word(x) for x in report.maximal_singularities)
['s1']
"""

from .bruhatgraph import (
    BruhatGraph, CurveRecord, Direction, NotInIntervalError, build_graph, curves_at,
    degree, export_dot, export_json,
)
from .convex import in_convex_hull
from .oracles import (
    ScanResult, bruhat_leq_bruteforce, exhaustive_verify, pattern_smooth_typeA,
    rationally_smooth_at, to_permutation,
)
from .rootsystem import (
    B2Basis, Root, RootSystem, RootSystemError, build_root_system, format_root,
    parse_root, parse_system,
)
from .smoothness import (
    PointVerdict, SmoothnessReport, Verdict, good_curve_exists, is_smooth_at,
    singular_locus, smooth_points,
)
from .tangent import (
    B2Pair, PreconditionError, WeightModule, b2_pairs, full_tangent_weights,
    isotropy_closure, multiplicity_at, peterson_translate, te_module, theta_span,
)
from .weyl import (
    WeylElement, all_elements, bruhat_leq, enumerate_interval, format_word,
    from_word, identity, longest_element, parse_word, reflection,
)

__all__ = [
    "BruhatGraph", "CurveRecord", "Direction", "NotInIntervalError", "build_graph",
    "curves_at", "degree", "export_dot", "export_json", "in_convex_hull", "ScanResult",
    "bruhat_leq_bruteforce", "exhaustive_verify", "pattern_smooth_typeA",
    "rationally_smooth_at", "to_permutation", "B2Basis", "Root", "RootSystem",
    "RootSystemError", "build_root_system", "format_root", "parse_root",
    "parse_system", "PointVerdict", "SmoothnessReport", "Verdict", "good_curve_exists",
    "is_smooth_at", "singular_locus", "smooth_points", "B2Pair", "PreconditionError",
    "WeightModule", "b2_pairs", "full_tangent_weights", "isotropy_closure",
    "multiplicity_at", "peterson_translate", "te_module", "theta_span", "WeylElement",
    "all_elements", "bruhat_leq", "enumerate_interval", "format_word", "from_word",
    "identity", "longest_element", "parse_word", "reflection",
]

__version__ = "0.1.0"
