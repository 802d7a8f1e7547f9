"""
Command-line front end: ``schubsing <command> <system> <w> [...]``.

Systems are written ``B3``, ``E6``; Weyl words as ``"s1 s2 s1"`` (``e`` is
the identity); roots as ``3a1+2a2``. Every command accepts ``--format
text|json`` (``graph`` also ``dot``). Errors print one line to stderr and
exit with status 2; ``smooth`` exits 0 for a smooth variety (or point) and 1
otherwise, ``verify`` exits 1 when a discrepancy is found.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from importlib import resources
from pathlib import Path
from typing import Optional

from .bruhatgraph import NotInIntervalError, build_graph, export_dot, graph_dict
from .oracles import ScanBudgetError, exhaustive_verify, summary_table
from .rootsystem import RootSystem, RootSystemError, format_root, parse_root, parse_system
from .smoothness import singular_locus
from .tangent import (
    READINGS, PreconditionError, b2_pairs, isotropy_closure, multiplicity_at,
    peterson_translate, te_module, theta_span,
)
from .weyl import WeylElement, bruhat_leq, enumerate_interval, format_word, parse_word, seed_interval

# commands that accept G2 when --allow-g2 is given; they only read the graph
# or take the smooth locus from --singular-top
G2_COMMANDS = {"roots", "interval", "graph", "curves", "te", "peterson", "theta"}


class CliError(Exception):
    pass


# interval cache -------------------------------------------------------------

def _cache_path(cache_dir: str, w: WeylElement) -> Path:
    digest = hashlib.sha256(repr(w.matrix).encode()).hexdigest()[:20]
    return Path(cache_dir) / f"{w.system.name}-{digest}.json"


def _load_interval(cache_dir: Optional[str], w: WeylElement) -> None:
    if not cache_dir:
        return
    path = _cache_path(cache_dir, w)
    if path.exists():
        data = json.loads(path.read_text())
        seed_interval(w, (parse_word(w.system, s) for s in data["members"]))


def _store_interval(cache_dir: Optional[str], w: WeylElement) -> None:
    if not cache_dir:
        return
    path = _cache_path(cache_dir, w)
    if path.exists():
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    members = sorted(enumerate_interval(w), key=lambda z: (z.length, z.reduced_word))
    path.write_text(json.dumps({"system": w.system.name, "w": format_word(w),
                                "members": [format_word(z) for z in members]}))


def load_schema(name: str) -> dict:
    """The shipped JSON schema ``schubsing/<name>/v1``."""
    return json.loads(resources.files("schubsing").joinpath("schemas", f"{name}.json").read_text())


# argument handling ----------------------------------------------------------

def _system(args) -> RootSystem:
    rs = parse_system(args.system, allow_g2=args.allow_g2)
    if rs.family == "G" and args.command not in G2_COMMANDS:
        raise CliError(f"command {args.command!r} is not available for G2")
    return rs


def _word(rs: RootSystem, text: str, what: str) -> WeylElement:
    try:
        return parse_word(rs, text)
    except RootSystemError as exc:
        raise CliError(f"{what}: {exc}") from None


def _root(rs: RootSystem, text: str) -> tuple[int, ...]:
    g = parse_root(text, rs.rank)
    if not rs.is_root(g):
        raise CliError(f"{text!r} is not a root of {rs.name}")
    return g


def _in_interval(x: WeylElement, w: WeylElement) -> None:
    if not bruhat_leq(x, w):
        raise NotInIntervalError(f"x = {format_word(x)} is not <= w = {format_word(w)}")


def _smooth_from_flags(args, w: WeylElement):
    """Smooth locus: computed, or for G2 the complement of the given singular tops."""
    if w.system.family != "G":
        return None
    if not args.singular_top:
        raise CliError("G2 needs --singular-top WORD to describe the singular locus")
    tops = [_word(w.system, t, "--singular-top") for t in args.singular_top]
    return {z for z in build_graph(w).vertices if not any(bruhat_leq(z, t) for t in tops)}


def _emit(args, data: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _weights_text(label: str, weights) -> str:
    return f"{label}: " + (", ".join(format_root(g) for g in sorted(weights)) or "(none)")


# commands -------------------------------------------------------------------

def cmd_roots(args) -> int:
    rs = _system(args)
    lines = [f"{rs.name}: {len(rs.all_roots)} roots, {len(rs.positive_roots)} positive",
             "cartan: " + " ".join("[" + " ".join(map(str, row)) + "]" for row in rs.cartan)]
    for g in rs.all_roots:
        lines.append(f"  {format_root(g):<24} {'long' if rs.is_long(g) else 'short'}")
    _emit(args, rs.to_dict(), "\n".join(lines))
    return 0


def _setup(args, need_x=False):
    rs = _system(args)
    w = _word(rs, args.w, "w")
    _load_interval(args.cache_dir, w)
    x = None
    if need_x:
        x = _word(rs, args.x, "x")
        _in_interval(x, w)
    return rs, w, x


def cmd_interval(args) -> int:
    rs, w, _ = _setup(args)
    G = build_graph(w)
    _store_interval(args.cache_dir, w)
    data = {"schema": "schubsing/interval/v1", "system": rs.name, "w": format_word(w),
            "members": [{"word": format_word(z), "length": z.length} for z in G.ordered_vertices]}
    text = "\n".join(f"{z.length}  {format_word(z)}" for z in G.ordered_vertices)
    _emit(args, data, f"[e, {format_word(w)}] in {rs.name}: {len(G.vertices)} elements\n{text}")
    return 0


def cmd_graph(args) -> int:
    rs, w, _ = _setup(args)
    G = build_graph(w)
    _store_interval(args.cache_dir, w)
    if args.dot or args.format == "dot":
        sys.stdout.write(export_dot(G))
        return 0
    lines = [f"Bruhat graph of X({format_word(w)}) in {rs.name}: "
             f"{len(G.vertices)} vertices, {len(G.edges())} edges"]
    for z in G.ordered_vertices:
        lines.append(f"  {format_word(z):<20} length {z.length}  degree {G.degree(z)}")
    for a, b, g in G.edges():
        lines.append(f"  {format_word(a)} -- {format_word(b)}  [{format_root(g)}]")
    _emit(args, graph_dict(G), "\n".join(lines))
    return 0


def cmd_curves(args) -> int:
    rs, w, x = _setup(args, need_x=True)
    curves = sorted(build_graph(w).curves_at(x), key=lambda c: c.gamma_pos)
    data = {"schema": "schubsing/curves/v1", "system": rs.name, "w": format_word(w),
            "x": format_word(x), "curves": [c.to_dict() for c in curves]}
    lines = [f"{len(curves)} T-curves at {format_word(x)} (l(w) = {w.length})"]
    for c in curves:
        lines.append(f"  {c.direction.value:<4} {format_root(c.gamma_pos):<16} weight "
                     f"{format_root(c.tangent_weight):<16} to {format_word(c.other)} ({c.length_class})")
    _emit(args, data, "\n".join(lines))
    return 0


def _module_cmd(args, module) -> int:
    data = {"schema": "schubsing/weights/v1", "system": args.rs.name,
            "w": format_word(args.wel), **module.to_dict()}
    text = _weights_text(module.kind, module.weights)
    if module.note:
        text += f"  ({module.note})"
    _emit(args, data, text)
    return 0


def cmd_te(args) -> int:
    args.rs, args.wel, x = _setup(args, need_x=True)
    return _module_cmd(args, te_module(args.wel, x))


def cmd_isotropy(args) -> int:
    args.rs, args.wel, x = _setup(args, need_x=True)
    return _module_cmd(args, isotropy_closure(args.wel, x, te_module(args.wel, x)))


def cmd_peterson(args) -> int:
    args.rs, args.wel, x = _setup(args, need_x=True)
    mu = _root(args.rs, args.mu)
    smooth = _smooth_from_flags(args, args.wel)
    return _module_cmd(args, peterson_translate(args.wel, x, mu, smooth, args.reading))


def cmd_theta(args) -> int:
    args.rs, args.wel, x = _setup(args, need_x=True)
    smooth = _smooth_from_flags(args, args.wel)
    upper = args.upper_bound or args.rs.family == "G"
    return _module_cmd(args, theta_span(args.wel, x, smooth, upper_bound=upper))


def cmd_b2pairs(args) -> int:
    rs, w, x = _setup(args, need_x=True)
    pairs = b2_pairs(w, x)
    data = {"schema": "schubsing/b2pairs/v1", "system": rs.name, "w": format_word(w),
            "x": format_word(x), "pairs": [p.to_dict() for p in pairs]}
    lines = [f"{len(pairs)} orthogonal B2-pair(s) at {format_word(x)}"]
    for p in pairs:
        lines.append(f"  {{{format_root(p.mu)}, {format_root(p.phi)}}}  gamma = {format_root(p.gamma)}"
                     f"  basis short {format_root(p.basis.short_simple)},"
                     f" long {format_root(p.basis.long_simple)}")
    _emit(args, data, "\n".join(lines))
    return 0


def _verdict_line(v) -> str:
    s = f"  {format_word(v.x):<20} {v.verdict.value}"
    if v.failed:
        s += f"  failed {v.failed}"
        if v.failed == "b2pair":
            s += f": pair {{{v.detail['mu']}, {v.detail['phi']}}}, gamma = {v.detail['gamma']}"
        elif v.failed == "degree":
            s += f": {v.detail['degree']} curves, l(w) = {v.detail['length']}"
        elif v.failed == "isotropy":
            s += f": missing {', '.join(v.detail['missing'])}"
        elif v.failed == "below-singular":
            s += f": below {v.detail['above']}"
    elif v.witness is not None:
        s += f"  via {format_root(v.witness.gamma_pos)} to {format_word(v.witness.other)}"
    return s


def cmd_smooth(args) -> int:
    rs, w, _ = _setup(args)
    rng = random.Random(args.seed) if args.seed is not None else None
    report = singular_locus(w, shortcut=not args.no_shortcut, rng=rng)
    G = build_graph(w)
    if args.x is not None:
        x = _word(rs, args.x, "x")
        _in_interval(x, w)
        v = report.verdicts[x]
        _emit(args, {"schema": "schubsing/point/v1", "system": rs.name, "w": format_word(w),
                     **v.to_dict()}, _verdict_line(v).strip())
        return 0 if v.smooth else 1
    lines = [f"X({format_word(w)}) in {rs.name}: {'smooth' if report.is_smooth else 'singular'}"]
    if not report.is_smooth:
        tops = [format_word(z) for z in G.ordered_vertices if z in report.maximal_singularities]
        lines.append("maximal singularities: " + ", ".join(tops))
        for z in G.ordered_vertices:
            if z in report.multiplicities:
                lines.append(f"multiplicity at {format_word(z)}: {report.multiplicities[z]}")
    lines += [_verdict_line(report.verdicts[z]) for z in reversed(G.ordered_vertices)]
    _emit(args, report.to_dict(), "\n".join(lines))
    return 0 if report.is_smooth else 1


def cmd_mult(args) -> int:
    rs, w, x = _setup(args, need_x=True)
    mu = _root(rs, args.mu) if args.mu else None
    m = multiplicity_at(w, x, mu)
    _emit(args, {"schema": "schubsing/mult/v1", "system": rs.name, "w": format_word(w),
                 "x": format_word(x), "mu": format_root(mu) if mu else None, "multiplicity": m},
          f"multiplicity at {format_word(x)}: {m}")
    return 0


def cmd_verify(args) -> int:
    rs = _system(args)
    result = exhaustive_verify(rs.family, rs.rank, seeds=args.seeds,
                               invariants=args.exhaustive, bruhat=args.bruhat,
                               jobs=args.jobs, allow_large=args.allow_large)
    lines = [summary_table([result])]
    for d in result.discrepancies[:20]:
        lines.append(f"  {d.check}: w = {d.w}, x = {d.x}, algorithm {d.algorithm}, "
                     f"oracle {d.oracle} {d.context}".rstrip())
    _emit(args, result.to_dict(), "\n".join(lines))
    return 0 if result.ok else 1


# parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--allow-g2", action="store_true", help="permit G2 where meaningful")
    common.add_argument("--cache-dir", help="directory for cached intervals (JSON)")

    p = argparse.ArgumentParser(prog="schubsing", description=__doc__.split("\n\n")[0].strip())
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, *, w=True, x=False, mu=False, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("system")
        if w:
            sp.add_argument("w")
        if x:
            sp.add_argument("x")
        if mu:
            sp.add_argument("mu")
        sp.set_defaults(func=func)
        return sp

    add("roots", cmd_roots, w=False, help="list the roots")
    add("interval", cmd_interval, help="the interval [e, w]")
    sp = add("graph", cmd_graph, help="the Bruhat graph of X(w)")
    sp.add_argument("--dot", action="store_true")
    add("curves", cmd_curves, x=True, help="T-curves at x")
    add("te", cmd_te, x=True, help="weights of TE(X, x)")
    add("isotropy", cmd_isotropy, x=True, help="the isotropy submodule at x")
    for name, func, h in (("peterson", cmd_peterson, "Peterson translate along mu"),
                          ("theta", cmd_theta, "span of the tangent cone at x")):
        sp = add(name, func, x=True, mu=name == "peterson", help=h)
        sp.add_argument("--singular-top", action="append", metavar="WORD",
                        help="G2 only: the singular locus is the union of X(WORD)")
        if name == "peterson":
            sp.add_argument("--reading", choices=READINGS, default="limit")
        else:
            sp.add_argument("--upper-bound", action="store_true",
                            help="return the sum of translates without certification")
    add("b2pairs", cmd_b2pairs, x=True, help="orthogonal B2-pairs at x")
    sp = add("smooth", cmd_smooth, help="singular locus, or the verdict at x")
    sp.add_argument("x", nargs="?")
    sp.add_argument("--seed", type=int, help="randomize the choice of good curve")
    sp.add_argument("--no-shortcut", action="store_true",
                    help="test every point instead of inheriting singularity from above")
    sp = add("mult", cmd_mult, x=True, help="multiplicity 2^d at x")
    sp.add_argument("mu", nargs="?")
    sp = add("verify", cmd_verify, w=False, help="scan every w against the oracles")
    sp.add_argument("--exhaustive", action="store_true", help="also check all invariants")
    sp.add_argument("--bruhat", action="store_true", help="also compare Bruhat order on all pairs")
    sp.add_argument("--seeds", type=int, default=10)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--allow-large", action="store_true")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "dot" and args.command != "graph":
        parser.error("--format dot is only available for graph")
    try:
        return args.func(args)
    except (CliError, RootSystemError, PreconditionError, NotInIntervalError,
            ScanBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
