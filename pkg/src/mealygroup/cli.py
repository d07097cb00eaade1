"""Command-line interface.

Exit status: 0 success, 1 property failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

import numpy as np

from .automaton import AutomatonError, load_automaton
from .expr import WordSyntaxError
from .group import DEFAULT_CAP, AutomatonGroup, ResourceLimitExceeded
from .structure import (
    PropertyReport,
    activity_class,
    check_fractal,
    check_open_set_condition,
    compute_nucleus,
    enumerate_relations,
    parse_vertex,
    rigid_stabilizer_member,
    stabilizer_member,
    vertex_str,
    verify_contraction,
    verify_weak_branch_witness,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
THREADS_ENV = "MEALYGROUP_THREADS"


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--automaton", default="paper-Pi", help="preset name or definition file (default: paper-Pi)")
    p.add_argument("--threads", type=int, default=None, help=f"worker threads (default: ${THREADS_ENV} or 1)")
    p.add_argument("--tolerance", type=float, default=None, help="numerical tolerance override")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="word-problem closure cap")
    p.add_argument("--format", choices=("dot", "csv", "json"), default=None)
    p.add_argument("--out", default=None, help="write the artifact here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="mealygroup", description="Automaton groups: word problem, nucleus, Schreier graphs and spectra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nucleus", parents=[common], help="compute the nucleus and its contraction depth")
    p.add_argument("--max-depth", type=int, default=32)

    p = sub.add_parser("check", parents=[common], help="verify a structural property")
    p.add_argument("property", choices=("contracting", "fractal", "open-set", "activity", "weak-branch", "level-transitive"))
    p.add_argument("--depth", type=int, default=None, help="contraction depth / open-set search depth")
    p.add_argument("--radius", type=int, default=3, help="fractal witness search radius")
    p.add_argument("--k", type=int, default=1, help="weak-branch witness index")
    p.add_argument("--level", type=int, default=12, help="check level transitivity on levels 1..LEVEL")

    p = sub.add_parser("schreier", parents=[common], help="export a level-n Schreier graph")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--mode", choices=("multigraph", "simplicial"), default="multigraph")

    p = sub.add_parser("spectrum", parents=[common], help="spectrum of a level-n operator")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--kind", default="markov", choices=("markov", "laplacian", "hecke", "adjacency-simplicial", "laplacian-simplicial"))
    p.add_argument("--weights", type=float, nargs="+", default=None, help="hecke weights, one per generator")
    p.add_argument("--vectors", default="none", help="none | all | smallest:K | largest:K")
    p.add_argument("--vectors-out", default=None, help="eigenvector CSV path")
    p.add_argument("--histogram", type=int, default=None, metavar="BINS")
    p.add_argument("--histogram-out", default=None)

    p = sub.add_parser("convergence", parents=[common], help="spectral gaps between consecutive levels")
    p.add_argument("--kind", default="markov")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=6)

    p = sub.add_parser("kesten", parents=[common], help="second eigenvalues against 2 sqrt(k-1)/k")
    p.add_argument("--n-max", type=int, default=10)

    p = sub.add_parser("schur-probe", parents=[common], help="first-letter block decomposition of M_n - gamma I")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--scan", action="store_true", help="probe every eigenvalue of the diagonal blocks in [-1, 1]")

    p = sub.add_parser("relations", parents=[common], help="enumerate relators")
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--hash-level", type=int, default=8)
    p.add_argument("--raw", action="store_true", help="all trivial reduced words, not just minimal classes")

    p = sub.add_parser("stabilizer", parents=[common], help="level-stabilizer membership")
    p.add_argument("--expr", required=True)
    p.add_argument("--level", type=int, required=True)

    p = sub.add_parser("rigid", parents=[common], help="rigid-stabilizer membership")
    p.add_argument("--expr", required=True)
    p.add_argument("--vertex", required=True)

    p = sub.add_parser("portrait", parents=[common], help="level-n portrait of an element")
    p.add_argument("--expr", required=True)
    p.add_argument("--level", type=int, required=True)

    p = sub.add_parser("word", parents=[common], help="word problem and tree action")
    p.add_argument("action", choices=("is-trivial", "equal", "apply", "section"))
    p.add_argument("--expr", required=True)
    p.add_argument("--other", default=None, help="second word for 'equal'")
    p.add_argument("--vertex", default=None, help="vertex for 'apply' and 'section'")

    sub.add_parser("verify-paper", parents=[common], help="replay every published table for paper-Pi")
    return parser


def _threads(args) -> int:
    n = args.threads
    if n is None:
        env = os.environ.get(THREADS_ENV)
        n = int(env) if env else 1
    if n < 1:
        raise UsageError("--threads must be positive")
    # the numerical kernels are serial; this only sizes numba's pool, which
    # must happen before numba is first imported
    if "numba" not in sys.modules:
        os.environ.setdefault("NUMBA_NUM_THREADS", str(n))
    return n


def _write(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _summary(args, payload: dict) -> None:
    text = json.dumps(payload, indent=2, default=_json_default) + "\n"
    _write(args, text)


def _json_default(x):
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    if isinstance(x, np.ndarray):
        return x.tolist()
    raise TypeError(f"cannot serialise {type(x).__name__}")


def _report(args, rep: PropertyReport) -> int:
    _summary(args, {"command": args.command, "automaton": args.automaton, **rep.to_dict()})
    return EXIT_OK if rep.holds else EXIT_FAIL


def _vertex(group: AutomatonGroup, text: Optional[str]):
    if text is None:
        raise UsageError("--vertex is required")
    v = parse_vertex(text) if text.strip() else ()
    if any(x >= group.q for x in v):
        raise UsageError(f"vertex {text!r} uses letters outside 0..{group.q - 1}")
    return v


# -- commands ---------------------------------------------------------------------


def cmd_nucleus(args, g: AutomatonGroup) -> int:
    n = compute_nucleus(g, max_depth=args.max_depth)
    _summary(args, {
        "command": "nucleus",
        "automaton": args.automaton,
        "size": len(n),
        "contraction_depth": n.contraction_depth,
        "lemma_depth": n.lemma_depth,
        "elements": [g.render(w) for w in n],
    })
    return EXIT_OK


def cmd_check(args, g: AutomatonGroup) -> int:
    prop = args.property
    if prop == "contracting":
        n = compute_nucleus(g)
        depth = args.depth if args.depth is not None else n.contraction_depth
        rep = verify_contraction(g, n, depth)
        rep.witnesses = rep.witnesses[:50]
    elif prop == "fractal":
        rep = check_fractal(g, args.radius)
    elif prop == "open-set":
        rep = check_open_set_condition(g, compute_nucleus(g), 4 if args.depth is None else args.depth)
    elif prop == "activity":
        act = activity_class(g.automaton)
        rep = PropertyReport("activity", "holds", {"class": str(act)}, ["->".join(c) for c in act.cycles])
    elif prop == "weak-branch":
        rep = verify_weak_branch_witness(g, args.k)
    else:
        from .schreier import SIMPLICIAL, build_schreier, is_connected

        rep = PropertyReport("level-transitive", "holds", {"levels": args.level})
        for n in range(1, args.level + 1):
            ok = is_connected(build_schreier(g, n, SIMPLICIAL))
            (rep.witnesses if ok else rep.counterexamples).append({"level": n})
            if not ok:
                rep.verdict = "fails"
    return _report(args, rep)


def cmd_schreier(args, g: AutomatonGroup) -> int:
    from .schreier import build_schreier, export_graph

    fmt = args.format or "dot"
    if fmt == "json":
        raise UsageError("schreier exports dot or csv")
    _write(args, export_graph(build_schreier(g, args.level, args.mode), fmt))
    return EXIT_OK


def _parse_selection(text: str):
    if text in ("none", "all"):
        return text
    which, _, k = text.partition(":")
    if which not in ("smallest", "largest") or not k.isdigit():
        raise UsageError(f"bad --vectors value {text!r}")
    return (which, int(k))


def cmd_spectrum(args, g: AutomatonGroup) -> int:
    from .spectral import (
        RESIDUAL_TOLERANCE,
        build_operator,
        eigen_decompose,
        eigenvector_csv,
        histogram_csv,
        spectrum_csv,
        spectrum_histogram,
    )

    select = _parse_selection(args.vectors)
    op = build_operator(g, args.kind, args.level, args.weights)
    tol = args.tolerance if args.tolerance is not None else RESIDUAL_TOLERANCE
    res = eigen_decompose(op, select=select, tolerance=tol)
    if args.vectors_out:
        with open(args.vectors_out, "w", encoding="utf-8") as fh:
            fh.write(eigenvector_csv(res))
    if args.histogram:
        text = histogram_csv(spectrum_histogram(res, args.histogram))
        if args.histogram_out:
            with open(args.histogram_out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stderr.write(text)
    if args.format == "json":
        _summary(args, {
            "command": "spectrum", "automaton": args.automaton, "level": args.level, "kind": args.kind,
            "eigenvalues": res.eigenvalues, "max_residual": res.max_residual, "norm": res.norm, "sweeps": res.sweeps,
        })
    else:
        _write(args, spectrum_csv(res))
    return EXIT_OK


def cmd_convergence(args, g: AutomatonGroup) -> int:
    from .spectral import spectral_convergence

    tol = args.tolerance if args.tolerance is not None else 1e-6
    rep = spectral_convergence(g, args.kind, args.n_min, args.n_max, tol)
    _summary(args, {
        "command": "convergence", "automaton": args.automaton, "kind": rep.kind, "asserted": rep.asserted,
        "tolerance": tol, "gaps": {str(k): v for k, v in rep.gaps.items()}, "violations": rep.violations,
        "verdict": "holds" if rep.holds else "fails",
    })
    return EXIT_OK if rep.holds else EXIT_FAIL


def cmd_kesten(args, g: AutomatonGroup) -> int:
    from .spectral import kesten_bound_check

    rep = kesten_bound_check(g, args.n_max)
    _summary(args, {
        "command": "kesten", "automaton": args.automaton, "bound": rep.bound, "levels": rep.levels,
        "second_eigenvalue": rep.second_eigenvalue, "nontrivial_radius": rep.nontrivial_radius,
        "second_below_bound": rep.second_below_bound, "radius_below_bound": rep.radius_below_bound,
    })
    return EXIT_OK


def cmd_schur(args, g: AutomatonGroup) -> int:
    from dataclasses import asdict

    from .spectral import block_eigenvalues, schur_block_probe

    if args.scan:
        upper, lower = block_eigenvalues(g, args.level)
        gammas = sorted({round(float(x), 12) for x in np.concatenate([upper, lower]) if -1 <= x <= 1})
        reports = [schur_block_probe(g, args.level, x, include_blocks=False) for x in gammas]
    elif args.gamma is None:
        raise UsageError("give --gamma or --scan")
    else:
        reports = [schur_block_probe(g, args.level, args.gamma)]
    _summary(args, {"command": "schur-probe", "automaton": args.automaton, "level": args.level,
                    "probes": [{**asdict(r), "verified": r.verified} for r in reports]})
    return EXIT_OK


def cmd_relations(args, g: AutomatonGroup) -> int:
    rs = enumerate_relations(g, args.max_length, args.hash_level, "raw" if args.raw else "minimal")
    _summary(args, {"command": "relations", "automaton": args.automaton, "max_length": rs.max_length,
                    "mode": rs.mode, "count": len(rs), "relators": [g.render(r) for r in rs]})
    return EXIT_OK


def cmd_stabilizer(args, g: AutomatonGroup) -> int:
    ok = stabilizer_member(g, g.parse(args.expr), args.level)
    _summary(args, {"command": "stabilizer", "expr": args.expr, "level": args.level, "verdict": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rigid(args, g: AutomatonGroup) -> int:
    ok = rigid_stabilizer_member(g, g.parse(args.expr), _vertex(g, args.vertex))
    _summary(args, {"command": "rigid", "expr": args.expr, "vertex": args.vertex, "verdict": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_portrait(args, g: AutomatonGroup) -> int:
    p = g.portrait(g.parse(args.expr), args.level)
    _summary(args, {"command": "portrait", "expr": args.expr, "level": args.level,
                    "permutation": list(p.permutation), "trivial_permutation": p.is_trivial_permutation,
                    "sections": [g.render(s) for s in p.sections]})
    return EXIT_OK


def cmd_word(args, g: AutomatonGroup) -> int:
    w = g.parse(args.expr)
    out = {"command": "word", "action": args.action, "expr": args.expr, "word": g.render(w)}
    status = EXIT_OK
    if args.action == "is-trivial":
        out["verdict"] = g.is_trivial(w)
        status = EXIT_OK if out["verdict"] else EXIT_FAIL
    elif args.action == "equal":
        if args.other is None:
            raise UsageError("'word equal' needs --other")
        out["other"] = args.other
        out["verdict"] = g.words_equal(w, g.parse(args.other))
        status = EXIT_OK if out["verdict"] else EXIT_FAIL
    elif args.action == "apply":
        v = _vertex(g, args.vertex)
        out["vertex"], out["image"] = args.vertex, vertex_str(g.apply(w, v))
    else:
        v = _vertex(g, args.vertex)
        out["vertex"], out["section"] = args.vertex, g.render(g.section(w, v))
    _summary(args, out)
    return status


def cmd_verify(args, g: AutomatonGroup) -> int:
    from .fixtures import run_fixtures

    if args.automaton != "paper-Pi":
        raise UsageError("verify-paper replays published tables and needs --automaton paper-Pi")
    reports = run_fixtures(g)
    failed = [r.property for r in reports if not r.holds]
    _summary(args, {
        "command": "verify-paper",
        "verdict": "fails" if failed else "holds",
        "failed": failed,
        "fixtures": [{"property": r.property, "verdict": r.verdict, "parameters": r.parameters,
                      "counterexamples": r.counterexamples} for r in reports],
    })
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "nucleus": cmd_nucleus,
    "check": cmd_check,
    "schreier": cmd_schreier,
    "spectrum": cmd_spectrum,
    "convergence": cmd_convergence,
    "kesten": cmd_kesten,
    "schur-probe": cmd_schur,
    "relations": cmd_relations,
    "stabilizer": cmd_stabilizer,
    "rigid": cmd_rigid,
    "portrait": cmd_portrait,
    "word": cmd_word,
    "verify-paper": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.cap < 1:
            raise UsageError("--cap must be positive")
        _threads(args)
        group = AutomatonGroup(load_automaton(args.automaton), cap=args.cap)
        return COMMANDS[args.command](args, group)
    except ResourceLimitExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, WordSyntaxError, AutomatonError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
