"""Command-line entry point: construct, detect, search, balance, multicolor, verify.

Exit codes: 0 success, 1 property failure (or "none" from a search for a
witness), 2 usage error.  JSON goes to stdout or ``--out``.  Timing is only
included with ``--timing`` so that outputs are reproducible.

ex2 is always a finite number at fixed n; the asymptotic "infinite" case
of the definition has no finite counterpart here.
"""
from __future__ import annotations

import argparse
import json
import os
import platform
import sys
from typing import Optional

from . import balance, constructions, graph6, multicolor, patterns, search, suites
from .colorings import ColoringError, KColoring, TwoColoring, class_sizes, load_coloring, two_as_kcoloring
from .graphs import GraphError, SimpleGraph, parse_named

WORKERS_ENV = "UNAVOIDABLE_WORKERS"
VERSION = "0.1.0"


class UsageError(Exception):
    pass


def parse_graph(text: str) -> SimpleGraph:
    """``graph6:<code>``, a named generator such as ``H_t:3`` or ``S:2,2``, or a bare graph6 string."""
    if text.startswith("graph6:"):
        return graph6.decode(text[len("graph6:"):])
    kind = text.partition(":")[0]
    try:
        return parse_named(text)
    except GraphError:
        if ":" in text and kind:
            raise
    return graph6.decode(text)


def parse_family(text: str) -> patterns.PatternFamily:
    """``F:s,t``, ``L:r,s,t``, ``half:<graph6>`` or ``file:<path>`` (one graph6 per line, induced)."""
    kind, _, rest = text.partition(":")
    if kind == "F":
        s, t = (int(x) for x in rest.split(","))
        return patterns.family_F(s, t)
    if kind == "L":
        r, s, t = (int(x) for x in rest.split(","))
        return patterns.family_L(r, s, t)
    if kind == "half":
        return balance.half_family(parse_graph(rest))
    if kind == "file":
        with open(rest) as fh:
            gs = list(graph6.read_lines(fh))
        members = tuple(patterns.Member(g, patterns.INDUCED, graph6.encode(g)) for g in gs)
        return patterns.PatternFamily(members, f"file:{os.path.basename(rest)}")
    raise UsageError(f"unknown family {text!r}; use F:s,t, L:r,s,t, half:<graph6> or file:<path>")


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def coloring_dot(c) -> str:
    lines = ["graph coloring {", "  node [shape=circle];"]
    palette = ["red", "blue", "darkgreen", "orange", "purple", "brown", "gray"]
    if isinstance(c, TwoColoring):
        c = two_as_kcoloring(c)
    for v in range(c.n):
        lines.append(f"  {v};")
    for (u, v), col in c.color.items():
        lines.append(f'  {u} -- {v} [color="{palette[(col - 1) % len(palette)]}"];')
    lines.append("}")
    return "\n".join(lines)


def emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def manifest(args) -> dict:
    keep = {k: v for k, v in vars(args).items() if k not in ("func", "out", "timing") and v is not None}
    return {"parameters": keep, "versions": {"unavoidable": VERSION, "python": platform.python_version()}}


# ----------------------------------------------------------------- subcommands

def cmd_construct(args) -> int:
    kind = args.kind
    need = {"matching": ["n"], "star": ["n"], "blowup": ["n", "t"], "layered": ["n", "r", "s", "t"],
            "incidence": ["n"], "multicolor": ["n", "k"]}[kind]
    missing = [f"--{p}" for p in need if getattr(args, p) is None]
    if missing:
        raise UsageError(f"construct --kind {kind} needs {' '.join(missing)}")
    if kind == "incidence":
        blue = parse_graph(args.blue) if args.blue else None
        if blue is None and args.q is None:
            raise UsageError("construct --kind incidence needs --q or --blue")
        c = constructions.bipartite_free_coloring(args.n, args.q, blue)
    else:
        c = constructions.CONSTRUCTIONS[kind](*(getattr(args, p) for p in need))
    if args.emit == "dot":
        emit(args, coloring_dot(c))
        return 0
    out = c.to_json()
    if isinstance(c, TwoColoring):
        e_r, e_b, low = class_sizes(c)
        out.update({"e_R": e_r, "e_B": e_b, "min_class": low})
    emit(args, out)
    return 0


def cmd_detect(args) -> int:
    c = load_coloring(args.coloring)
    if isinstance(c, KColoring):
        raise UsageError("detect works on 2-colourings")
    h = parse_graph(args.pattern)
    if args.mode == "induced":
        w = patterns.find_induced_mono(c, h)
    elif args.mode == "weak":
        w = patterns.find_weakly_induced_mono(c, h, args.strict)
    else:
        w = patterns.find_balanced_copy(c, h)
    emit(args, w.to_json() if w else "none")
    return 0 if w else 1


def cmd_search(args) -> int:
    t = args.timing
    if args.quantity == "ex2":
        if args.n is None or args.family is None:
            raise UsageError("search ex2 needs --n and --family")
        fam = parse_family(args.family)
        cert = search.ex2_exact(args.n, fam, args.mode, args.workers, args.lower_bound, args.strict)
        emit(args, cert.to_json(t))
        return 0 if search.verify_certificate(cert, fam) else 1
    if args.quantity == "bal":
        if args.n is None or args.graph is None:
            raise UsageError("search bal needs --n and --graph")
        g = parse_graph(args.graph)
        cert = search.bal_exact(args.n, g, args.mode, args.workers, args.with_half)
        emit(args, cert.to_json(t))
        return 0 if search.verify_certificate(cert, g=g) else 1
    if args.quantity == "zarankiewicz":
        if None in (args.m, args.n, args.s, args.t):
            raise UsageError("search zarankiewicz needs --m --n --s --t")
        cert = search.zarankiewicz_exact(args.m, args.n, args.s, args.t)
        emit(args, cert.to_json(t))
        return 0 if search.verify_certificate(cert) else 1
    if args.quantity == "ramsey":
        if args.k is None:
            raise UsageError("search ramsey needs --k (and optionally --n)")
        if args.bipartite:
            if args.n is None:
                value, source = search.bipartite_ramsey_value(args.k, args.literature)
                emit(args, {"quantity": "BR", "t": args.k, "value": value, "source": source})
                return 0
            ok, rows = search.bipartite_ramsey_check(args.k, args.n)
            emit(args, {"quantity": "BR-check", "t": args.k, "n": args.n, "forced": ok, "witness_rows": rows})
            return 0
        if args.n is None:
            value, source = search.ramsey_value(args.k, args.literature)
            emit(args, {"quantity": "R", "k": args.k, "value": value, "source": source})
            return 0
        ok, wit = search.ramsey_check(args.k, args.n)
        emit(args, {"quantity": "R-check", "k": args.k, "n": args.n, "forced": ok,
                    "witness": wit.to_json() if wit else None})
        return 0
    raise UsageError(f"unknown quantity {args.quantity!r}")


def cmd_balance(args) -> int:
    g = parse_graph(args.graph)
    if args.action == "check":
        w = balance.charBP_witness(g)
        emit(args, {"graph": graph6.encode(g), "balanceable": w is not None,
                    "witness": w.to_json() if w else None})
        return 0 if w else 1
    if args.action == "ck":
        rep = balance.in_Ck(g)
        emit(args, rep.to_json())
        return 0 if rep.member else 1
    if args.action == "constant":
        rep = balance.constant_bal_predicate(g)
        emit(args, {"graph": graph6.encode(g), "k": rep.k, "constant": rep.value,
                    "removed_edge": list(rep.removed_edge) if rep.removed_edge else None,
                    "report": rep.report.to_json() if rep.report else None})
        return 0 if rep.value else 1
    if args.action == "half":
        fam = balance.half_family(g)
        emit(args, {"graph": graph6.encode(g), "members": [m.label for m in fam.members]})
        return 0
    raise UsageError(f"unknown balance action {args.action!r}")


def _as_kcoloring(c) -> KColoring:
    return two_as_kcoloring(c) if isinstance(c, TwoColoring) else c


def cmd_multicolor(args) -> int:
    c = _as_kcoloring(load_coloring(args.coloring))
    if args.action == "classify":
        cls = multicolor.classify_colors(c, args.t)
        emit(args, cls.to_json())
        return 0
    if args.cliques:
        with open(args.cliques) as fh:
            cliques = {int(k): list(v) for k, v in json.load(fh).items()}
    else:
        cliques = multicolor.search_clique_grid(c, args.t)
        if cliques is None:
            emit(args, "none")
            return 1
    ok = multicolor.verify_multicolor_b(c, args.t, cliques)
    emit(args, {"t": args.t, "cliques": {str(k): v for k, v in sorted(cliques.items())}, "verified": ok})
    return 0 if ok else 1


def cmd_verify(args) -> int:
    name = args.suite
    if name == "all":
        names = list(suites.SUITES)
    elif name in suites.SUITES:
        names = [name]
    else:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(suites.SUITES)} or all")
    results = []
    for nm in names:
        fn = suites.SUITES[nm]
        kwargs = {}
        if nm in ("ex2-degenerate", "lower-bound", "constant-regime"):
            kwargs["workers"] = args.workers
        if nm in ("strong-coloring", "detector-oracle"):
            kwargs["seed"] = args.seed
            if args.samples is not None:
                kwargs["samples"] = args.samples
        if nm == "lemma-structure" and args.k:
            kwargs["k_values"] = tuple(args.k)
        results.append(fn(**kwargs))
    payload = {"manifest": manifest(args), "results": [r.to_json() for r in results],
               "passed": all(r.passed for r in results)}
    for r in results:
        print(f"{r.suite}: {'pass' if r.passed else 'FAIL'}", file=sys.stderr)
    emit(args, payload)
    return 0 if payload["passed"] else 1


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unavoidable", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--workers", type=int, default=default_workers(),
                        help=f"worker threads (default ${WORKERS_ENV} or 1)")
        sp.add_argument("--timing", action="store_true", help="include wall time in certificates")

    c = sub.add_parser("construct", help="build an extremal colouring")
    c.add_argument("--kind", required=True, choices=sorted(constructions.CONSTRUCTIONS))
    for name in ("n", "r", "s", "t", "k", "q"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--blue", help="K_{s,t}-free bipartite graph (graph6) for --kind incidence")
    c.add_argument("--emit", choices=["json", "dot"], default="json")
    common(c)
    c.set_defaults(func=cmd_construct)

    d = sub.add_parser("detect", help="find a monochromatic or balanced pattern in a colouring")
    d.add_argument("--coloring", required=True)
    d.add_argument("--pattern", required=True)
    d.add_argument("--mode", choices=["induced", "weak", "balanced"], default="induced")
    d.add_argument("--strict", action="store_true", help="weak mode also forbids intra-component non-edges")
    common(d)
    d.set_defaults(func=cmd_detect)

    s = sub.add_parser("search", help="exact extremal values with certificates")
    s.add_argument("quantity", choices=["ex2", "bal", "zarankiewicz", "ramsey"])
    for name in ("n", "m", "s", "t", "k"):
        s.add_argument(f"--{name}", type=int)
    s.add_argument("--family")
    s.add_argument("--graph")
    s.add_argument("--mode", choices=["raw", "canonical"], default="raw")
    s.add_argument("--lower-bound", type=int, default=0)
    s.add_argument("--strict", action="store_true")
    s.add_argument("--with-half", action="store_true", help="bal: also report ex2 of the half family")
    s.add_argument("--bipartite", action="store_true", help="ramsey: K_{t,t} in K_{n,n}")
    s.add_argument("--literature", action="store_true", help="ramsey: allow tabulated values")
    common(s)
    s.set_defaults(func=cmd_search)

    b = sub.add_parser("balance", help="balanceability and constant balancing number")
    b.add_argument("action", choices=["check", "ck", "constant", "half"])
    b.add_argument("--graph", required=True)
    common(b)
    b.set_defaults(func=cmd_balance)

    m = sub.add_parser("multicolor", help="colour classification and clique grids")
    m.add_argument("action", choices=["classify", "verify-b"])
    m.add_argument("--coloring", required=True)
    m.add_argument("--t", type=int, default=2)
    m.add_argument("--cliques", help="JSON map colour -> vertex list")
    common(m)
    m.set_defaults(func=cmd_multicolor)

    v = sub.add_parser("verify", help="run a named property suite")
    v.add_argument("--suite", required=True, help="suite name or 'all'")
    v.add_argument("--k", type=int, action="append", help="lemma-structure edge counts (repeatable)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int)
    common(v)
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError) as exc:
        # malformed graphs, colourings, families or out-of-range parameters
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
