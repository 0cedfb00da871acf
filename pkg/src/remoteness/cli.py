"""Command-line front end.

Exit codes: 0 clean, 1 a mathematical violation or mismatch was found,
2 usage, input or I/O error.  Rationals are printed as ``"p/q"`` strings;
decimals are display-only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .bounds import (
    BoundReport,
    bound_kappa,
    bound_lambda_order,
    bound_lambda_size,
    bound_order,
    bound_size,
    bound_triangle_free,
    epsilon_closed_form,
    epsilon_exact,
    epsilon_window,
    format_decimal,
)
from .connectivity import edge_connectivity, is_triangle_free, vertex_connectivity
from .families import (
    bpk,
    enumerate_kappa_pc,
    enumerate_lambda_pc,
    kappa_pc_graph,
    lambda_pc_graph,
    pk_kappa_params,
    pk_lambda_params,
)
from .graphcore import (
    Graph,
    GraphError,
    diameter,
    encode_graph6,
    from_block_sequence,
    parse_blocks,
    remoteness,
)
from .verifier.corpus import CorpusError, CorpusSpec, load_graph6
from .verifier.sweeps import SweepCheck, SweepLimits, sweep_consistency
from .verifier.theorems import THEOREMS, check_uniqueness_window, verify_theorem

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad parameter combination detected after argument parsing."""


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _q(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


# --- construct --------------------------------------------------------------


def _emit_graph(g: Graph, fmt: str, label: str) -> None:
    if fmt == "text":
        _out(f"{label} n={g.n} m={g.m}")
        for v in range(g.n):
            _out(f"{v}: {' '.join(map(str, g.neighbors(v)))}")
    elif fmt == "json":
        _out(json.dumps({"label": label, "n": g.n, "m": g.m,
                         "graph6": encode_graph6(g).decode(), "edges": g.edges()}))
    else:
        _out(encode_graph6(g).decode())


def cmd_construct(args: argparse.Namespace) -> int:
    fam = args.family
    built: list[tuple[str, Graph]] = []
    if fam == "pk-kappa":
        _need(args, "n", "m", "kappa")
        p = pk_kappa_params(args.n, args.m, args.kappa)
        built.append((str(p), kappa_pc_graph(p)))
    elif fam == "pk-lambda":
        _need(args, "n", "m", "lam")
        p = pk_lambda_params(args.n, args.m, args.lam)
        built.append((p.label(), lambda_pc_graph(p)))
    elif fam == "bpk":
        _need(args, "n", "m")
        p, g = bpk(args.n, args.m)
        built.append((str(p), g))
    elif fam == "kappa-pc":
        _need(args, "n", "kappa")
        built = [(str(p), kappa_pc_graph(p)) for p, _ in enumerate_kappa_pc(args.n, args.kappa)]
    elif fam == "lambda-pc":
        _need(args, "n", "lam")
        built = [(p.label(), lambda_pc_graph(p)) for p, _ in enumerate_lambda_pc(args.n, args.lam)]
    else:
        _need(args, "blocks")
        blocks = parse_blocks(args.blocks)
        built.append(("[" + ",".join(map(str, blocks)) + "]", from_block_sequence(blocks)))
    for label, g in built:
        print(f"{label}: order {g.n}, size {g.m}", file=sys.stderr)
        _emit_graph(g, args.format or "graph6", label)
    return EXIT_OK


# --- invariants ---------------------------------------------------------------


def graph_invariants(g: Graph, precision: int = 6) -> dict:
    connected = g.n >= 2 and g.is_connected()
    rec: dict = {"n": g.n, "m": g.m, "graph6": encode_graph6(g).decode(), "connected": connected}
    if connected:
        r, where = remoteness(g)
        rec.update(rho=str(r), rhoDecimal=format_decimal(r, precision), maximizers=sorted(where),
                   kappa=vertex_connectivity(g), **{"lambda": edge_connectivity(g)},
                   diameter=diameter(g))
    else:
        rec.update(rho=None, rhoDecimal=None, maximizers=[], kappa=0, **{"lambda": 0}, diameter=None)
    rec["triangleFree"] = is_triangle_free(g)
    return rec


_INV_COLS = ["line", "n", "m", "graph6", "connected", "rho", "rhoDecimal", "maximizers",
             "kappa", "lambda", "diameter", "triangleFree"]


def cmd_invariants(args: argparse.Namespace) -> int:
    fmt = args.format or "json"
    rows = []
    for lineno, g in load_graph6(args.path):
        rows.append({"line": lineno, **graph_invariants(g, args.precision)})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(_INV_COLS)
        for r in rows:
            w.writerow(["" if r[c] is None else
                        (" ".join(map(str, r[c])) if isinstance(r[c], list) else
                         str(r[c]).lower() if isinstance(r[c], bool) else r[c]) for c in _INV_COLS])
        sys.stdout.write(buf.getvalue())
    else:
        for r in rows:
            _out(json.dumps(r))
    return EXIT_OK


# --- bound ------------------------------------------------------------------


def _report(which: str, inputs: dict, value: Fraction | None, note: str = "", **extra) -> dict:
    return {"bound": which, "inputs": inputs, "applicable": value is not None,
            "value": _q(value), "note": note, **extra}


def _from_bound_report(which: str, b: BoundReport) -> dict:
    extras = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in b.extras.items()}
    return _report(which, b.inputs, b.value, b.note, **({"extras": extras} if extras else {}))


def evaluate_bound(args: argparse.Namespace) -> dict:
    which, n, m = args.which, args.n, args.m
    _need(args, "n")
    if n < 2:
        raise UsageError("bounds need --n >= 2")
    if which == "order":
        return _report(which, {"n": n}, bound_order(n))
    if which.startswith("lambda") or which == "epsilon":
        _need(args, "lam")
        if args.lam not in (2, 3):
            raise UsageError("--lambda must be 2 or 3")
    if which == "lambda-order":
        return _report(which, {"n": n, "lambda": args.lam}, bound_lambda_order(n, args.lam))
    _need(args, "m")
    if which == "size":
        if m < n - 1:
            return _report(which, {"n": n, "m": m}, None, f"no connected graph has fewer than {n - 1} edges")
        return _report(which, {"n": n, "m": m}, bound_size(n, m))
    if which == "kappa":
        _need(args, "kappa")
        if args.kappa < 1:
            raise UsageError("--kappa must be >= 1")
        return _from_bound_report(which, bound_kappa(n, m, args.kappa))
    if which == "triangle-free":
        if not n - 1 <= m <= n * n // 4:
            return _report(which, {"n": n, "m": m}, None, f"m outside [{n - 1}, {n * n // 4}]")
        return _report(which, {"n": n, "m": m}, bound_triangle_free(n, m))
    lam = args.lam
    if which == "lambda-size":
        return _from_bound_report(which, bound_lambda_size(n, m, lam))
    inputs = {"n": n, "m": m, "lambda": lam}
    try:
        eps = epsilon_exact(n, m, lam)
    except ValueError as exc:
        return _report(which, inputs, None, str(exc))
    lo, hi = epsilon_window(lam)
    closed = {k: str(v) for k, v in epsilon_closed_form(n, m, lam).items()}
    return _report(which, inputs, eps, "", window=[str(lo), str(hi)],
                   insideWindow=lo < eps < hi, closedForms=closed,
                   member=pk_lambda_params(n, m, lam).label())


def cmd_bound(args: argparse.Namespace) -> int:
    rep = evaluate_bound(args)
    rep["decimal"] = format_decimal(Fraction(rep["value"]), args.precision) if rep["value"] else None
    fmt = args.format or "json"
    if fmt == "text":
        _out(rep["value"] if rep["applicable"] else "not applicable")
    elif fmt == "csv":
        _out("bound,applicable,value\n" + f"{rep['bound']},{str(rep['applicable']).lower()},{rep['value'] or ''}")
    else:
        _out(json.dumps(rep, indent=2))
    return EXIT_OK


# --- verify / uniqueness / sweep -------------------------------------------


def _corpus(args: argparse.Namespace) -> CorpusSpec:
    if (args.internal_n is None) == (args.corpus is None):
        raise UsageError("give exactly one of --internal-n or --corpus")
    return CorpusSpec(internal_n=args.internal_n, path=args.corpus,
                      size_exact=args.size_exact, size_at_least=args.size_at_least)


def _write_report(rep, args: argparse.Namespace) -> None:
    fmt = args.format or "json"
    if fmt == "csv":
        sys.stdout.write(rep.to_csv())
    elif fmt == "json":
        sys.stdout.write(rep.dumps(args.precision) if hasattr(rep, "per_cell") else rep.dumps())
    else:
        raise UsageError(f"--format {fmt} is not available for reports")


def cmd_verify(args: argparse.Namespace) -> int:
    param = args.kappa if args.kappa is not None else args.lam
    rep = verify_theorem(args.theorem, _corpus(args), param=param, jobs=args.jobs)
    _write_report(rep, args)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_uniqueness(args: argparse.Namespace) -> int:
    _need(args, "n", "kappa")
    corpus = CorpusSpec(path=args.corpus) if args.corpus else None
    rep = check_uniqueness_window(args.n, args.kappa, corpus, jobs=args.jobs)
    _write_report(rep, args)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_sweep(args: argparse.Namespace) -> int:
    check = SweepCheck(args.check)
    base = SweepLimits.default(check)
    limits = SweepLimits(args.n_max if args.n_max is not None else base.n_max,
                         args.kappa_max if args.kappa_max is not None else base.kappa_max)
    rep = sweep_consistency(check, limits)
    _write_report(rep, args)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_corpus(args: argparse.Namespace) -> int:
    from .verifier.generate import graph_classes

    for g in graph_classes(args.n, connected_only=args.connected):
        _out(encode_graph6(g).decode())
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_nonneg, default=6,
                        help="decimal places for display-only decimals (default 6)")
    common.add_argument("--jobs", type=_positive, default=1,
                        help="worker threads for exhaustive scans (default 1)")
    common.add_argument("--format", choices=["json", "csv", "graph6", "text"],
                        help="output format (default depends on the command)")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--n", type=int)
    params.add_argument("--m", type=int)
    params.add_argument("--kappa", type=int)
    params.add_argument("--lambda", dest="lam", type=int)

    p = argparse.ArgumentParser(prog="remoteness",
                                description="Remoteness of graphs: constructions, bounds and verification.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common, params], help="build an extremal graph")
    c.add_argument("--family", required=True,
                   choices=["pk-kappa", "pk-lambda", "bpk", "kappa-pc", "lambda-pc", "blocks"])
    c.add_argument("--blocks", help='block sequence such as "C1,C2,C2,C1" (family blocks)')
    c.set_defaults(func=cmd_construct)

    i = sub.add_parser("invariants", parents=[common], help="invariants of graph6 records")
    i.add_argument("path", help='graph6 file, or "-" for standard input')
    i.set_defaults(func=cmd_invariants)

    b = sub.add_parser("bound", parents=[common, params], help="evaluate a bound exactly")
    b.add_argument("--which", required=True, choices=["order", "size", "kappa", "lambda-order",
                                                       "lambda-size", "triangle-free", "epsilon"])
    b.set_defaults(func=cmd_bound)

    v = sub.add_parser("verify", parents=[common], help="verify a theorem over a corpus")
    v.add_argument("--theorem", required=True,
                   help="theorem id: " + ", ".join(sorted(THEOREMS)) + " (or aliases like thm5.1)")
    v.add_argument("--internal-n", type=int, help="scan every labeled graph of this order (2..7)")
    v.add_argument("--corpus", help='graph6 corpus file, or "-" for standard input')
    v.add_argument("--kappa", type=int)
    v.add_argument("--lambda", dest="lam", type=int)
    v.add_argument("--size-exact", type=int)
    v.add_argument("--size-at-least", type=int)
    v.set_defaults(func=cmd_verify)

    u = sub.add_parser("uniqueness", parents=[common], help="uniqueness of kappa extremal graphs")
    u.add_argument("--n", type=int)
    u.add_argument("--kappa", type=int)
    u.add_argument("--corpus", help="graph6 corpus of order n (default: internal enumeration)")
    u.set_defaults(func=cmd_uniqueness)

    s = sub.add_parser("sweep", parents=[common], help="constructive consistency sweep")
    s.add_argument("--check", required=True, choices=[c.value for c in SweepCheck])
    s.add_argument("--n-max", type=int)
    s.add_argument("--kappa-max", type=int)
    s.set_defaults(func=cmd_sweep)

    g = sub.add_parser("corpus", parents=[common], help="emit one graph6 per isomorphism class")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--connected", action="store_true", help="connected graphs only")
    g.set_defaults(func=cmd_corpus)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, CorpusError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"remoteness {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
