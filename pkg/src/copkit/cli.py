"""copkit command-line interface.

Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 a report
check failed, 4 solver budget exceeded.
"""
from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from . import graph as gc
from .gadgets import build_digraph_gadget, build_gadget, choose_m
from .graph import Digraph, Graph, GraphError
from .lift import verify_escape
from .meyniel import meyniel_pipeline
from .report import Check, all_ok, render_report
from .solver import DEFAULT_BUDGET, BudgetExceeded, CopNumberExceeded, cop_number, cops_win
from .transforms import (digraph_transform, hat_transform, iterate_to_subcubic, serialize_map,
                         verify_digraph_bounds, verify_transform_bounds)

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_CHECK, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    p = _Parser(prog="copkit", description="Degree reduction for Cops and Robbers.")
    p.add_argument("--threads", type=int, default=1, help="accepted for scripting; runs sequentially")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, **kw):
        return sub.add_parser(name, **kw)

    s = cmd("gadget", help="replacement graph A_d(m)")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--out")
    s.add_argument("--report")

    s = cmd("digadget", help="merged binary-tree digraph gadget")
    s.add_argument("--in-deg", type=int, required=True)
    s.add_argument("--out-deg", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--report")

    for name in ("transform", "ditransform"):
        s = cmd(name)
        s.add_argument("--input", required=True)
        s.add_argument("--out")
        s.add_argument("--map")
        s.add_argument("--report")

    s = cmd("reduce", help="iterate the transform down to maximum degree 3")
    s.add_argument("--input", required=True)
    s.add_argument("--out")
    s.add_argument("--report")

    for name in ("copnum", "verify-monotone"):
        s = cmd(name)
        s.add_argument("--input", required=True)
        s.add_argument("--max-cops", type=int, required=True)
        s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        s.add_argument("--report")

    s = cmd("lift-sim", help="simulate the lifted robber escape on G_hat")
    s.add_argument("--input", required=True)
    s.add_argument("--cops", type=int, required=True)
    s.add_argument("--rounds", type=int, required=True)
    s.add_argument("--cop-policy", choices=("optimal", "random", "greedy"), required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--report")
    s.add_argument("--out", help="write the game transcript here")

    s = cmd("meyniel", help="greedy cop cover plus subcubic reduction")
    s.add_argument("--input", required=True)
    s.add_argument("--epsilon", required=True)
    s.add_argument("--report")

    s = cmd("gnp")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=float, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out")

    s = cmd("named")
    s.add_argument("--family", required=True)
    s.add_argument("--size")
    s.add_argument("--out")

    s = cmd("render", help="DOT export")
    s.add_argument("--input", required=True)
    s.add_argument("--out", required=True)
    return p


def _read_graph(path):
    with open(path, "rb") as fh:
        return gc.parse_graph(fh.read())


def _emit(data, path, stdout):
    if path:
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        stdout.write(data)


def _gadget_checks(gad):
    want = gad.d + math.comb(gad.m, 2)
    hub_cap = 2 * -(-gad.d // gad.m)
    hub_deg = max(gad.internal.degree(y) for y in gad.hubs.values())
    att_deg = sorted({gad.internal.degree(x) for x in gad.attachments})
    return [Check("vertex_count", gad.size, want, gad.size == want),
            Check("hub_degree", hub_deg, hub_cap, hub_deg <= hub_cap),
            Check("attachment_degree", att_deg, gad.m - 1, att_deg == [gad.m - 1])]


def run_command(args, stdout):
    """Execute a parsed command; returns (exit code, report bytes or None)."""
    c = args.command
    inputs = {k: v for k, v in vars(args).items() if k not in ("command", "threads")}
    outputs = {}
    checks = []
    primary = None  # bytes for --out / stdout
    transcript = None

    if c == "gadget":
        m = args.m if args.m is not None else choose_m(args.d)
        gad = build_gadget(args.d, m)
        primary = gc.serialize(gad.internal)
        outputs = {"n": gad.size, "m": m, "attachments": list(gad.attachments), "parts": [list(x) for x in gad.parts]}
        checks = _gadget_checks(gad)
    elif c == "digadget":
        gad = build_digraph_gadget(args.in_deg, args.out_deg)
        dg = gad.internal
        primary = gc.serialize(dg)
        dists = {dg.bfs_distances(a)[b] for a in gad.in_attachments for b in gad.out_attachments}
        outputs = {"n": dg.n, "k": gad.k, "l": gad.l, "in_attachments": list(gad.in_attachments),
                   "out_attachments": list(gad.out_attachments)}
        bound = 2 ** (gad.k + 1) + 2 ** (gad.l + 1)
        checks = [Check("max_in_degree", dg.max_in_degree, 2, dg.max_in_degree <= 2),
                  Check("max_out_degree", dg.max_out_degree, 2, dg.max_out_degree <= 2),
                  Check("vertex_count", dg.n, bound, dg.n < bound),
                  Check("in_out_distance", sorted(dists), gad.k + gad.l, dists == {gad.k + gad.l})]
    elif c == "transform":
        g = _read_graph(args.input)
        if not isinstance(g, Graph):
            raise GraphError("transform expects an undirected graph")
        ghat, smap = hat_transform(g)
        primary = gc.serialize(ghat)
        if args.map:
            _emit(serialize_map(smap), args.map, stdout)
        outputs = {"n": g.n, "max_degree": g.max_degree, "n_hat": ghat.n, "max_degree_hat": ghat.max_degree}
        checks = verify_transform_bounds(g, ghat, smap).checks
    elif c == "ditransform":
        d = _read_graph(args.input)
        if isinstance(d, Graph):
            d = Digraph.from_graph(d)
        dprime, smap = digraph_transform(d)
        primary = gc.serialize(dprime)
        if args.map:
            _emit(serialize_map(smap), args.map, stdout)
        outputs = {"n": d.n, "max_in_degree": d.max_in_degree, "max_out_degree": d.max_out_degree,
                   "n_prime": dprime.n}
        checks = verify_digraph_bounds(d, dprime, smap).checks
    elif c == "reduce":
        g = _read_graph(args.input)
        if not isinstance(g, Graph):
            raise GraphError("reduce expects an undirected graph")
        final, _, rep = iterate_to_subcubic(g)
        primary = gc.serialize(final)
        outputs = {"initial_n": rep.initial_n, "initial_d": rep.initial_d, "k_used": rep.k_used,
                   "mu": rep.mu, "final_n": final.n, "final_max_degree": final.max_degree,
                   "iterations": [{"vertex_count": it.vertex_count, "max_degree": it.max_degree}
                                  for it in rep.iterations]}
        checks = rep.checks()
    elif c == "copnum":
        g = _read_graph(args.input)
        try:
            k = cop_number(g, args.max_cops, args.budget)
            checks = [Check("cop_number_found", k, args.max_cops, True)]
        except CopNumberExceeded:
            k = None
            checks = [Check("cop_number_found", None, args.max_cops, False)]
        outputs = {"cop_number": k}
    elif c == "verify-monotone":
        g = _read_graph(args.input)
        if not isinstance(g, Graph):
            raise GraphError("verify-monotone expects an undirected graph")
        try:
            k = cop_number(g, args.max_cops, args.budget)
        except CopNumberExceeded:
            k = None
        ghat, _ = hat_transform(g)
        outputs = {"cop_number": k, "n_hat": ghat.n}
        checks = [Check("cop_number_found", k, args.max_cops, k is not None)]
        if k is not None:
            t = k - 1
            hat_win = cops_win(ghat, t, args.budget).cops_win
            outputs["t"] = t
            checks.append(Check(f"cops_win_hat_{t}", hat_win, False, not hat_win))
    elif c == "lift-sim":
        g = _read_graph(args.input)
        if not isinstance(g, Graph):
            raise GraphError("lift-sim expects an undirected graph")
        try:
            rep = verify_escape(g, args.cops, args.cop_policy, args.rounds, args.seed, args.budget)
        except ValueError as exc:
            if "no escape" not in str(exc):
                raise
            checks = [Check("base_escape_exists", False, True, False)]
        else:
            outputs = {"n": rep.n_base, "n_hat": rep.n_hat, "captured": rep.captured,
                       "capture_round": rep.capture_round, "macro_rounds": rep.macro_rounds,
                       "max_macro_length": rep.max_macro_length,
                       "max_shadow_displacement": rep.max_shadow_displacement,
                       "counterexample": rep.counterexample}
            checks = rep.checks
            transcript = rep.transcript
    elif c == "meyniel":
        g = _read_graph(args.input)
        if not isinstance(g, Graph):
            raise GraphError("meyniel expects an undirected graph")
        rep = meyniel_pipeline(g, Fraction(args.epsilon))
        outputs = rep.summary()
        checks = rep.checks()
    elif c == "gnp":
        primary = gc.serialize(gc.gnp(args.n, args.p, args.seed))
    elif c == "named":
        size = None
        if args.size is not None:
            parts = [int(x) for x in args.size.split(",")]
            size = parts[0] if len(parts) == 1 else tuple(parts)
        primary = gc.serialize(gc.named_graph(args.family, size))
    elif c == "render":
        primary = gc.serialize(_read_graph(args.input), "dot")

    report = render_report(c, inputs, outputs, checks)
    out_path = getattr(args, "out", None)
    if primary is not None:
        _emit(primary, out_path, stdout)
    elif c == "lift-sim" and out_path and transcript is not None:
        _emit(transcript.encode("ascii"), out_path, stdout)
    rep_path = getattr(args, "report", None)
    if rep_path:
        _emit(report, rep_path, stdout)
    elif primary is None or out_path:
        # stdout is free unless the primary artifact went there
        if c not in ("gnp", "named", "render"):
            stdout.write(report)
    return (EXIT_OK if all_ok(checks) else EXIT_CHECK), report


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"copkit: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    try:
        code, _ = run_command(args, stdout)
        return code
    except BudgetExceeded as exc:
        print(f"copkit: {exc}", file=stderr)
        return EXIT_BUDGET
    except (OSError, GraphError) as exc:
        print(f"copkit: {exc}", file=stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"copkit: usage error: {exc}", file=stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
