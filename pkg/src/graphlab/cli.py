"""Command-line entry point: ``graphlab <group> <command> [options]``.

Exit status is 0 on success, 1 on invalid input and 2 when a ``verify``
command finds an identity violated beyond ``--tol``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

import numpy as np

from . import __version__
from ._random import DEFAULT_SEED
from .degrees import (fit_power_law, histogram, pa_c, pa_degree_variance, pa_expected_degree,
                      pa_limit_pmf, pa_tau)
from .generators import ErParams, PaParams, generate_er, generate_pa
from .graph import read_graph, write_graph
from .protein import build_network, load_sequences, pa_compatibility_report
from .subgraph import sample_edges, sample_nodes_bernoulli, sample_nodes_uniform
from .walks import commute_time, effective_resistance, hitting_times, simulate_walks, verify_tetali

SCHEMA = "graphlab/v1"
log = logging.getLogger("graphlab")


class VerificationFailed(Exception):
    pass


def _seed(args):
    if args.seed is None:
        log.warning("no --seed given, using default seed %d", DEFAULT_SEED)
        return DEFAULT_SEED
    return args.seed


def _emit_text(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _json(payload, path=None):
    doc = {"schema": SCHEMA, **payload}
    _emit_text(json.dumps(doc, indent=2) + "\n", path)


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _write_graph_out(g, path):
    if path is None or path == "-":
        write_graph(g, sys.stdout)
    else:
        write_graph(g, path)


def _sidecar(out, explicit, suffix):
    if explicit:
        return explicit
    if out is None or out == "-":
        return None
    return os.path.splitext(out)[0] + suffix


# ---------------------------------------------------------------- gen

def cmd_gen_er(args):
    g = generate_er(ErParams(args.nodes, args.prob, _seed(args)))
    _write_graph_out(g, args.out)


def cmd_gen_pa(args):
    track = [int(t) for t in args.track_nodes.split(",") if t.strip()] if args.track_nodes else []
    trace = generate_pa(PaParams(args.nodes, args.m, args.delta, _seed(args)), track=track)
    g = trace.stripped() if args.strip_self_loops else trace.graph
    _write_graph_out(g, args.out)
    if track:
        path = _sidecar(args.out, args.history, ".history.csv")
        text = _csv_text(["t", "i", "degree"], trace.history_rows())
        if path is None:
            sys.stderr.write(text)
        else:
            _emit_text(text, path)


# ---------------------------------------------------------------- sample

def _load(args, **kw):
    return read_graph(args.input, multiplicity=getattr(args, "multiplicity", False), **kw)


def cmd_sample_edges(args):
    g = _load(args)
    _write_graph_out(sample_edges(g, args.q, _seed(args)), args.out)


def _write_nodes(args, sub, kept):
    _write_graph_out(sub, args.out)
    path = _sidecar(args.out, args.map, ".map.csv")
    text = _csv_text(["new_id", "old_id"], ((k, old) for k, old in enumerate(kept, start=1)))
    if path is None:
        sys.stderr.write(text)
    else:
        _emit_text(text, path)


def cmd_sample_nodes_uniform(args):
    g = _load(args)
    _write_nodes(args, *sample_nodes_uniform(g, args.keep, _seed(args)))


def cmd_sample_nodes_bernoulli(args):
    g = _load(args)
    _write_nodes(args, *sample_nodes_bernoulli(g, args.q, _seed(args)))


# ---------------------------------------------------------------- analyze / pa

def cmd_analyze_degrees(args):
    h = histogram(_load(args))
    if args.format == "json":
        _json({"n": h.n, "mean": h.mean(),
               "counts": {str(k): c for k, c in h.as_dict().items()}}, args.out)
        return
    header = ["k", "N_k", "pmf", "ccdf"] if args.ccdf else ["k", "N_k", "pmf"]
    rows = (r if args.ccdf else r[:3] for r in h.rows())
    _emit_text(_csv_text(header, rows), args.out)


def cmd_analyze_powerlaw(args):
    fit = fit_power_law(histogram(_load(args)), args.kmin)
    _json({"tau": fit.tau, "k_min": fit.k_min, "n_tail": fit.n_tail,
           "normalization": fit.normalization}, args.out)


def cmd_pa_theory(args):
    m, delta = args.m, args.delta
    doc = {"m": m, "delta": delta, "tau": pa_tau(m, delta), "c": pa_c(m, delta)}
    if args.pmf_upto is not None:
        k = np.arange(args.pmf_upto + 1)
        doc["pmf"] = [float(v) for v in pa_limit_pmf(m, delta, k)]
    if args.expected or args.variance:
        if args.node is None or args.n is None:
            raise ValueError("--expected/--variance need --node and --n")
        if args.expected:
            doc["expected_degree"] = pa_expected_degree(m, delta, args.node, args.n)
        if args.variance:
            doc["variance"] = pa_degree_variance(m, delta, args.node, args.n)
        doc["node"], doc["n"] = args.node, args.n
    _json(doc, args.out)


# ---------------------------------------------------------------- walks / network

def _load_walkable(args):
    return read_graph(args.input, allows_self_loops=False)


def cmd_walk_hitting(args):
    g = _load_walkable(args)
    sol = hitting_times(g, args.target)
    if args.json:
        _json({"target": sol.target, "times": sol.times.tolist(), "residual": sol.residual},
              args.out)
    else:
        _emit_text(_csv_text(["node", "hitting_time"],
                             ((x, float(t)) for x, t in enumerate(sol.times, start=1))), args.out)


def cmd_walk_commute(args):
    g = _load_walkable(args)
    ct = commute_time(g, args.x, args.y)
    r = effective_resistance(g, args.x, args.y).r_eff
    _json({"x": args.x, "y": args.y, "commute_time": ct, "r_eff": r,
           "r_eff_times_total_weight": r * float(g.degrees().sum())}, args.out)


def cmd_walk_mc(args):
    g = _load_walkable(args)
    st = simulate_walks(g, args.x, args.y, args.walks, _seed(args), workers=args.threads)
    mu = g.degrees()
    se = st.visit_stderr()
    table = [{"node": z, "visits_mean": float(st.visit_mean[z - 1]),
              "visits_stderr": float(se[z - 1]),
              "visits_per_weight": float(st.visit_mean[z - 1] / mu[z - 1])}
             for z in range(1, g.n + 1)]
    _json({"x": args.x, "y": args.y, "walks": args.walks, "seed": st.seed,
           "mean": st.hitting_mean, "sd": st.hitting_sd, "stderr": st.hitting_stderr,
           "visits": table}, args.out)


def cmd_network_resistance(args):
    g = _load_walkable(args)
    sol = effective_resistance(g, args.x, args.y)
    _json({"x": args.x, "y": args.y, "r_eff": sol.r_eff,
           "harmonic_residual": sol.harmonic_residual}, args.out)
    if args.potentials:
        _emit_text(_csv_text(["node", "potential"],
                             ((z, float(v)) for z, v in enumerate(sol.potentials, start=1))),
                   args.potentials)


def cmd_verify_tetali(args):
    g = _load_walkable(args)
    rep = verify_tetali(g)
    ok = rep.ok(args.tol)
    _json({**rep.as_dict(), "tol": args.tol, "ok": ok}, args.out)
    if not ok:
        raise VerificationFailed(f"|lhs - (n-1)| = {rep.abs_err:.3e} exceeds tol*(n-1)")


# ---------------------------------------------------------------- bio

def cmd_bio_build(args):
    net = build_network(load_sequences(args.seqs, args.format, extras=args.extras))
    _write_graph_out(net.graph, args.out)
    if args.labels:
        _emit_text(_csv_text(["node", "id"], net.labels.items()), args.labels)


def cmd_bio_report(args):
    net = build_network(load_sequences(args.seqs, args.format, extras=args.extras))
    _json(pa_compatibility_report(net, args.kmin), args.out)


# ---------------------------------------------------------------- parser

def _common(p, *, seed=False, out=True, inp=False):
    if inp:
        p.add_argument("--in", dest="input", required=True, help="edge-list file")
    if out:
        p.add_argument("--out", default=None, help="output file (default: stdout)")
    if seed:
        p.add_argument("--seed", type=int, default=None, help="64-bit RNG seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphlab",
        description="Random graphs, subgraph sampling, degree laws and random walks "
                    "on weighted graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker cap for parallel Monte Carlo (default: all cores)")
    parser.add_argument("--tol", type=float, default=1e-8,
                        help="tolerance for verify commands (default 1e-8)")
    parser.add_argument("--format", choices=("json", "csv"), default="csv",
                        help="table output format where both are offered")
    parser.add_argument("-v", "--verbose", action="store_true")
    groups = parser.add_subparsers(dest="group", required=True)

    gen = groups.add_parser("gen", help="generate random graphs").add_subparsers(
        dest="cmd", required=True)
    p = gen.add_parser("er", help="Erdos-Renyi G(n, p): every pair joined independently "
                                  "with probability p")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--prob", type=float, required=True)
    _common(p, seed=True)
    p.set_defaults(func=cmd_gen_er)
    p = gen.add_parser("pa", help="preferential attachment PA(m, delta): each new node sends "
                                  "m edges to i with probability (D(i)+delta)/((2m+delta)t)")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", type=float, default=0.0)
    p.add_argument("--strip-self-loops", action="store_true",
                   help="drop node 1's initial self-loops from the output")
    p.add_argument("--track-nodes", default=None, help="comma-separated node ids")
    p.add_argument("--history", default=None,
                   help="CSV for tracked degrees (default: <out>.history.csv)")
    _common(p, seed=True)
    p.set_defaults(func=cmd_gen_pa)

    sample = groups.add_parser("sample", help="random subgraphs").add_subparsers(
        dest="cmd", required=True)
    p = sample.add_parser("edges", help="keep each edge independently with probability q")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--multiplicity", action="store_true",
                   help="treat integer weights as parallel-edge counts (PA output)")
    _common(p, seed=True, inp=True)
    p.set_defaults(func=cmd_sample_edges)
    p = sample.add_parser("nodes-uniform", help="keep a uniformly random set of M nodes")
    p.add_argument("--keep", type=int, required=True)
    p.add_argument("--map", default=None, help="kept-id CSV (default: <out>.map.csv)")
    _common(p, seed=True, inp=True)
    p.set_defaults(func=cmd_sample_nodes_uniform)
    p = sample.add_parser("nodes-bernoulli", help="keep each node independently with "
                                                  "probability q")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--map", default=None, help="kept-id CSV (default: <out>.map.csv)")
    _common(p, seed=True, inp=True)
    p.set_defaults(func=cmd_sample_nodes_bernoulli)

    analyze = groups.add_parser("analyze", help="degree statistics").add_subparsers(
        dest="cmd", required=True)
    p = analyze.add_parser("degrees", help="degree histogram N_k (CSV: k, N_k, pmf[, ccdf])")
    p.add_argument("--ccdf", action="store_true", help="add the P(D >= k) column")
    p.add_argument("--multiplicity", action="store_true")
    _common(p, inp=True)
    p.set_defaults(func=cmd_analyze_degrees)
    p = analyze.add_parser("powerlaw", help="scale-free exponent tau via the discrete MLE")
    p.add_argument("--kmin", type=int, default=None)
    _common(p, inp=True)
    p.set_defaults(func=cmd_analyze_powerlaw)

    pa = groups.add_parser("pa", help="closed-form PA laws").add_subparsers(
        dest="cmd", required=True)
    p = pa.add_parser("theory", help="limit distribution p_k, tau = 3 + delta/m, expected "
                                     "degree and variance of a fixed node")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", type=float, default=0.0)
    p.add_argument("--pmf-upto", type=int, default=None)
    p.add_argument("--expected", action="store_true")
    p.add_argument("--variance", action="store_true")
    p.add_argument("--node", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    _common(p)
    p.set_defaults(func=cmd_pa_theory)

    walk = groups.add_parser("walk", help="random walks with p_xy = c_xy / mu_x").add_subparsers(
        dest="cmd", required=True)
    p = walk.add_parser("hitting", help="expected hitting times E^x(tau_y) of one target")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--json", action="store_true")
    _common(p, inp=True)
    p.set_defaults(func=cmd_walk_hitting)
    p = walk.add_parser("commute", help="commute time E^x(tau_y) + E^y(tau_x) and R_xy * sum mu")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    _common(p, inp=True)
    p.set_defaults(func=cmd_walk_commute)
    p = walk.add_parser("mc", help="Monte Carlo walks from x stopped at y; hitting time and "
                                   "visit counts per node")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--walks", type=int, required=True)
    _common(p, seed=True, inp=True)
    p.set_defaults(func=cmd_walk_mc)

    network = groups.add_parser("network", help="electrical network view").add_subparsers(
        dest="cmd", required=True)
    p = network.add_parser("resistance", help="effective resistance R_xy of a unit x->y current")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--potentials", default=None, help="optional CSV of node potentials")
    _common(p, inp=True)
    p.set_defaults(func=cmd_network_resistance)

    verify = groups.add_parser("verify", help="check exact identities").add_subparsers(
        dest="cmd", required=True)
    p = verify.add_parser("tetali", help="sum over directed edges of E^x(tau_y) c_xy / sum c "
                                         "equals n - 1")
    p.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    _common(p, inp=True)
    p.set_defaults(func=cmd_verify_tetali)

    bio = groups.add_parser("bio", help="protein mutation networks").add_subparsers(
        dest="cmd", required=True)
    for name, func, helptext in (
            ("build", cmd_bio_build, "join sequences at Hamming distance 1"),
            ("report", cmd_bio_report, "PA compatibility: mean degree parity, connectivity, tau")):
        p = bio.add_parser(name, help=helptext)
        p.add_argument("--seqs", required=True)
        p.add_argument("--format", choices=("fasta", "plain"), default="fasta")
        p.add_argument("--extras", default="", help="extra residue letters to accept, e.g. X")
        if name == "build":
            p.add_argument("--labels", default=None, help="CSV mapping node id to sequence id")
        else:
            p.add_argument("--kmin", type=int, default=None)
        _common(p)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        args.func(args)
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
