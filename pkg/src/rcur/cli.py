"""Command-line surface for the decompositions, generators and benchmarks.

Exit codes: 0 on success, 1 on numerical failure (rank deficiency,
non-finite input, incompatible shapes), 2 on usage errors.

Set ``RCUR_THREADS`` to cap the BLAS/LAPACK thread pools for the whole run.
All reports are CSV; identical command lines (including ``--seed``) produce
byte-identical reports apart from the ``wall_ms`` column.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
import time
import warnings

import numpy as np

from . import bench
from .cur import deim_cur
from .gcur import gcur_from_factors, gcur_error
from .gsvd import gsvd, randomized_gsvd
from .io import write_matrix
from .rsvd import randomized_rsvd, rsvd_deterministic
from .rsvd_cur import rsvd_cur_from_factors
from .selection import Method
from .sketch import SketchConfig
from .synth import bfg_perturb, sparse_lowrank, subgroup_data, toeplitz_noise

__all__ = ["main", "run"]

# generalized values with gamma/beta below this are warned about: the target
# rank exceeds the numerical rank of A against B and errors will plateau
RATIO_WARN_TOL = 1e-12


def _fmt(x):
    if isinstance(x, float):
        return format(x, ".12g")
    return str(x)


def _write_report(path, rows, fieldnames):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_fmt(row[name]) for name in fieldnames])


def _join_indices(idx):
    return ";".join(str(int(i)) for i in idx)


def _read(path):
    from .io import read_csv, read_matrix

    if str(path).endswith(".csv"):
        return read_csv(path)
    return read_matrix(path)


def _warn_small_ratios(factors, k):
    ratios = factors.gamma[:k] / np.maximum(factors.beta[:k], 1e-300)
    if np.any(ratios < RATIO_WARN_TOL):
        warnings.warn(
            "trailing generalized-value ratios fall below 1e-12; "
            "the rank-k error will plateau",
            stacklevel=2,
        )


def _cmd_gsvd(args):
    a, b = _read(args.a), _read(args.b)
    if args.randomized:
        cfg = SketchConfig(args.k, args.oversampling, seed=args.seed)
        factors, _ = randomized_gsvd(a, b, cfg)
    else:
        factors = gsvd(a, b)
    write_matrix(f"{args.out_prefix}_U.mtx", factors.u)
    write_matrix(f"{args.out_prefix}_V.mtx", factors.v)
    write_matrix(f"{args.out_prefix}_Y.mtx", factors.y)
    ratio = factors.gamma / np.maximum(factors.beta, 1e-300)
    rows = [
        {"gamma": float(g), "beta": float(be), "ratio": float(r)}
        for g, be, r in zip(factors.gamma, factors.beta, ratio)
    ]
    _write_report(f"{args.out_prefix}_vals.csv", rows, ["gamma", "beta", "ratio"])
    return 0


def _cmd_rsvd(args):
    a, b, g = _read(args.a), _read(args.b), _read(args.g)
    if args.randomized:
        cfg = SketchConfig(args.k, args.oversampling, seed=args.seed)
        factors = randomized_rsvd(a, b, g, cfg)
    else:
        factors = rsvd_deterministic(a, b, g)
    write_matrix(f"{args.out_prefix}_Z.mtx", factors.z)
    write_matrix(f"{args.out_prefix}_W.mtx", factors.w)
    write_matrix(f"{args.out_prefix}_U.mtx", factors.u)
    write_matrix(f"{args.out_prefix}_V.mtx", factors.v)
    rows = [
        {"alpha": float(al), "beta": float(be), "gamma": float(ga)}
        for al, be, ga in zip(factors.alpha, factors.beta, factors.gamma)
    ]
    _write_report(f"{args.out_prefix}_vals.csv", rows, ["alpha", "beta", "gamma"])
    return 0


def _method_of(args):
    return Method.LDEIM if args.method == "ldeim" else Method.DEIM


def _cmd_cur(args):
    a = _read(args.a)
    t0 = time.perf_counter()
    fac = deim_cur(a, args.k, _method_of(args), args.khat)
    wall_ms = (time.perf_counter() - t0) * 1e3
    err = float(np.linalg.norm(a - fac.reconstruct(a), 2) / np.linalg.norm(a, 2))
    rows = [{
        "method": args.method, "k": args.k,
        "khat": args.khat if args.khat is not None else "",
        "p": "", "seed": "", "err_a": err, "err_b": "", "wall_ms": wall_ms,
        "indices_p": _join_indices(fac.p), "indices_s": _join_indices(fac.s),
    }]
    _write_report(args.report, rows, list(rows[0]))
    return 0


def _cmd_gcur(args):
    a, b = _read(args.a), _read(args.b)
    k = args.k
    khat = args.khat if args.khat is not None else max(1, -(-k // 2))
    method = _method_of(args)
    t0 = time.perf_counter()
    if args.randomized:
        cfg = SketchConfig(k, args.oversampling, ldeim_budget=khat,
                           seed=args.seed)
        width = (khat if method is Method.LDEIM else k) + args.oversampling
        gfac, _ = randomized_gsvd(a, b, cfg, sketch_width=width)
    else:
        gfac = gsvd(a, b)
    fac = gcur_from_factors(a, b, gfac, k, method, khat)
    wall_ms = (time.perf_counter() - t0) * 1e3
    _warn_small_ratios(gfac, min(k, gfac.n_pairs))
    err_a = gcur_error(a, fac)
    err_b = float(
        np.linalg.norm(b - fac.reconstruct_b(b), 2) / np.linalg.norm(b, 2)
    )
    rows = [{
        "method": args.method, "k": k, "khat": khat,
        "p": args.oversampling if args.randomized else "",
        "seed": args.seed if args.randomized else "",
        "err_a": err_a, "err_b": err_b, "wall_ms": wall_ms,
        "indices_p": _join_indices(fac.p),
        "indices_s_a": _join_indices(fac.s_a),
        "indices_s_b": _join_indices(fac.s_b),
    }]
    _write_report(args.report, rows, list(rows[0]))
    return 0


def _cmd_rsvd_cur(args):
    a, b, g = _read(args.a), _read(args.b), _read(args.g)
    k = args.k
    khat = args.khat if args.khat is not None else max(1, -(-k // 2))
    method = _method_of(args)
    t0 = time.perf_counter()
    if args.randomized:
        cfg = SketchConfig(k, args.oversampling, ldeim_budget=khat,
                           seed=args.seed)
        width = (khat if method is Method.LDEIM else k) + args.oversampling
        rfac = randomized_rsvd(a, b, g, cfg, sketch_width=width)
    else:
        rfac = rsvd_deterministic(a, b, g)
    fac = rsvd_cur_from_factors(a, b, g, rfac, k, method, khat)
    wall_ms = (time.perf_counter() - t0) * 1e3
    err_a = float(
        np.linalg.norm(a - fac.reconstruct_a(a), 2) / np.linalg.norm(a, 2)
    )
    err_b = float(
        np.linalg.norm(b - fac.reconstruct_b(b), 2) / np.linalg.norm(b, 2)
    )
    err_g = float(
        np.linalg.norm(g - fac.reconstruct_g(g), 2) / np.linalg.norm(g, 2)
    )
    rows = [{
        "method": args.method, "k": k, "khat": khat,
        "p": args.oversampling if args.randomized else "",
        "seed": args.seed if args.randomized else "",
        "err_a": err_a, "err_b": err_b, "err_g": err_g, "wall_ms": wall_ms,
        "indices_p": _join_indices(fac.p),
        "indices_p_b": _join_indices(fac.p_b),
        "indices_s": _join_indices(fac.s),
        "indices_s_g": _join_indices(fac.s_g),
    }]
    _write_report(args.report, rows, list(rows[0]))
    return 0


def _cmd_synth(args):
    if args.kind == "sparse-lowrank":
        a = sparse_lowrank(args.m, args.n, density=args.density, seed=args.seed)
        write_matrix(f"{args.out_prefix}_A.mtx", a)
    elif args.kind == "toeplitz-pair":
        a, e, a_e = bench.exp1_instance(args.m, args.n, args.eps, args.seed)
        write_matrix(f"{args.out_prefix}_A.mtx", a)
        write_matrix(f"{args.out_prefix}_E.mtx", e)
        write_matrix(f"{args.out_prefix}_AE.mtx", a_e)
    elif args.kind == "bfg-triplet":
        a, a_e, b, g = bench.exp4_instance(args.l, args.d, args.m, args.eps,
                                           args.seed)
        write_matrix(f"{args.out_prefix}_A.mtx", a)
        write_matrix(f"{args.out_prefix}_AE.mtx", a_e)
        write_matrix(f"{args.out_prefix}_B.mtx", b)
        write_matrix(f"{args.out_prefix}_G.mtx", g)
    else:  # subgroup
        target, background = subgroup_data(args.m, args.d, seed=args.seed)
        write_matrix(f"{args.out_prefix}_target.mtx", target)
        write_matrix(f"{args.out_prefix}_background.mtx", background)
    return 0


_BENCH_FIELDS_EXP1 = ["experiment", "m", "n", "eps", "k", "method", "seed",
                      "err", "wall_ms"]
_BENCH_FIELDS_EXP4 = ["experiment", "l", "d", "m", "eps", "k", "khat", "p",
                      "method", "seed", "err", "wall_ms"]


def _cmd_bench(args):
    if args.experiment == "exp1":
        ks = list(range(args.kstep, args.kmax + 1, args.kstep))
        rows = bench.exp1_sweep(args.m, args.n, args.eps, ks,
                                seeds=list(range(args.seeds)),
                                oversampling=args.oversampling)
        fields = _BENCH_FIELDS_EXP1
    else:
        rows = bench.exp4_run(args.l, args.d, args.m, args.k, args.eps,
                              args.oversampling,
                              seeds=list(range(args.seeds)))
        fields = _BENCH_FIELDS_EXP4
    _write_report(args.out, rows, fields)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="rcur",
        description="Randomized CUR-family decompositions of matrix pairs "
                    "and triplets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rand_flags(p, k_required=False):
        p.add_argument("-k", type=int, required=k_required, default=None,
                       help="target rank")
        p.add_argument("--khat", type=int, default=None,
                       help="L-DEIM basis budget (default ceil(k/2))")
        p.add_argument("-p", "--oversampling", type=int, default=5,
                       dest="oversampling", help="sketch oversampling")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--randomized", action="store_true",
                       help="use the sketched variant")
        p.add_argument("--method", choices=["deim", "ldeim"], default="deim")

    p = sub.add_parser("gsvd", help="generalized SVD of a pair")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--out-prefix", required=True)
    add_rand_flags(p)
    p.set_defaults(func=_cmd_gsvd, needs_k_if_randomized=True)

    p = sub.add_parser("rsvd", help="restricted SVD of a triplet")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--out-prefix", required=True)
    add_rand_flags(p)
    p.set_defaults(func=_cmd_rsvd, needs_k_if_randomized=True)

    p = sub.add_parser("cur", help="DEIM-type CUR of a single matrix")
    p.add_argument("--a", required=True)
    p.add_argument("--report", required=True)
    add_rand_flags(p, k_required=True)
    p.set_defaults(func=_cmd_cur)

    p = sub.add_parser("gcur", help="generalized CUR of a pair")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--report", required=True)
    add_rand_flags(p, k_required=True)
    p.set_defaults(func=_cmd_gcur)

    p = sub.add_parser("rsvd-cur", help="RSVD-CUR of a triplet")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--report", required=True)
    add_rand_flags(p, k_required=True)
    p.set_defaults(func=_cmd_rsvd_cur)

    p = sub.add_parser("synth", help="write synthetic benchmark matrices")
    p.add_argument("--kind", required=True,
                   choices=["sparse-lowrank", "toeplitz-pair", "bfg-triplet",
                            "subgroup"])
    p.add_argument("--m", type=int, default=1000)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--density", type=float, default=0.025)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("bench", help="seeded benchmark sweeps, CSV output")
    bsub = p.add_subparsers(dest="experiment", required=True)

    p1 = bsub.add_parser("exp1", help="pair recovery under Toeplitz noise")
    p1.add_argument("--m", type=int, required=True)
    p1.add_argument("--n", type=int, required=True)
    p1.add_argument("--eps", type=float, required=True)
    p1.add_argument("--kmax", type=int, required=True)
    p1.add_argument("--kstep", type=int, default=5)
    p1.add_argument("--seeds", type=int, default=1)
    p1.add_argument("-p", "--oversampling", type=int, default=5,
                    dest="oversampling")
    p1.add_argument("--out", required=True)
    p1.set_defaults(func=_cmd_bench)

    p4 = bsub.add_parser("exp4", help="triplet recovery under BFG noise")
    p4.add_argument("--l", type=int, required=True)
    p4.add_argument("--d", type=int, required=True)
    p4.add_argument("--m", type=int, required=True)
    p4.add_argument("-k", type=int, required=True)
    p4.add_argument("--eps", type=float, required=True)
    p4.add_argument("--seeds", type=int, default=1)
    p4.add_argument("-p", "--oversampling", type=int, required=True,
                    dest="oversampling")
    p4.add_argument("--out", required=True)
    p4.set_defaults(func=_cmd_bench)

    return parser


def run(argv=None):
    """Parse ``argv`` and dispatch; returns the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "needs_k_if_randomized", False):
        if args.randomized and args.k is None:
            parser.error(f"{args.command}: --randomized requires -k")

    threads = os.environ.get("RCUR_THREADS")
    limits = None
    if threads:
        try:
            from threadpoolctl import threadpool_limits
            limits = threadpool_limits(limits=int(threads))
        except ImportError:
            print("RCUR_THREADS set but threadpoolctl is unavailable; "
                  "thread cap not applied", file=sys.stderr)
    try:
        return args.func(args)
    except (np.linalg.LinAlgError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if limits is not None:
            limits.unregister()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
