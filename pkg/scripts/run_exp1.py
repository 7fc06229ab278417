#!/usr/bin/env python3
"""Rank sweep for pair recovery under correlated Toeplitz noise.

Reproduces the error-versus-rank experiment: a sparse low-rank A is
observed as A_E = A + E and recovered by plain DEIM-CUR, deterministic
GCUR of (A_E, E), and the two randomized GCUR variants.  Writes one CSV
row per (k, method, seed).

Usage: python scripts/run_exp1.py [--m 10000 --n 200 --eps 0.2 ...]
"""
import sys

from rcur.cli import run

DEFAULTS = [
    "bench", "exp1",
    "--m", "10000", "--n", "200",
    "--eps", "0.2",
    "--kmax", "40", "--kstep", "5",
    "--seeds", "3",
    "--out", "exp1.csv",
]

if __name__ == "__main__":
    argv = DEFAULTS if len(sys.argv) == 1 else ["bench", "exp1", *sys.argv[1:]]
    sys.exit(run(argv))
