#!/usr/bin/env python3
"""Triplet recovery under structured BFG noise.

A square sparse low-rank A is perturbed as A_E = A + c * BFG and recovered
by deterministic RSVD-CUR of (A_E, B, G) and by the randomized L-DEIM
variant.  Writes one CSV row per (method, khat, seed) with error and
wall-clock columns.

Usage: python scripts/run_exp4.py [--l 1000 --d 500 --m 100 -k 10 ...]
"""
import sys

from rcur.cli import run

DEFAULTS = [
    "bench", "exp4",
    "--l", "1000", "--d", "500", "--m", "100",
    "-k", "10",
    "--eps", "0.1",
    "-p", "80",
    "--seeds", "3",
    "--out", "exp4.csv",
]

if __name__ == "__main__":
    argv = DEFAULTS if len(sys.argv) == 1 else ["bench", "exp4", *sys.argv[1:]]
    sys.exit(run(argv))
