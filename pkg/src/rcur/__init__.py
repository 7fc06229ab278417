"""Randomized CUR-family decompositions for matrix pairs and triplets.

Library surface:

* :mod:`rcur.gsvd` — generalized SVD of a pair and its sketched variant,
* :mod:`rcur.gcur` — generalized CUR of a pair (deterministic / randomized),
* :mod:`rcur.rsvd` — restricted SVD of a triplet,
* :mod:`rcur.rsvd_cur` — CUR of a triplet driven by restricted-SVD factors,
* :mod:`rcur.selection` — DEIM, L-DEIM and leverage-score index selection,
* :mod:`rcur.synth` / :mod:`rcur.bench` — seeded generators and experiments.
"""
from .cur import CurFactors, deim_cur
from .gcur import (
    GcurBound,
    GcurFactors,
    gcur_bound,
    gcur_deterministic,
    gcur_error,
    gcur_from_factors,
    middle_matrix,
    r_deim_gcur,
    r_ldeim_gcur,
    sketch_tail_bound,
)
from .gsvd import GsvdFactors, gsvd, randomized_gsvd
from .linalg import DimensionError, RankDeficiencyError
from .rsvd import RsvdFactors, randomized_rsvd, rsvd_deterministic
from .rsvd_cur import (
    RsvdCurBound,
    RsvdCurFactors,
    r_ldeim_rsvd_cur,
    rsvd_cur,
    rsvd_cur_from_factors,
    rsvdcur_bound,
)
from .selection import (
    Method,
    SelectionResult,
    deim_select,
    ldeim_select,
    leverage_select,
)
from .sketch import SketchConfig, gaussian_matrix, range_finder, split_seed
from .synth import (
    bfg_perturb,
    relative_error,
    sparse_lowrank,
    subgroup_data,
    toeplitz_noise,
)

__version__ = "0.1.0"

__all__ = [
    "CurFactors",
    "DimensionError",
    "GcurBound",
    "GcurFactors",
    "GsvdFactors",
    "Method",
    "RankDeficiencyError",
    "RsvdCurBound",
    "RsvdCurFactors",
    "RsvdFactors",
    "SelectionResult",
    "SketchConfig",
    "bfg_perturb",
    "deim_cur",
    "deim_select",
    "gaussian_matrix",
    "gcur_bound",
    "gcur_deterministic",
    "gcur_error",
    "gcur_from_factors",
    "gsvd",
    "ldeim_select",
    "leverage_select",
    "middle_matrix",
    "r_deim_gcur",
    "r_ldeim_gcur",
    "r_ldeim_rsvd_cur",
    "randomized_gsvd",
    "randomized_rsvd",
    "range_finder",
    "relative_error",
    "rsvd_cur",
    "rsvd_cur_from_factors",
    "rsvd_deterministic",
    "rsvdcur_bound",
    "sketch_tail_bound",
    "sparse_lowrank",
    "split_seed",
    "subgroup_data",
    "toeplitz_noise",
    "__version__",
]
