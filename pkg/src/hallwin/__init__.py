"""Exact combinatorics of window categories, Hall products and Quot-scheme counts
for framed one-loop quivers."""

from .hall import (
    HallTerm,
    attracting_set,
    bwb_terms,
    kclass_bwb,
    kclass_shuffle,
    schur,
    semiorthogonality_report,
    verify_leading,
)
from .lattice import (
    Normalized,
    WindowSet,
    embed_window,
    enumerate_window,
    kapranov_diagrams,
    max_orbit_pairing,
    md_generators,
    min_orbit_pairing,
    normalize_dotted,
)
from .laurent import SymLaurent
from .motivic import (
    CurveZeta,
    MotivicExpr,
    bfp_class,
    brute_force_stable_count,
    quot_affine_formula,
    stable_count,
    sym_point_count,
)
from .sod import exceptional_count_p1, quot_curve_table, sod_table, sod_table_multi
from .strata import QuiverSpec, Stratum, generator_in_window, kn_strata, multi_strata, window_interval

__version__ = "0.1.0"
