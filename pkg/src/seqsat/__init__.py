"""Saturation of forbidden sequence patterns: verification, constructions, exact values."""

from ._kernels import BACKEND
from .constructions import (
    ConstructionResult,
    FStats,
    alternation_family,
    alternation_pattern,
    block_construction,
    closed_form_abcacbc,
    f_stats,
    infinite_analogue,
    is_irreducible,
    is_strongly_irreducible,
    s3_length_formula,
    s_bracket,
    s_r,
    s_r_prime,
)
from .core import (
    Pattern,
    Seq,
    canonical,
    canonicalize,
    contains,
    contains_through,
    format_seq,
    is_r_sparse,
    parse_pattern,
    parse_seq,
)
from .errors import *  # noqa: F401,F403
from .exact import build_ilp, export_lp, sat_exact, search_sat, solve_ilp
from .saturation import (
    SaturationReport,
    ScanResult,
    Verdict,
    can_properly_insert,
    greedy_run,
    greedy_saturate,
    scan,
    verify,
)

__version__ = "0.1.0"
