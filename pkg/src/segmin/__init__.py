"""Decompose non-negative integer matrices into few uniform-value segment matrices."""

from .algorithms import ALGORITHMS, alg_base, alg_logD, size_bound, theoretical_factor
from .bench import BenchReport, ExactLimits, run_bench, summarize
from .core import (
    DimensionMismatch,
    IntensityMatrix,
    RowSegment,
    RowSegmentation,
    SegmentMatrix,
    Segmentation,
    Verdict,
    lower_bound,
    markers,
    rho,
    verify,
)
from .decompose import combine_scaled, split_by_base
from .exact import ExactResult, brute_force_opt, exact_opt
from .generators import adversarial_witness, gen_adversarial, gen_gaussian, gen_harmonic, gen_random
from .packing import pack_rows
from .row_solvers import (
    EXACT,
    SWEEP,
    LimitExceeded,
    exact_single_row,
    segment_row_base3,
    segment_row_base4,
    sweep_single_row,
    transform_to_bounded,
)

__all__ = [
    "ALGORITHMS", "alg_base", "alg_logD", "size_bound", "theoretical_factor",
    "BenchReport", "ExactLimits", "run_bench", "summarize",
    "DimensionMismatch", "IntensityMatrix", "RowSegment", "RowSegmentation", "SegmentMatrix",
    "Segmentation", "Verdict", "lower_bound", "markers", "rho", "verify",
    "combine_scaled", "split_by_base",
    "ExactResult", "brute_force_opt", "exact_opt",
    "adversarial_witness", "gen_adversarial", "gen_gaussian", "gen_harmonic", "gen_random",
    "pack_rows",
    "EXACT", "SWEEP", "LimitExceeded", "exact_single_row", "segment_row_base3",
    "segment_row_base4", "sweep_single_row", "transform_to_bounded",
]
