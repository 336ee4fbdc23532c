"""Bijections and statistics linking avoiders of a bivincular pattern,
ascent sequences and Fishburn matrices."""

from .bijections import (
    addition_g,
    alpha,
    alpha_inv,
    flip,
    phi,
    psi,
    removal_f,
    theta,
    theta_inv,
)
from .objects import (
    FishburnError,
    InvalidObjectError,
    StatPolynomial,
    enumerate_ascent_sequences,
    enumerate_fishburn_matrices,
    validate_ascent_sequence,
    validate_fishburn_matrix,
)
from .oracle import cross_check_counts, filter_avoiders, fishburn_numbers
from .patterns import PatternError, active_sites, contains_pattern, enumerate_avoiders, insert_max
from .stats import matrix_stats, modified_sequence, perm_stats, seq_stats
from .verify import check_remark, check_symmetry, check_transport, joint_table, run_verification

__version__ = "0.1.0"
