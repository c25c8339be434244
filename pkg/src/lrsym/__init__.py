"""Littlewood-Richardson tableaux, their symmetry bijections and a linear-time conjugation map."""

from .circuits import (
    AlphaNode,
    CostReport,
    LinearMap,
    Par,
    Seq,
    Trivial,
    E_from_rho3,
    alpha_cost,
    bench,
    bitsize,
    dilate,
    evaluate,
    loglog_slope,
    rho3_from_E,
    substitute,
)
from .conjugation import blacklozenge_fast, fast_blacklozenge, rho3, rho3_variants
from .crystal import longest_word, reversal, reversal_general, sigma, sigma0, sigma_tableau, theta_rows
from .errors import *  # noqa: F401,F403
from .jdt import anti_normal, contracting_slide, evacuate, expanding_slide, rectify
from .oracle import SymmetryReport, enumerate_lr, lr_coefficient, verify_symmetries
from .plactic import BurgePair, burge, column_insert, dual_equivalent, knuth_equivalent, p_symbol, q_symbol
from .shapes import (
    SkewShape,
    circ,
    complement,
    conjugate,
    diamond_shape,
    partition,
    rotate_shape,
    transpose_shape,
)
from .switching import SwitchPair, rho_bss, rho_whs, switch, unique_in_classes
from .tableau import (
    RecordingMatrix,
    Tableau,
    blacklozenge_slow,
    cf_member,
    column_word,
    fill,
    from_recording_matrix,
    is_dual_lr,
    is_lr,
    recording_matrix,
    rotate,
    row_word,
    standardize,
    tableau_from_json,
    tableau_to_json,
    tau,
    tau_inv,
    transpose_standard,
    yamanouchi_tableau,
)
from .words import Word, diamond, dualize, is_dual_yamanouchi, is_yamanouchi, standardize_word, u_of

__version__ = "0.1.0"
