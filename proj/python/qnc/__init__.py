"""Python bindings for the QNC operator toolkit."""

from ._core import (
    CharacterTable,
    ContradictionReport,
    Matrix,
    Spectrum,
    build_matrix,
    contradiction_report,
    count_estimate,
    det2_from_spectrum,
    det_from_spectrum,
    det_series_coeffs,
    entry_abs_sum,
    eval_F,
    first_primes,
    hs_norm_sq,
    load_zeros,
    qnc,
    qnc_bound,
    reciprocal_partial_sum,
    singular_values,
    tail_bound,
    tilde_correction,
)

__all__ = [
    "CharacterTable",
    "ContradictionReport",
    "Matrix",
    "Spectrum",
    "build_matrix",
    "contradiction_report",
    "count_estimate",
    "det2_from_spectrum",
    "det_from_spectrum",
    "det_series_coeffs",
    "entry_abs_sum",
    "eval_F",
    "first_primes",
    "hs_norm_sq",
    "load_zeros",
    "qnc",
    "qnc_bound",
    "reciprocal_partial_sum",
    "singular_values",
    "tail_bound",
    "tilde_correction",
]
