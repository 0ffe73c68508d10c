"""Benford behaviour of the generalized gamma distribution.

Exact and Fourier forms of the density of ``log_B X mod 1``, truncation and
deviation bounds, sampling, and goodness-of-fit experiments.
"""

__version__ = "0.1.0"

from .errors import DomainError, TruncationError
from .gengamma import GenGammaParams, SampleBatch, cdf, pdf, quantile, sample
from .benford import (
    DigitHistogram,
    benford_digit_prob,
    digit_histogram,
    leading_digit,
    mantissa,
    significand,
    sse_error,
)
from .wrapped_pdf import (
    DirectSumConfig,
    FourierConfig,
    WrappedDensityEval,
    direct_pdf,
    fourier_pdf,
    min_terms,
    truncation_bound,
)
from .analysis import (
    DeviationReport,
    KsResult,
    SweepGrid,
    bound_sweep,
    deviation_bound,
    ks_statistic,
    ks_sweep,
    per_digit_deviation,
    sup_residual,
)
