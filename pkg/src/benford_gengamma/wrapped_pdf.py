"""Density of ``log_B X mod 1`` for a generalized gamma ``X``.

Two equivalent forms are implemented.

Direct sum over decades::

    f(u) = p ln B / Gamma(d/p) * sum_k exp(-x_k^p) x_k^d,   x_k = B^(k+u) / a

Fourier series (Poisson summation of the above)::

    f(u) = 1 + sum_{k>=1} 2 Re[c_k exp(2 pi i k (u - log_B a))]
    c_k  = Gamma(d/p - 2 pi i k / (p ln B)) / Gamma(d/p)

Keeping ``M`` Fourier terms leaves an error of at most
``((d + p) ln B)^2 / (2 pi^2 (M + 1))``. Both forms only see ``a`` through
``log_B a mod 1``, so ``a`` and ``a * B**m`` give the same density.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .benford import _log_base
from .errors import DomainError, TruncationError
from .gengamma import GenGammaParams
from .specfun import log_gamma_complex

__all__ = [
    "DirectSumConfig",
    "FourierConfig",
    "WrappedDensityEval",
    "direct_pdf",
    "direct_pdf_grid",
    "fourier_coefficients",
    "fourier_pdf",
    "fourier_pdf_grid",
    "fourier_term",
    "min_terms",
    "truncation_bound",
    "scale_phase",
]

_CHUNK = 4096


@dataclass(frozen=True)
class DirectSumConfig:
    """Stopping rule for the direct sum.

    Each side stops once its certified tail is below ``tail_tolerance / 2``,
    so the total truncation error never exceeds ``tail_tolerance``.
    """

    tail_tolerance: float = 1e-10
    max_terms_each_side: int = 10_000

    def __post_init__(self):
        if not self.tail_tolerance > 0:
            raise DomainError("tail_tolerance must be > 0")
        if self.max_terms_each_side < 1:
            raise DomainError("max_terms_each_side must be >= 1")


@dataclass(frozen=True)
class FourierConfig:
    terms: int
    epsilon: float = None

    def __post_init__(self):
        # zero terms is allowed and gives the constant density
        if isinstance(self.terms, bool) or int(self.terms) != self.terms or self.terms < 0:
            raise DomainError(f"terms must be a nonnegative integer, got {self.terms!r}")
        object.__setattr__(self, "terms", int(self.terms))

    @classmethod
    def from_epsilon(cls, params, epsilon):
        return cls(min_terms(params, epsilon), float(epsilon))


@dataclass(frozen=True)
class WrappedDensityEval:
    u: float
    value: float
    method: str
    error_bound: float
    terms: int = 0


def _check_u(u):
    arr = np.asarray(u, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError("u must lie in [0, 1]; the endpoints are the continuous limits")
    return arr


def scale_phase(params):
    """``log_B a mod 1``, the only way ``a`` enters the density."""
    shift = float(_log_base(params.a, params.base))
    return shift - math.floor(shift)


def _direct_constants(params):
    ln_b = params.log_base
    log_pref = math.log(params.p * ln_b) - math.lgamma(params.shape)
    # summand peaks where x^p = d/p
    log_x_peak = math.log(params.shape) / params.p
    return ln_b, log_pref, log_x_peak


def _log_x(k, u, params, ln_b):
    return (k + u) * ln_b - math.log(params.a)


def _right_tail(log_x, params, ln_b, log_pref):
    # bound on sum_{j>k} of the summand, given x = x_k; inf while the ratio
    # of consecutive terms is not yet below one
    with np.errstate(over="ignore"):
        xp = np.exp(params.p * log_x)
    log_ratio = params.d * ln_b - xp * math.expm1(params.p * ln_b)
    log_term = log_pref + params.d * log_x - xp
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        ratio = np.exp(log_ratio)
        return np.where(ratio < 1.0, np.exp(log_term + log_ratio) / (1.0 - ratio), np.inf)


def _left_tail(log_x, params, ln_b, log_pref):
    # exp(-x^p) <= 1 leaves a geometric series in B^-d
    q = math.exp(-params.d * ln_b)
    return np.exp(log_pref + params.d * log_x) * q / (1.0 - q)


def _direct_sum(u, params, cfg):
    """Sum the decades for every ``u`` in the 1-d array ``u``.

    The index range is chosen by walking outward from the peak until the tail
    bound passes for the worst ``u`` on each side: the largest ``u`` for the
    lower tail, the smallest for the upper one.
    """
    ln_b, log_pref, log_x_peak = _direct_constants(params)
    u_lo, u_hi = float(np.min(u)), float(np.max(u))
    k0 = round((log_x_peak + math.log(params.a)) / ln_b - 0.5 * (u_lo + u_hi))
    half_tol = 0.5 * cfg.tail_tolerance

    k_hi = k0
    for _ in range(cfg.max_terms_each_side):
        if _right_tail(_log_x(k_hi, u_lo, params, ln_b), params, ln_b, log_pref) < half_tol:
            break
        k_hi += 1
    else:
        k_hi = None

    k_lo = k0
    for _ in range(cfg.max_terms_each_side):
        if _left_tail(_log_x(k_lo, u_hi, params, ln_b), params, ln_b, log_pref) < half_tol:
            break
        k_lo -= 1
    else:
        k_lo = None

    failed = k_hi is None or k_lo is None
    if k_hi is None:
        k_hi = k0 + cfg.max_terms_each_side
    if k_lo is None:
        k_lo = k0 - cfg.max_terms_each_side

    k = np.arange(k_lo, k_hi + 1, dtype=float)
    values = np.empty(u.shape)
    rows = max(1, _CHUNK * 64 // len(k))
    with np.errstate(over="ignore", under="ignore"):
        for start in range(0, len(u), rows):
            log_x = (k[None, :] + u[start:start + rows, None]) * ln_b - math.log(params.a)
            terms = np.exp(log_pref + params.d * log_x - np.exp(params.p * log_x))
            values[start:start + rows] = terms.sum(axis=1)
        log_a = math.log(params.a)
        tails = (_right_tail((k[-1] + u) * ln_b - log_a, params, ln_b, log_pref)
                 + _left_tail((k[0] + u) * ln_b - log_a, params, ln_b, log_pref))
    if failed:
        raise TruncationError(
            f"direct sum did not reach tail tolerance {cfg.tail_tolerance:g} "
            f"within {cfg.max_terms_each_side} terms per side",
            partial_value=values, tail_estimate=tails)
    return values, tails, len(k)


def direct_pdf(u, params, cfg=DirectSumConfig()):
    """Evaluate the direct decade sum at one ``u``.

    ``error_bound`` is the certified size of the discarded tails. Raises
    :class:`TruncationError` (carrying the partial sum) when the budget of
    terms runs out first.
    """
    uu = _check_u(u)
    if uu.ndim != 0:
        raise DomainError("direct_pdf takes a scalar u; use direct_pdf_grid for arrays")
    values, tails, n = _direct_sum(uu.reshape(1), params, cfg)
    return WrappedDensityEval(float(uu), float(values[0]), "direct", float(tails[0]), n)


def direct_pdf_grid(u, params, cfg=DirectSumConfig()):
    """Vectorized :func:`direct_pdf`; returns ``(values, error_bounds)`` arrays."""
    uu = np.atleast_1d(_check_u(u))
    values, tails, _ = _direct_sum(uu.ravel(), params, cfg)
    return values.reshape(uu.shape), tails.reshape(uu.shape)


@lru_cache(maxsize=256)
def _coefficients(params, terms):
    # |Gamma(s + it)| decreases in |t|, so after the first coefficient that
    # underflows to zero all later ones are zero too; stop there
    shape = params.shape
    scale = 2.0 * math.pi / (params.p * params.log_base)
    chunks = []
    for start in range(1, terms + 1, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, terms + 1), dtype=float)
        with np.errstate(under="ignore"):
            c = np.exp(log_gamma_complex(shape - 1j * scale * k) - math.lgamma(shape))
        zero = np.flatnonzero(c == 0)
        if zero.size:
            chunks.append(c[: zero[0]])
            break
        chunks.append(c)
    c = np.concatenate(chunks) if chunks else np.zeros(0, dtype=complex)
    c.setflags(write=False)
    return c


def fourier_coefficients(params, terms):
    """``c_k = Gamma(d/p - 2 pi i k/(p ln B)) / Gamma(d/p)`` for ``k = 1..terms``.

    Cached per ``(params, terms)``. Trailing coefficients that underflow to
    zero are omitted, so the result may be shorter than ``terms``.
    """
    if terms == 0:
        return np.zeros(0, dtype=complex)
    return _coefficients(params, int(terms))


def truncation_bound(params, terms):
    """Pointwise error bound ``((d + p) ln B)^2 / (2 pi^2 (M + 1))``."""
    c = ((params.d + params.p) * params.log_base) ** 2 / (2.0 * math.pi ** 2)
    return c / (terms + 1)


def min_terms(params, epsilon):
    """Smallest ``M >= 1`` with ``M > ((d + p) ln B)^2 / (2 pi^2 eps) - 1``."""
    epsilon = float(epsilon)
    if not epsilon > 0:
        raise DomainError(f"epsilon must be > 0, got {epsilon!r}")
    c = ((params.d + params.p) * params.log_base) ** 2 / (2.0 * math.pi ** 2)
    return max(1, math.floor(c / epsilon - 1.0) + 1)


def _series(u, params, coef, phase_shift, derivative=False):
    out = np.zeros(u.shape)
    x = u - phase_shift
    for start in range(0, len(coef), _CHUNK):
        c = coef[start:start + _CHUNK]
        k = np.arange(start + 1, start + 1 + len(c), dtype=float)
        rot = np.exp(2j * math.pi * np.multiply.outer(x, k))
        if derivative:
            c = c * (2j * math.pi * k)
        out += 2.0 * (rot @ c).real
    return out


def fourier_pdf_grid(u, params, terms, derivative=False):
    """Partial sum ``f_M`` (or its derivative) at an array of ``u``."""
    uu = np.asarray(u, dtype=float)
    coef = fourier_coefficients(params, terms)
    series = _series(uu, params, coef, scale_phase(params), derivative)
    return series if derivative else 1.0 + series


def fourier_pdf(u, params, cfg):
    """Evaluate the ``cfg.terms``-term Fourier partial sum at one ``u``."""
    uu = _check_u(u)
    if uu.ndim != 0:
        raise DomainError("fourier_pdf takes a scalar u; use fourier_pdf_grid for arrays")
    value = float(fourier_pdf_grid(uu.reshape(1), params, cfg.terms)[0])
    return WrappedDensityEval(float(uu), value, "fourier", truncation_bound(params, cfg.terms),
                              cfg.terms)


def fourier_term(k, u, params):
    """The ``k``-th residue term ``2 Re[c_k exp(2 pi i k (u - log_B a))]``.

    Computed from scratch, not from the cache; ``u`` may be any real.
    """
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    z = params.shape - 2j * math.pi * k / (params.p * params.log_base)
    c = np.exp(log_gamma_complex(z) - math.lgamma(params.shape))
    # reduce the phase argument mod 1 before scaling by 2 pi
    frac = math.fmod(k * (float(u) - scale_phase(params)), 1.0)
    return 2.0 * (c * np.exp(2j * math.pi * frac)).real
