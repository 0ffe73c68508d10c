"""Leading digits, significands and first-digit frequencies in base ``B``."""

import math
from fractions import Fraction
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "SignificandDecomposition",
    "DigitHistogram",
    "significand",
    "mantissa",
    "leading_digit",
    "benford_digit_prob",
    "benford_probs",
    "digit_histogram",
    "digit_histogram_from_mantissas",
    "sse_error",
]


@dataclass(frozen=True)
class SignificandDecomposition:
    significand: float
    exponent: int


@dataclass(frozen=True)
class DigitHistogram:
    """First-digit counts; ``counts[i]`` belongs to digit ``i + 1``."""

    base: int
    counts: np.ndarray
    total: int

    def __post_init__(self):
        if len(self.counts) != self.base - 1:
            raise DomainError("counts must have one entry per digit 1..B-1")
        if int(np.sum(self.counts)) != self.total:
            raise DomainError("counts do not sum to total")

    @property
    def frequencies(self):
        return self.counts / self.total

    def __add__(self, other):
        if other.base != self.base:
            raise DomainError("cannot merge histograms of different bases")
        return DigitHistogram(self.base, self.counts + other.counts, self.total + other.total)


_SNAP = Fraction(2, 2**52)


def _check_base(base):
    if isinstance(base, bool) or int(base) != base or base < 2:
        raise DomainError(f"base must be an integer >= 2, got {base!r}")
    return int(base)


def _log_base(x, base):
    if base == 10:
        return np.log10(x)
    if base == 2:
        return np.log2(x)
    return np.log(x) / math.log(base)


def _exact_exponent(x, base):
    # floor(log_B x) for one float, decided in rational arithmetic
    fx = Fraction(x)
    n = math.floor(math.log(x, base))
    while fx >= Fraction(base) ** (n + 1):
        n += 1
    while fx < Fraction(base) ** n:
        n -= 1
    return n


def _decompose(x, base):
    """Return ``(significand, exponent, leading digit)`` arrays.

    The exponent comes from the log; anything within rounding distance of a
    digit boundary is settled in rational arithmetic, with values at most two
    ulps below a boundary snapped onto it.
    """
    ax = np.abs(np.asarray(x, dtype=float))
    n = np.floor(_log_base(ax, base))
    s = ax * np.power(float(base), -n)
    digit = np.floor(s)
    close = (np.abs(s - np.round(s)) < 1e-9 * base) | (s < 1.0) | (s >= base)
    if np.any(close):
        n, s, digit = (np.array(v, copy=True) for v in (n, s, digit))
        flat_n, flat_s, flat_d, flat_x = (v.reshape(-1) for v in (n, s, digit, ax))
        for i in np.flatnonzero(close.reshape(-1)):
            xi = float(flat_x[i])
            k = _exact_exponent(xi, base)
            ratio = Fraction(xi) / Fraction(base) ** k
            # a float a couple of ulps short of a boundary (0.3, 1e-6, ...)
            # stands for the boundary value itself
            upper = math.floor(ratio) + 1
            if (upper - ratio) / upper <= _SNAP:
                ratio = Fraction(upper)
                if upper == base:
                    ratio, k = Fraction(1), k + 1
            flat_n[i] = k
            flat_d[i] = math.floor(ratio)
            # keep the float significand on the same side of the boundary
            flat_s[i] = min(float(ratio), math.nextafter(flat_d[i] + 1.0, 0.0))
    return s, n.astype(np.int64), digit.astype(np.int64)


def _check_nonzero(x):
    arr = np.asarray(x, dtype=float)
    if np.any(arr == 0) or np.any(~np.isfinite(arr)):
        raise DomainError("x must be finite and nonzero")
    return arr


def significand(x, base=10):
    """Split ``|x| = s * B**n`` with ``1 <= s < B``.

    >>> significand(31295192, 10)
    SignificandDecomposition(significand=3.1295192, exponent=7)
    """
    base = _check_base(base)
    _check_nonzero(x)
    s, n, _ = _decompose(float(x), base)
    return SignificandDecomposition(float(s), int(n))


def mantissa(x, base=10):
    """``log_B x mod 1`` for ``x > 0`` (scalar or array), computed from the significand."""
    base = _check_base(base)
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)) or np.any(~np.isfinite(arr)):
        raise DomainError("mantissa requires finite x > 0")
    s, _, _ = _decompose(arr, base)
    m = _log_base(s, base)
    # log_B of a significand just below B can round up to 1
    m = np.minimum(m, np.nextafter(1.0, 0.0))
    return float(m) if m.ndim == 0 else m


def leading_digit(x, base=10):
    """First significant digit of ``x`` (scalar or array)."""
    base = _check_base(base)
    arr = _check_nonzero(x)
    _, _, digit = _decompose(arr, base)
    return int(digit) if digit.ndim == 0 else digit


def benford_digit_prob(digit, base=10):
    """``log_B((digit + 1) / digit)``."""
    base = _check_base(base)
    if isinstance(digit, bool) or int(digit) != digit or not 1 <= digit <= base - 1:
        raise DomainError(f"digit must be an integer in 1..{base - 1}, got {digit!r}")
    return math.log1p(1.0 / digit) / math.log(base)


def benford_probs(base=10):
    base = _check_base(base)
    return np.array([benford_digit_prob(k, base) for k in range(1, base)])


def digit_histogram(values, base=10):
    """Count the leading digits of a nonempty sequence of positive values."""
    base = _check_base(base)
    arr = np.asarray(values, dtype=float).ravel()
    if arr.size == 0:
        raise DomainError("digit_histogram needs at least one value")
    if np.any(~(arr > 0)) or np.any(~np.isfinite(arr)):
        raise DomainError("digit_histogram requires finite positive values")
    digits = leading_digit(arr, base)
    counts = np.bincount(np.atleast_1d(digits) - 1, minlength=base - 1)
    return DigitHistogram(base, counts, int(arr.size))


def digit_histogram_from_mantissas(mantissas, base=10):
    """Histogram of digits ``floor(B**m)`` for mantissas ``m`` in ``[0, 1)``.

    Lets large log-space samples skip the exponentiation entirely.
    """
    base = _check_base(base)
    m = np.asarray(mantissas, dtype=float).ravel()
    if m.size == 0:
        raise DomainError("need at least one mantissa")
    if np.any(m < 0) or np.any(m >= 1):
        raise DomainError("mantissas must lie in [0, 1)")
    # a digit boundary sits at m = log_B k; search them directly rather than
    # rounding B**m
    edges = _log_base(np.arange(2, base, dtype=float), base)
    digits = np.searchsorted(edges, m, side="right")
    counts = np.bincount(digits, minlength=base - 1)
    return DigitHistogram(base, counts, int(m.size))


def sse_error(hist):
    """Sum of squared differences between observed and Benford frequencies."""
    if hist.total <= 0:
        raise DomainError("sse_error needs a nonempty histogram")
    return float(np.sum((hist.frequencies - benford_probs(hist.base)) ** 2))
