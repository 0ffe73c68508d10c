# %% [markdown]
# # Leading digits
#
# Significand, mantissa and first-digit histograms in base `B`.

# %%
import numpy as np

from benford_gengamma import GenGammaParams, sample
from benford_gengamma.benford import (
    benford_probs,
    digit_histogram,
    leading_digit,
    mantissa,
    significand,
    sse_error,
)

# %%
print(significand(31295192))
print(mantissa(31295192))
print(leading_digit(0.05), leading_digit(1.999999))

# %%
# decimal inputs that sit on a digit boundary keep their written digit
print(leading_digit(0.3), leading_digit(1e-6), leading_digit(2.0))

# %%
# Benford probabilities in a few bases
for base in (2, 8, 10, 16):
    print(base, np.round(benford_probs(base), 4))

# %%
# powers of 2 are a classical Benford sequence
powers = [2.0 ** k for k in range(1, 1001)]
hist = digit_histogram(powers)
print(hist.counts, sse_error(hist))

# %%
# 10^4 draws from a generalized gamma, compared with Benford digit by digit
batch = sample(10_000, GenGammaParams(2, 1, 0.5), seed=1)
hist = digit_histogram(batch.values)
for digit, (obs, theory) in enumerate(zip(hist.frequencies, benford_probs(10)), start=1):
    print(digit, f"{obs:.4f}", f"{theory:.4f}")
print("sse", sse_error(hist))
