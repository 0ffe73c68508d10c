# %% [markdown]
# # The generalized gamma distribution
#
# Three parameters: scale `a`, shape `d`, power `p`. Sampling goes through
# `ln X`, which keeps tiny shapes away from underflow.

# %%
import math

import numpy as np
from scipy import integrate

from benford_gengamma import GenGammaParams, cdf, pdf, quantile, sample

params = GenGammaParams(a=2, d=1, p=0.5)

# %%
# the density integrates to one
x = np.geomspace(1e-8, 1e4, 20001)
print(integrate.trapezoid(pdf(x, params), x))

# %%
# quantile and cdf are inverse to each other
for q in (0.01, 0.5, 0.99):
    print(q, cdf(quantile(q, params), params))

# %%
# Weibull (d == p) has a closed-form cdf
weibull = GenGammaParams(a=3, d=1.5, p=1.5)
print(cdf(2.0, weibull), 1 - math.exp(-(2 / 3) ** 1.5))

# %%
# a fixed seed gives a fixed batch; the empirical median sits near the true one
batch = sample(100_000, params, seed=1)
print(np.median(batch.values), quantile(0.5, params))

# %%
# log-space draws survive where the values themselves underflow
tiny = sample(5, GenGammaParams(1, 0.001, 1), seed=3)
print(tiny.values)
print(tiny.log_values)
