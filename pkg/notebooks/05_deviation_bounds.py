# %% [markdown]
# # How far from Benford?
#
# Every digit probability lies within `eps + sup |f_M - 1|` of its Benford
# value. The supremum is certified with a Lipschitz slack on the grid.

# %%
import numpy as np

from benford_gengamma import GenGammaParams
from benford_gengamma.analysis import (
    bound_sweep,
    deviation_bound,
    empirical_digit_histogram,
    per_digit_deviation,
)
from benford_gengamma.benford import benford_probs

params = GenGammaParams(1, 0.5, 0.5)

# %%
report = deviation_bound(params, 0.01)
print(report)

# %%
# per-digit deviations are smaller still, and they sum to zero
signed = [per_digit_deviation(params, j, report.terms, signed=True) for j in range(1, 10)]
print(np.round(signed, 5), sum(signed))

# %%
# a million draws stay inside the bound
hist = empirical_digit_histogram(params, 1_000_000, seed=5)
print(np.max(np.abs(hist.frequencies - benford_probs(10))), report.bound)

# %%
# the bound grows with d and with p
d_axis = np.arange(1, 21) / 10
sweep = bound_sweep("d", d_axis, params, 0.01)
for d, bound in zip(d_axis, sweep.cells):
    print(f"d={d:.1f}  bound={bound:.5f}")

# %%
p_axis = np.arange(1, 21) / 10
sweep = bound_sweep("p", p_axis, params, 0.01)
print(np.round(sweep.cells, 5))
