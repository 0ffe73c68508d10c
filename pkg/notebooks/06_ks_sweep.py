# %% [markdown]
# # Kolmogorov-Smirnov over the (d, p) plane
#
# Each cell draws its own substream, so the grid is the same with or
# without threads.

# %%
import numpy as np

from benford_gengamma.analysis import ks_statistic, ks_sweep

# %%
print(ks_statistic([0.5]), ks_statistic([0.25, 0.75]))

# %%
axis = np.round(np.arange(1, 11) * 0.2, 1)
grid = ks_sweep(axis, axis, a=1, base=10, n=10_000, seed=20211, workers=4)
np.set_printoptions(linewidth=120)
print("rows d, columns p")
print(np.round(grid.cells, 3))

# %%
# small d and p give the smallest statistics
print(grid.cells[0, 0], grid.cells[-1, -1])

# %%
# a = 10 is one decade from a = 1; with the same seed every mantissa is the
# same up to rounding, so the two grids agree almost exactly
other = ks_sweep(axis, axis, a=10, base=10, n=10_000, seed=20211)
print(np.median(grid.cells), np.median(other.cells))
