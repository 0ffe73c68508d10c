# %% [markdown]
# # Density of log_B X mod 1
#
# A direct sum over decades and a Fourier series give the same function.
# The Fourier form converges fast enough that a handful of terms is enough
# for plotting, and its truncation error has an explicit bound.

# %%
import numpy as np

from benford_gengamma import GenGammaParams
from benford_gengamma.wrapped_pdf import (
    direct_pdf_grid,
    fourier_coefficients,
    fourier_pdf_grid,
    min_terms,
    truncation_bound,
)

u = np.linspace(0, 1, 11)

# %%
sets = [GenGammaParams(1, 0.5, 0.5), GenGammaParams(1, 1, 0.5),
        GenGammaParams(1, 0.5, 1), GenGammaParams(10, 0.5, 0.5)]
for params in sets:
    m = min_terms(params, 0.01)
    print(params.a, params.d, params.p, "M =", m)
    print("  fourier", np.round(fourier_pdf_grid(u, params, m), 4))
    print("  direct ", np.round(direct_pdf_grid(u, params)[0], 4))

# %%
# coefficients shrink geometrically; the bound is far from tight
params = sets[0]
print(np.abs(fourier_coefficients(params, 6)))
for m in (1, 5, 26):
    gap = np.max(np.abs(fourier_pdf_grid(u, params, m) - fourier_pdf_grid(u, params, 500)))
    print(m, gap, truncation_bound(params, m))

# %%
# a = 1 and a = 100 are a whole number of decades apart and share a density;
# a = 2 shifts the curve by log10(2)
print(np.round(fourier_pdf_grid(u, GenGammaParams(1, 1, 1), 50), 6))
print(np.round(fourier_pdf_grid(u, GenGammaParams(100, 1, 1), 50), 6))
print(np.round(fourier_pdf_grid(u, GenGammaParams(2, 1, 1), 50), 6))
