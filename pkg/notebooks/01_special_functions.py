# %% [markdown]
# # Special functions
#
# The wrapped density needs the gamma function at complex arguments
# `d/p - 2 pi i k / (p ln B)`. Here we check the kernels against identities
# that are known in closed form.

# %%
import math

import numpy as np

from benford_gengamma.specfun import (
    abs_gamma_product,
    gamma_complex,
    inv_reg_lower_incomplete_gamma,
    ln_gamma_real,
    reg_lower_incomplete_gamma,
)

# %%
# ln Gamma(10) = ln 9!
print(ln_gamma_real(10.0), math.log(362880))

# %%
# |Gamma(1 + i)|^2 = pi / sinh(pi)
print(abs(gamma_complex(1 + 1j)), math.sqrt(math.pi / math.sinh(math.pi)))

# %%
# the truncated product converges slowly; the tail correction helps a lot
for terms in (10, 1000, 100_000):
    plain = abs_gamma_product(1, 1, terms=terms)
    fixed = abs_gamma_product(1, 1, terms=terms, tail_correction=True)
    print(terms, plain, fixed)

# %%
# modulus along the line Re z = 1/2 decays like exp(-pi |t| / 2)
t = np.array([0.0, 5.0, 20.0, 50.0])
print(np.abs(gamma_complex(0.5 + 1j * t)))

# %%
# P(1/2, x^2) is erf(x), and the inverse undoes it
print(reg_lower_incomplete_gamma(0.5, 0.25), math.erf(0.5))
print(inv_reg_lower_incomplete_gamma(0.5, math.erf(0.5)))
