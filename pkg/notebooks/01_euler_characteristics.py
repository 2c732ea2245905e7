# %% [markdown]
# # Euler characteristic of A_g, three ways
#
# The product of zeta values, the recursion through tau(g), and the log
# Gauss-Bonnet integral of lambda_1...lambda_g all land on the same exact
# rational.

# %%
from siegel_chi import chi_gaussbonnet, chi_product, chi_recursive, tau
from siegel_chi.exactnum import bernoulli, zeta_neg

for g in range(1, 6):
    print(g, chi_product(g), chi_recursive(g), chi_gaussbonnet(g))

# %% [markdown]
# tau(g) is the ratio of two Hodge integrals; it collapses to |B_2g|/2g,
# and (-1)^g tau(g) is zeta(1 - 2g).

# %%
for g in range(2, 8):
    print(g, tau(g), abs(bernoulli(2 * g)) / (2 * g), (-1) ** g * tau(g) == zeta_neg(g))

# %% [markdown]
# Numerators and denominators grow fast, which is why everything stays exact.

# %%
chi12 = chi_product(12)
print(chi12)
print(chi12.denominator.bit_length(), "bits in the denominator")
