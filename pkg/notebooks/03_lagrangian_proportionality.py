# %% [markdown]
# # Integrals on LG_g and proportionality
#
# The integration functional on LG_g is pinned by Gauss-Bonnet (the top Chern
# class of the tangent bundle integrates to 2^g).  Multiplying by
# K(g) = chi(A_g) / chi(LG_g) gives lambda-monomial integrals on A_g-bar.

# %%
from siegel_chi import integrate_abar, lg_euler_char, lg_integrate, lg_normalize, proportionality_K
from siegel_chi.hodgering import weighted_monomials

for g in range(1, 6):
    integ = lg_normalize(g)
    print(g, lg_euler_char(g), integ.top_scale, proportionality_K(g))

# %% [markdown]
# All top-degree lambda monomials for g = 3.

# %%
g = 3
for a in weighted_monomials(g, g * (g + 1) // 2):
    print(a, lg_integrate(lg_normalize(g), a), integrate_abar(g, a))

# %% [markdown]
# The classical value of lambda_1^3 on A_2-bar comes out as a by-product.

# %%
print(integrate_abar(2, (3, 0)))
