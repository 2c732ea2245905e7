# %% [markdown]
# # Non-principal polarizations
#
# chi(A_{g,delta}) is chi(A_g) times a degree ratio depending only on the
# divisibility chain delta = (d_1 | d_2 | ... | d_g).

# %%
from siegel_chi import chi_level, degree_ratio
from siegel_chi.level import PolarizationError, validate_type

for delta in [(1, 1), (1, 2), (1, 3), (2, 2), (1, 1, 2), (1, 2, 4), (1, 1, 1, 6)]:
    print(delta, degree_ratio(delta), chi_level(delta))

# %%
try:
    validate_type((1, 3, 2))
except PolarizationError as exc:
    print(exc)
