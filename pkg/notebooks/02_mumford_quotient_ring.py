# %% [markdown]
# # The ring Q[lambda_1..lambda_g] / (c(E) c(E^dual) = 1)
#
# Graded pieces have strict-partition dimensions, the squares killed by
# Mumford's relation vanish, and c_top(Sym^2 E) reduces to 2^g lambda_1...lambda_g.

# %%
from siegel_chi.hodgering import (
    build_quotient,
    mumford_relations,
    mumford_square_vanishing,
    normal_form,
    strict_partition_counts,
)
from siegel_chi.symlambda import LambdaPoly, ctop_sym2, giambelli_det

for rel in mumford_relations(3):
    print(rel)

# %%
for g in range(1, 7):
    ring = build_quotient(g)
    print(g, ring.dims(), ring.dims() == strict_partition_counts(g))

# %%
ring = build_quotient(4)
print([mumford_square_vanishing(ring, k) for k in range(4)])

# %% [markdown]
# The Giambelli determinant and the top Chern class of Sym^2 agree; after
# reduction only the product of all generators survives.

# %%
for g in range(1, 5):
    r = build_quotient(g)
    print(g, giambelli_det(g))
    print("   ->", normal_form(r, ctop_sym2(g)))
