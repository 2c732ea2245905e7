# %% [markdown]
# # Stable graphs in the locus Z
#
# A genus-g curve lies in Z when its dual graph has one cycle made of rational
# components.  The trees hanging off the cycle give a partition of g - 1.

# %%
from siegel_chi.strata import (
    enumerate_cycle_graphs,
    extract_partition,
    in_Z,
    partitions_of,
    verify_closure_lemma,
    xi_domain_dimension,
)
from siegel_chi.suites import figure_one_graphs

left, right = figure_one_graphs()
for graph in (left, right):
    print(graph.genera, graph.edges, in_Z(graph), extract_partition(graph))

# %%
for mu in partitions_of(4):
    print(mu, xi_domain_dimension(5, mu))

# %% [markdown]
# Genus-one cycle graphs with labelled legs, stable and prestable.

# %%
for l in (1, 2, 3):
    print(l, len(enumerate_cycle_graphs(l, 3)), len(enumerate_cycle_graphs(l, 3, stable=False)))

# %% [markdown]
# Contract every edge of representative graphs and tabulate what happens.
# Contracting a genus-0 tree root refines the partition; contracting a root of
# positive genus makes a cycle vertex irrational and leaves Z.

# %%
print(verify_closure_lemma(5).format())
