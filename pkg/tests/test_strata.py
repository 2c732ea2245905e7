from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from siegel_chi.strata import (
    EdgeType,
    StableGraph,
    XiGraph,
    canonical_form,
    classify_edge,
    contract_edge,
    cycle_graph,
    cycle_vertices,
    enumerate_cycle_graphs,
    extract_partition,
    in_Z,
    is_refinement,
    partitions_of,
    tree_shapes,
    verify_closure_lemma,
    xi_domain_dimension,
    z_graphs,
)
from siegel_chi.suites import figure_one_graphs


def brute_partitions(n):
    """All weakly increasing tuples summing to n, from compositions."""
    out = set()

    def comps(m):
        if m == 0:
            yield ()
            return
        for first in range(1, m + 1):
            for rest in comps(m - first):
                yield (first,) + rest

    for c in comps(n):
        out.add(tuple(sorted(c)))
    return sorted(out)


def test_partitions_examples():
    assert partitions_of(1) == [(1,)]
    assert partitions_of(4) == [(1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,)]
    assert (1, 2, 3, 4) in partitions_of(10) and (10,) in partitions_of(10)


@pytest.mark.parametrize("n", range(0, 13))
def test_partitions_match_brute_force(n):
    assert partitions_of(n) == brute_partitions(n)


def brute_refines(fine, coarse):
    # assign each fine part to a coarse part, in every way
    for assign in product(range(len(coarse)), repeat=len(fine)):
        sums = [0] * len(coarse)
        for part, k in zip(fine, assign):
            sums[k] += part
        if sums == list(coarse):
            return True
    return False


@pytest.mark.parametrize("n", range(1, 8))
def test_refinement_matches_brute_force(n):
    parts = partitions_of(n)
    for a in parts:
        for b in parts:
            assert is_refinement(a, b) == brute_refines(a, b), (a, b)


@pytest.mark.parametrize("n", range(1, 12))
def test_single_part_refines_only_itself(n):
    for mu in partitions_of(n):
        assert is_refinement((n,), mu) == (mu == (n,))
        assert is_refinement(mu, (n,))


@pytest.mark.parametrize("g, mu, dim", [(2, (1,), 1), (11, (1, 2, 3, 4), 25), (11, (10,), 28)])
def test_xi_dimension_examples(g, mu, dim):
    assert xi_domain_dimension(g, mu) == dim


def test_xi_dimension_identity_up_to_20():
    for g in range(2, 21):
        for mu in partitions_of(g - 1):
            assert xi_domain_dimension(g, mu) == 3 * g - 3 - (len(mu) + 1)


def test_xi_dimension_rejects_non_partition():
    with pytest.raises(ValueError):
        xi_domain_dimension(5, (1, 2))


def brute_iso_classes(graphs):
    """Deduplicate by trying every vertex permutation (no invariant pruning)."""
    classes = []
    for g in graphs:
        found = False
        for h in classes:
            if h.genera == g.genera and len(h.edges) == len(g.edges):
                for perm in permutations(range(g.n_vertices)):
                    edges = sorted(tuple(sorted((perm[a], perm[b]))) for a, b in g.edges)
                    legs = sorted((perm[w], lab) for w, lab in g.legs)
                    if edges == sorted(h.edges) and legs == sorted(h.legs):
                        found = True
                        break
            if found:
                break
        if not found:
            classes.append(g)
    return classes


def test_cycle_graphs_single_leg():
    (only,) = enumerate_cycle_graphs(1, 1)
    assert only.genera == (0,) and only.edges == ((0, 0),) and only.legs == ((0, 1),)
    # a 2-cycle with one leg has a bivalent rational vertex, so it is unstable
    assert len(enumerate_cycle_graphs(1, 2)) == 1
    assert len(enumerate_cycle_graphs(1, 2, stable=False)) == 2


def test_cycle_graphs_two_legs():
    stable = enumerate_cycle_graphs(2, 2)
    assert len(stable) == 2
    assert sorted(len(g.genera) for g in stable) == [1, 2]
    assert len(enumerate_cycle_graphs(2, 2, stable=False)) == 3


@pytest.mark.parametrize("l, m", [(1, 3), (2, 3), (3, 3), (3, 4), (4, 4)])
def test_cycle_graphs_against_brute_force(l, m):
    raw = []
    for length in range(1, m + 1):
        for placement in product(range(length), repeat=l):
            g = cycle_graph(length, tuple((v, lab) for lab, v in enumerate(placement, start=1)))
            if g.is_stable():
                raw.append(g)
    got = enumerate_cycle_graphs(l, m)
    assert len(got) == len(brute_iso_classes(raw))
    for g in got:
        assert g.is_stable() and g.total_genus == 1 and g.betti == 1
        assert cycle_vertices(g) == set(range(g.n_vertices))


def test_figure_graphs():
    left, right = figure_one_graphs()
    assert left.total_genus == right.total_genus == 11
    assert left.is_stable() and right.is_stable()
    assert in_Z(left) and extract_partition(left) == (1, 2, 3, 4)
    assert in_Z(right) and extract_partition(right) == (10,)
    assert len(cycle_vertices(left)) == 3


def test_in_Z_negative_cases():
    assert not in_Z(StableGraph((1,), ((0, 0),)))
    assert not in_Z(StableGraph((1, 1), ((0, 1),)))  # compact type
    assert not in_Z(StableGraph((0, 0), ((0, 1), (0, 1), (0, 1))))  # Betti 2
    with pytest.raises(ValueError):
        extract_partition(StableGraph((1,), ((0, 0),)))


def test_loop_with_single_tree():
    for g in range(2, 7):
        graph = XiGraph(1, ((0, (g - 1, ())),)).to_graph()
        assert extract_partition(graph) == (g - 1,)


def test_classify_examples():
    two_cycle = XiGraph(2, ((0, (1, ())), (1, (2, ())))).to_graph()
    kinds = [classify_edge(two_cycle, i) for i in range(len(two_cycle.edges))]
    assert kinds.count(EdgeType.CYCLE) == 2 and kinds.count(EdgeType.ROOT_POSITIVE) == 2

    tree3 = (0, ((1, ()), (2, ())))
    g = XiGraph(1, ((0, tree3),)).to_graph()
    kinds = {classify_edge(g, i) for i in range(len(g.edges))}
    assert kinds == {EdgeType.LOOP, EdgeType.ROOT_ZERO, EdgeType.TREE}


def test_contractions():
    three = XiGraph(3, ((0, (1, ())), (1, (1, ())), (2, (1, ())))).to_graph()
    cyc = next(i for i in range(len(three.edges)) if classify_edge(three, i) is EdgeType.CYCLE)
    two = contract_edge(three, cyc)
    assert len(cycle_vertices(two)) == 2 and extract_partition(two) == (1, 1, 1)

    loop = XiGraph(1, ((0, (2, ())),)).to_graph()
    after = contract_edge(loop, 0)
    assert after.betti == 0 and after.total_genus == loop.total_genus and not in_Z(after)

    tree = XiGraph(1, ((0, (0, ((1, ()), (2, ())))),)).to_graph()
    t = next(i for i in range(len(tree.edges)) if classify_edge(tree, i) is EdgeType.TREE)
    assert in_Z(contract_edge(tree, t)) and extract_partition(contract_edge(tree, t)) == (3,)


def test_root_edge_outcomes():
    pos = XiGraph(1, ((0, (3, ())),)).to_graph()
    e = next(i for i in range(len(pos.edges)) if classify_edge(pos, i) is EdgeType.ROOT_POSITIVE)
    assert not in_Z(contract_edge(pos, e))

    zero = XiGraph(1, ((0, (0, ((1, ()), (2, ())))),)).to_graph()
    e = next(i for i in range(len(zero.edges)) if classify_edge(zero, i) is EdgeType.ROOT_ZERO)
    after = contract_edge(zero, e)
    assert in_Z(after) and extract_partition(after) == (1, 2)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_contraction_invariants(data):
    g = data.draw(st.integers(2, 6))
    mu = data.draw(st.sampled_from(partitions_of(g - 1)))
    xis = list(z_graphs(mu))
    xi = data.draw(st.sampled_from(xis))
    graph = xi.to_graph()
    assert graph.is_stable() and in_Z(graph) and extract_partition(graph) == mu
    i = data.draw(st.integers(0, len(graph.edges) - 1))
    u, v = graph.edges[i]
    after = contract_edge(graph, i)
    assert after.total_genus == g
    assert after.betti == graph.betti - (1 if u == v else 0)
    kind = classify_edge(graph, i)
    if kind in (EdgeType.CYCLE, EdgeType.TREE):
        assert in_Z(after) and extract_partition(after) == mu
    # the cycle (minimal Betti-1 subgraph) is unique, so the partition is well defined
    assert extract_partition(graph) == tuple(sorted(xi.partition))


def test_tree_shapes_are_stable():
    for h in range(1, 6):
        for tree in tree_shapes(h, 2):
            graph = XiGraph(1, ((0, tree),)).to_graph()
            assert graph.is_stable() and graph.total_genus == h + 1


def test_canonical_form_is_invariant():
    g = XiGraph(2, ((0, (1, ())), (1, (0, ((1, ()), (1, ())))))).to_graph()
    for perm in permutations(range(g.n_vertices)):
        inv = {old: new for new, old in enumerate(perm)}
        genera = tuple(g.genera[old] for old in perm)
        edges = tuple((inv[a], inv[b]) for a, b in g.edges)
        assert canonical_form(StableGraph(genera, edges)) == canonical_form(g)


@pytest.mark.parametrize("g", range(2, 6))
def test_closure_lemma_no_violations(g):
    report = verify_closure_lemma(g)
    assert report.ok, report.format()
    assert report.outcomes[EdgeType.LOOP].keys() == {"outside"}
    assert set(report.outcomes[EdgeType.ROOT_POSITIVE]) == {"outside"}
    if g >= 3:
        assert set(report.outcomes[EdgeType.ROOT_ZERO]) == {"finer"}
    assert report.root_order_as_listed is False


def test_mu_13_root_contractions_are_finer_or_outside():
    mu = (1, 3)
    seen = set()
    for xi in z_graphs(mu):
        graph = xi.to_graph()
        for i in range(len(graph.edges)):
            kind = classify_edge(graph, i)
            if kind not in (EdgeType.ROOT_POSITIVE, EdgeType.ROOT_ZERO):
                continue
            after = contract_edge(graph, i)
            if in_Z(after):
                new = extract_partition(after)
                assert new != mu and is_refinement(new, mu)
                seen.add("finer")
            else:
                seen.add("outside")
    assert seen == {"finer", "outside"}
