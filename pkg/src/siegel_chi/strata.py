"""Stable graphs of curves in the locus Z and the strata xi_mu that cover it.

A stable graph of genus g lies in Z when its first Betti number is 1 and
every vertex on its unique cycle has genus 0.  Removing the cycle leaves
trees of compact type whose genera form a partition mu of g - 1.
"""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator

__all__ = [
    "StableGraph",
    "XiGraph",
    "EdgeType",
    "ClosureReport",
    "partitions_of",
    "is_refinement",
    "xi_domain_dimension",
    "cycle_graph",
    "enumerate_cycle_graphs",
    "canonical_form",
    "cycle_vertices",
    "in_Z",
    "extract_partition",
    "classify_edge",
    "contract_edge",
    "tree_shapes",
    "z_graphs",
    "verify_closure_lemma",
]

Edge = tuple[int, int]
Partition = tuple[int, ...]


@dataclass(frozen=True)
class StableGraph:
    """Dual graph: vertex genera, edges as vertex pairs (loops allowed), labelled legs."""

    genera: tuple[int, ...]
    edges: tuple[Edge, ...] = ()
    legs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        n = len(self.genera)
        object.__setattr__(self, "edges", tuple(tuple(sorted(e)) for e in self.edges))
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) refers to a missing vertex")
        for v, _ in self.legs:
            if not 0 <= v < n:
                raise ValueError(f"leg on missing vertex {v}")

    @property
    def n_vertices(self) -> int:
        return len(self.genera)

    def valence(self, v: int) -> int:
        val = sum((a == v) + (b == v) for a, b in self.edges)
        return val + sum(1 for w, _ in self.legs if w == v)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def is_connected(self) -> bool:
        if not self.genera:
            return False
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices

    @property
    def betti(self) -> int:
        return len(self.edges) - self.n_vertices + 1

    @property
    def total_genus(self) -> int:
        return sum(self.genera) + self.betti

    def is_stable(self) -> bool:
        if not self.is_connected():
            return False
        for v, h in enumerate(self.genera):
            val = self.valence(v)
            if h == 0 and val < 3:
                return False
            if h == 1 and val < 1:
                return False
        return True


class EdgeType(enum.Enum):
    CYCLE = "cycle"
    TREE = "tree"
    ROOT_POSITIVE = "root_positive"
    ROOT_ZERO = "root_zero"
    LOOP = "loop"


# -- partitions ---------------------------------------------------------------

def partitions_of(n: int) -> list[Partition]:
    """Weakly increasing partitions of n, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[Partition] = []

    def rec(remaining: int, smallest: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(smallest, remaining + 1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, 1, [])
    return sorted(out)


def is_refinement(fine: Partition, coarse: Partition) -> bool:
    """Whether the parts of ``fine`` can be grouped to sum to the parts of ``coarse``."""
    if sum(fine) != sum(coarse):
        return False
    fine = sorted(fine, reverse=True)
    targets = sorted(coarse, reverse=True)
    bins = [0] * len(targets)

    def place(i: int) -> bool:
        if i == len(fine):
            return all(b == t for b, t in zip(bins, targets))
        tried = set()
        for k, t in enumerate(targets):
            key = (t, bins[k])
            if key in tried or bins[k] + fine[i] > t:
                continue
            tried.add(key)
            bins[k] += fine[i]
            if place(i + 1):
                return True
            bins[k] -= fine[i]
        return False

    return place(0)


def xi_domain_dimension(g: int, mu: Partition) -> int:
    """dim of M^ct_{g_1,1} x ... x M^ct_{g_l,1} x M^cycle_{1,l}.

    Checked against dim M_g^{<=1} - (l + 1) = 3g - 3 - (l + 1).
    """
    mu = tuple(mu)
    if sum(mu) != g - 1 or any(p < 1 for p in mu):
        raise ValueError(f"{mu} is not a partition of {g - 1}")
    l = len(mu)
    dim = sum(3 * (gi - 1) + 1 for gi in mu) + (l - 1)
    assert dim == (3 * g - 3) - (l + 1), (g, mu, dim)
    return dim


# -- cycles and Z membership ----------------------------------------------------

def cycle_vertices(graph: StableGraph) -> set[int]:
    """Vertices of the 2-core; for Betti number 1 this is exactly the cycle."""
    alive = set(range(graph.n_vertices))
    degree = {v: sum((a == v) + (b == v) for a, b in graph.edges) for v in alive}
    stack = [v for v in alive if degree[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in graph.neighbors(v):
            if w in alive:
                degree[w] -= 1
                if degree[w] <= 1:
                    stack.append(w)
    return alive


def in_Z(graph: StableGraph) -> bool:
    if graph.betti != 1 or not graph.is_connected():
        return False
    return all(graph.genera[v] == 0 for v in cycle_vertices(graph))


def _components_off_cycle(graph: StableGraph, cycle: set[int]) -> list[set[int]]:
    rest = set(range(graph.n_vertices)) - cycle
    comps = []
    while rest:
        start = rest.pop()
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in graph.neighbors(v):
                if w in rest:
                    rest.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def extract_partition(graph: StableGraph) -> Partition:
    """Sorted genera of the trees hanging off the cycle of a graph in Z."""
    if not in_Z(graph):
        raise ValueError("graph is not in Z")
    cycle = cycle_vertices(graph)
    return tuple(sorted(sum(graph.genera[v] for v in comp) for comp in _components_off_cycle(graph, cycle)))


def classify_edge(graph: StableGraph, edge: int) -> EdgeType:
    """Type of ``graph.edges[edge]`` for a graph in Z."""
    if not in_Z(graph):
        raise ValueError("graph is not in Z")
    u, v = graph.edges[edge]
    cycle = cycle_vertices(graph)
    if u == v and u in cycle:
        return EdgeType.LOOP
    if u in cycle and v in cycle:
        return EdgeType.CYCLE
    if u in cycle or v in cycle:
        root = v if u in cycle else u
        return EdgeType.ROOT_POSITIVE if graph.genera[root] > 0 else EdgeType.ROOT_ZERO
    return EdgeType.TREE


def contract_edge(graph: StableGraph, edge: int) -> StableGraph:
    """Contract ``graph.edges[edge]``; a loop raises its vertex genus by one."""
    u, v = graph.edges[edge]
    rest = graph.edges[:edge] + graph.edges[edge + 1:]
    if u == v:
        genera = list(graph.genera)
        genera[u] += 1
        return StableGraph(tuple(genera), rest, graph.legs)
    # merge v into u, then close the gap left by v
    def relabel(w: int) -> int:
        w = u if w == v else w
        return w - 1 if w > v else w

    genera = [h for w, h in enumerate(graph.genera) if w != v]
    genera[relabel(u)] += graph.genera[v]
    edges = tuple((relabel(a), relabel(b)) for a, b in rest)
    legs = tuple((relabel(w), lab) for w, lab in graph.legs)
    return StableGraph(tuple(genera), edges, legs)


# -- isomorphism ----------------------------------------------------------------

def canonical_form(graph: StableGraph) -> tuple:
    """Isomorphism invariant key, by permuting vertices within (genus, valence) classes."""
    classes: dict[tuple[int, int], list[int]] = defaultdict(list)
    for v in range(graph.n_vertices):
        classes[(graph.genera[v], graph.valence(v))].append(v)
    keys = sorted(classes)
    best = None
    for perms in product(*(permutations(classes[k]) for k in keys)):
        order = [v for block in perms for v in block]
        new = {old: i for i, old in enumerate(order)}
        key = (
            tuple(graph.genera[v] for v in order),
            tuple(sorted(tuple(sorted((new[a], new[b]))) for a, b in graph.edges)),
            tuple(sorted((new[w], lab) for w, lab in graph.legs)),
        )
        if best is None or key < best:
            best = key
    return best


# -- genus-one cycle graphs -----------------------------------------------------

def cycle_graph(length: int, legs: tuple[tuple[int, int], ...] = ()) -> StableGraph:
    if length < 1:
        raise ValueError("cycle length must be >= 1")
    if length == 1:
        edges = ((0, 0),)
    else:
        edges = tuple((i, (i + 1) % length) for i in range(length))
    return StableGraph((0,) * length, edges, legs)


def enumerate_cycle_graphs(l: int, max_cycle_len: int, stable: bool = True) -> list[StableGraph]:
    """Genus-one graphs with l labelled legs whose vertices are rational and lie on one cycle.

    With ``stable=False`` vertices of valence 2 are allowed (prestable shapes).
    One representative per isomorphism class is returned.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    seen: dict[tuple, StableGraph] = {}
    for length in range(1, max_cycle_len + 1):
        for placement in product(range(length), repeat=l):
            g = cycle_graph(length, tuple((v, lab) for lab, v in enumerate(placement, start=1)))
            if stable and not g.is_stable():
                continue
            seen.setdefault(canonical_form(g), g)
    return [seen[k] for k in sorted(seen)]


# -- xi_mu graphs ---------------------------------------------------------------

Tree = tuple  # (root genus, tuple of child trees), children sorted


def tree_shapes(h: int, depth: int) -> list[Tree]:
    """Stable rooted trees of total genus h with at most ``depth`` levels below the root.

    The root has one extra half-edge towards the cycle; genus-0 vertices need
    valence at least 3 and there are no legs, so every subtree has genus > 0.
    """
    if h < 1:
        return []
    shapes: list[Tree] = [(h, ())]
    if depth == 0:
        return shapes
    for r in range(h):
        for parts in partitions_of(h - r):
            if r == 0 and len(parts) < 2:
                continue
            options = [tree_shapes(p, depth - 1) for p in parts]
            for choice in product(*options):
                shapes.append((r, tuple(sorted(choice))))
    return sorted(set(shapes))


def _tree_genus(tree: Tree) -> int:
    return tree[0] + sum(_tree_genus(c) for c in tree[1])


@dataclass(frozen=True)
class XiGraph:
    """A cycle of rational vertices with one rooted tree per part of mu.

    ``attachments`` lists (cycle vertex, tree) pairs.
    """

    cycle_length: int
    attachments: tuple[tuple[int, Tree], ...]

    @property
    def partition(self) -> Partition:
        return tuple(sorted(_tree_genus(t) for _, t in self.attachments))

    def to_graph(self) -> StableGraph:
        base = cycle_graph(self.cycle_length)
        genera = list(base.genera)
        edges = list(base.edges)

        def add(tree: Tree, parent: int) -> None:
            genera.append(tree[0])
            me = len(genera) - 1
            edges.append((parent, me))
            for child in tree[1]:
                add(child, me)

        for vertex, tree in self.attachments:
            add(tree, vertex)
        return StableGraph(tuple(genera), tuple(edges))


def _set_partitions(items: list, blocks: int) -> Iterator[list[list]]:
    if blocks == 0:
        if not items:
            yield []
        return
    if len(items) < blocks:
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest, blocks - 1):
        yield [[first]] + sub
    for sub in _set_partitions(rest, blocks):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]


def z_graphs(mu: Partition, max_cycle_len: int = 3, tree_depth: int = 2) -> Iterator[XiGraph]:
    """Representative graphs in the image of xi_mu.

    Every cycle vertex carries at least one tree (stability); for cycles of
    length at most 3 any arrangement of the blocks is equivalent, so set
    partitions of the trees suffice.
    """
    for trees in product(*(tree_shapes(p, tree_depth) for p in mu)):
        for length in range(1, min(max_cycle_len, len(mu)) + 1):
            for blocks in _set_partitions(list(range(len(mu))), length):
                attachments = tuple((v, trees[i]) for v, block in enumerate(blocks) for i in block)
                yield XiGraph(length, attachments)


# -- closure lemma ----------------------------------------------------------------

LISTED_ROOT_ORDER = {EdgeType.ROOT_POSITIVE: "finer", EdgeType.ROOT_ZERO: "outside"}


@dataclass
class ClosureReport:
    g: int
    graphs_checked: int = 0
    edges_checked: int = 0
    outcomes: dict[EdgeType, Counter] = field(default_factory=lambda: {t: Counter() for t in EdgeType})
    violations: list[str] = field(default_factory=list)
    root_order_as_listed: bool | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def outcome_table(self) -> list[tuple[str, dict[str, int]]]:
        return [(t.value, dict(sorted(self.outcomes[t].items()))) for t in EdgeType]

    def format(self) -> str:
        lines = [f"closure lemma, g={self.g}: {self.graphs_checked} graphs, {self.edges_checked} edges"]
        for name, counts in self.outcome_table():
            cells = ", ".join(f"{k}={v}" for k, v in counts.items()) or "not observed"
            lines.append(f"  {name:<14} {cells}")
        if self.root_order_as_listed is not None:
            order = "as listed" if self.root_order_as_listed else "swapped relative to the listed order"
            lines.append(f"  root-edge outcomes: {order}")
        lines.extend(f"  VIOLATION {v}" for v in self.violations)
        return "\n".join(lines)


def _outcome(before: Partition, graph: StableGraph) -> tuple[str, Partition | None]:
    if not in_Z(graph):
        return "outside", None
    after = extract_partition(graph)
    if after == before:
        return "same", after
    if is_refinement(after, before):
        return "finer", after
    return "other", after


def verify_closure_lemma(g: int, max_cycle_len: int = 3, tree_depth: int = 2) -> ClosureReport:
    """Contract every edge of representative Z-graphs of genus g and tabulate outcomes."""
    if g < 2:
        raise ValueError("g must be >= 2")
    report = ClosureReport(g)
    principal = (g - 1,)
    for mu in partitions_of(g - 1):
        for xi in z_graphs(mu, max_cycle_len, tree_depth):
            graph = xi.to_graph()
            report.graphs_checked += 1
            if not graph.is_stable() or graph.total_genus != g:
                report.violations.append(f"malformed graph for {mu}: {graph}")
                continue
            if not in_Z(graph) or extract_partition(graph) != mu:
                report.violations.append(f"graph for {mu} not recognised in Z: {graph}")
                continue
            for i in range(len(graph.edges)):
                kind = classify_edge(graph, i)
                contracted = contract_edge(graph, i)
                report.edges_checked += 1
                if contracted.total_genus != g:
                    report.violations.append(f"contraction changed genus: {graph} edge {i}")
                outcome, after = _outcome(mu, contracted)
                report.outcomes[kind][outcome] += 1
                if kind in (EdgeType.CYCLE, EdgeType.TREE) and outcome != "same":
                    report.violations.append(f"{kind.value} edge {i} of {graph} gave {outcome} {after}")
                if kind is EdgeType.LOOP and outcome != "outside":
                    report.violations.append(f"loop edge of {graph} stayed in Z")
                if outcome == "other":
                    report.violations.append(f"{kind.value} edge {i} of {graph} gave unrelated {after}")
                if mu != principal and after == principal:
                    report.violations.append(f"{graph} (mu={mu}) specialised into the principal locus")

    seen = {t: set(report.outcomes[t]) for t in (EdgeType.ROOT_POSITIVE, EdgeType.ROOT_ZERO)}
    for t, kinds in seen.items():
        if len(kinds) > 1 or kinds - {"finer", "outside"}:
            report.violations.append(f"{t.value} edges have mixed outcomes {sorted(kinds)}")
    if all(len(k) == 1 for k in seen.values()):
        if seen[EdgeType.ROOT_POSITIVE] == seen[EdgeType.ROOT_ZERO]:
            report.violations.append("both root edge types have the same outcome")
    observed = {t: next(iter(k)) for t, k in seen.items() if len(k) == 1}
    if observed:
        report.root_order_as_listed = all(LISTED_ROOT_ORDER[t] == o for t, o in observed.items())

    for mu in partitions_of(g - 1):
        if mu != principal and is_refinement(principal, mu):
            report.violations.append(f"{principal} refines {mu}")
    return report
