"""Shared oracles and instance builders for the test suite.

Everything here is deliberately naive: exhaustive searches and first
principles definitions that the fast implementations are judged against.
"""

import itertools
import random

from hypershrink import ColouredGraph, Hypergraph

H1 = Hypergraph(4, ((0, 1, 2), (1, 2, 3), (2, 3)))

PATH3 = Hypergraph(3, ((0, 1), (1, 2)))

TRIANGLE3 = Hypergraph(3, ((0, 1), (0, 2), (1, 2)))

TRIANGLE4 = Hypergraph(4, ((0, 1), (0, 2), (1, 2)))

NESTED4 = Hypergraph(4, ((0, 1), (0, 1, 2), (0, 1, 3)))

SINGLE_BIG3 = Hypergraph(3, ((0, 1, 2),))

STAR7 = Hypergraph(7, ((0, 1, 2), (0, 3, 4), (0, 5, 6)))


def component_count(n: int, pairs) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def is_spanning_tree(n: int, pairs) -> bool:
    return len(pairs) == n - 1 and component_count(n, pairs) == 1


def brute_max_matching(adjacency, right_size: int) -> int:
    """Maximum matching size of a bipartite graph by exhaustive branching.

    ``adjacency[i]`` lists the right neighbours of left vertex i.  Only
    intended for tiny instances.
    """
    best = 0
    used = [False] * right_size

    def explore(i: int, size: int):
        nonlocal best
        if size + len(adjacency) - i <= best:
            return
        if i == len(adjacency):
            best = max(best, size)
            return
        explore(i + 1, size)
        for w in adjacency[i]:
            if not used[w]:
                used[w] = True
                explore(i + 1, size + 1)
                used[w] = False

    explore(0, 0)
    return best


def brute_rainbow_tree_exists(graph: ColouredGraph) -> bool:
    """Check all n-1 edge subsets for a rainbow spanning tree."""
    if graph.n == 1:
        return True
    for subset in itertools.combinations(graph.edges, graph.n - 1):
        colours = {c for _, _, c in subset}
        if len(colours) < len(subset):
            continue
        if is_spanning_tree(graph.n, [(u, v) for u, v, _ in subset]):
            return True
    return False


def brute_is_hypertree(hypergraph: Hypergraph) -> bool:
    """Subset-count definition checked verbatim over all nonempty X."""
    n = hypergraph.n
    if hypergraph.num_edges != n - 1:
        return False
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            inside = sum(1 for e in hypergraph.edges if set(e) <= set(subset))
            if inside > size - 1:
                return False
    return True


def random_valid_hypergraph(rng: random.Random, n_max: int = 12, m_max: int = 24) -> Hypergraph:
    """Arbitrary simple hypergraph: distinct edges of size >= 2."""
    n = rng.randint(2, n_max)
    m = rng.randint(1, min(m_max, 2 * n))
    seen = set()
    edges = []
    for _ in range(m):
        size = rng.randint(2, min(n, rng.choice((2, 3, 3, 4, 5))))
        edge = tuple(sorted(rng.sample(range(n), size)))
        if frozenset(edge) in seen:
            continue
        seen.add(frozenset(edge))
        edges.append(edge)
    if not edges:
        edges.append((0, 1))
    return Hypergraph(n, tuple(edges))


def random_tree_count_hypergraph(rng: random.Random, n: int) -> Hypergraph:
    """Random simple hypergraph with exactly n-1 edges (may not be a hypertree)."""
    if n == 1:
        return Hypergraph(1, ())
    universe = []
    for size in range(2, n + 1):
        universe.extend(itertools.combinations(range(n), size))
    picked = rng.sample(range(len(universe)), n - 1)
    return Hypergraph(n, tuple(universe[i] for i in sorted(picked)))


def random_coloured_graph(rng: random.Random, n_max: int = 8, c_max: int = 12) -> ColouredGraph:
    """Random edge-coloured simple graph with dense colour ids."""
    n = rng.randint(1, n_max)
    pairs = list(itertools.combinations(range(n), 2))
    edges = []
    seen = set()
    for u, v in pairs:
        for _ in range(rng.randint(0, 2)):
            c = rng.randrange(c_max)
            if (u, v, c) not in seen:
                seen.add((u, v, c))
                edges.append((u, v, c))
    used = sorted({c for _, _, c in edges})
    remap = {c: i for i, c in enumerate(used)}
    return ColouredGraph(n, tuple((u, v, remap[c]) for u, v, c in edges))
