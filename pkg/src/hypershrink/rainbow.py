"""Edge-coloured graphs and rainbow spanning trees.

A rainbow spanning tree uses every colour at most once.  The finder runs
matroid intersection specialised to the graphic matroid (forests) crossed
with the partition matroid (one edge per colour): grow a greedy rainbow
forest, then augment along shortest alternating paths in the exchange
graph until the forest spans or no path remains.  An exhaustive checker
for the component-count characterisation doubles as the test oracle.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .core import DirectedHypergraph, Hypergraph, LimitExceededError


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True


@dataclass(frozen=True)
class ColouredGraph:
    """Simple graph with colour ids on its edges.

    Edges are ``(u, v, colour)`` triples with ``u < v``; parallel edges
    must differ in colour and colour ids are dense ``0..c-1``.
    """

    n: int
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(u), int(v), int(c)) for u, v, c in self.edges)
        )
        colours = set()
        seen = set()
        for u, v, c in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad endpoints ({u}, {v}) for n={self.n}")
            if c < 0:
                raise ValueError("colour ids must be non-negative")
            if (u, v, c) in seen:
                raise ValueError(f"repeated edge ({u}, {v}) with colour {c}")
            seen.add((u, v, c))
            colours.add(c)
        if colours and colours != set(range(max(colours) + 1)):
            raise ValueError("colour ids must be dense 0..c-1")

    @property
    def num_colours(self) -> int:
        return max((c for _, _, c in self.edges), default=-1) + 1


@dataclass(frozen=True)
class RainbowTree:
    """A spanning tree whose edges carry pairwise-distinct colours."""

    n: int
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(u), int(v), int(c)) for u, v, c in self.edges)
        )
        if len(self.edges) != self.n - 1:
            raise ValueError(f"{len(self.edges)} edges cannot span {self.n} vertices")
        uf = UnionFind(self.n)
        for u, v, _ in self.edges:
            if not uf.union(u, v):
                raise ValueError("edges contain a cycle")
        colours = [c for _, _, c in self.edges]
        if len(set(colours)) != len(colours):
            raise ValueError("colours are not pairwise distinct")

    def colour_of_edge(self) -> dict:
        """Map (u, v) -> colour."""
        return {(u, v): c for u, v, c in self.edges}


def star_graph(directed: DirectedHypergraph) -> ColouredGraph:
    """One star per hyperarc: centre at the head, leaves at the tails.

    All edges of the star for hyperarc i get colour i, so the output has
    sum(|e| - 1) edges and one colour per hyperarc.
    """
    edges = []
    for i, (e, h) in enumerate(zip(directed.base.edges, directed.heads)):
        for t in e:
            if t != h:
                edges.append((min(h, t), max(h, t), i))
    return ColouredGraph(directed.base.n, tuple(edges))


def clique_graph(hypergraph: Hypergraph) -> ColouredGraph:
    """One complete graph per hyperedge, all its pairs coloured by the
    hyperedge index."""
    edges = []
    for i, e in enumerate(hypergraph.edges):
        for a, b in combinations(e, 2):
            edges.append((a, b, i))
    return ColouredGraph(hypergraph.n, tuple(edges))


def _greedy_rainbow_forest(graph: ColouredGraph) -> list:
    """Seed forest: scan edges in (colour, endpoint) order, keeping an edge
    iff it joins two components and its colour is unused."""
    order = sorted(range(len(graph.edges)), key=lambda i: (graph.edges[i][2],) + graph.edges[i][:2])
    uf = UnionFind(graph.n)
    used_colour = [False] * graph.num_colours
    chosen = []
    for i in order:
        u, v, c = graph.edges[i]
        if used_colour[c]:
            continue
        if uf.union(u, v):
            used_colour[c] = True
            chosen.append(i)
    return chosen


def _augment(graph: ColouredGraph, in_forest: list) -> bool:
    """One exchange-graph augmentation step; True if the forest grew.

    Sources are the edges that would join two components, sinks the edges
    of an unused colour.  Arcs swap one forest edge for one non-forest
    edge keeping one matroid independent; a BFS-shortest source-sink path
    keeps both.  Exploration order is fixed by ascending edge index.
    """
    edges = graph.edges
    m = len(edges)
    members = [i for i in range(m) if in_forest[i]]

    uf = UnionFind(graph.n)
    for i in members:
        uf.union(edges[i][0], edges[i][1])
    used_colour = [False] * graph.num_colours
    colour_owner = [-1] * graph.num_colours
    for i in members:
        used_colour[edges[i][2]] = True
        colour_owner[edges[i][2]] = i

    sources = [
        i for i in range(m)
        if not in_forest[i] and uf.find(edges[i][0]) != uf.find(edges[i][1])
    ]
    if not sources:
        return False

    # root each forest component to answer path queries parent-by-parent
    neighbours = [[] for _ in range(graph.n)]
    for i in members:
        u, v, _ = edges[i]
        neighbours[u].append((v, i))
        neighbours[v].append((u, i))
    parent = [-1] * graph.n
    parent_edge = [-1] * graph.n
    depth = [0] * graph.n
    visited_vertex = [False] * graph.n
    for root in range(graph.n):
        if visited_vertex[root]:
            continue
        visited_vertex[root] = True
        stack = [root]
        while stack:
            x = stack.pop()
            for y, i in neighbours[x]:
                if not visited_vertex[y]:
                    visited_vertex[y] = True
                    parent[y] = x
                    parent_edge[y] = i
                    depth[y] = depth[x] + 1
                    stack.append(y)

    def cycle_edges(u: int, v: int) -> list:
        path = []
        while depth[u] > depth[v]:
            path.append(parent_edge[u])
            u = parent[u]
        while depth[v] > depth[u]:
            path.append(parent_edge[v])
            v = parent[v]
        while u != v:
            path.append(parent_edge[u])
            path.append(parent_edge[v])
            u, v = parent[u], parent[v]
        return path

    # bucket[y]: non-forest edges whose forest cycle passes through y
    bucket = [[] for _ in range(m)]
    for i in range(m):
        if in_forest[i]:
            continue
        u, v, _ = edges[i]
        if uf.find(u) == uf.find(v):
            for y in cycle_edges(u, v):
                bucket[y].append(i)

    parent_arc = [-1] * m
    seen = [False] * m
    queue = deque()
    for i in sources:
        seen[i] = True
        parent_arc[i] = i
        queue.append(i)
    sink = -1
    while queue:
        i = queue.popleft()
        if not in_forest[i]:
            if not used_colour[edges[i][2]]:
                sink = i
                break
            j = colour_owner[edges[i][2]]
            if not seen[j]:
                seen[j] = True
                parent_arc[j] = i
                queue.append(j)
        else:
            for j in bucket[i]:
                if not seen[j]:
                    seen[j] = True
                    parent_arc[j] = i
                    queue.append(j)
    if sink == -1:
        return False
    i = sink
    while True:
        in_forest[i] = not in_forest[i]
        if parent_arc[i] == i:
            break
        i = parent_arc[i]
    return True


def maximum_rainbow_forest(graph: ColouredGraph) -> tuple:
    """Indices of a maximum forest with pairwise distinct edge colours.

    A maximum common independent set of the graphic matroid and the
    colour partition matroid: greedy seed, then exchange-graph
    augmentation until no augmenting path remains.
    """
    in_forest = [False] * len(graph.edges)
    for i in _greedy_rainbow_forest(graph):
        in_forest[i] = True
    while _augment(graph, in_forest):
        pass
    return tuple(i for i, used in enumerate(in_forest) if used)


def rainbow_spanning_tree(graph: ColouredGraph):
    """A rainbow spanning tree of ``graph``, or None if there is none.

    Returns a :class:`RainbowTree` whose edge list is sorted by endpoints.
    Absence is a legitimate outcome (the recognizer relies on it), hence a
    value rather than an exception.
    """
    if graph.n < 1:
        raise ValueError("graph must have at least one vertex")
    forest = maximum_rainbow_forest(graph)
    if len(forest) < graph.n - 1:
        return None
    return RainbowTree(graph.n, tuple(sorted(graph.edges[i] for i in forest)))


def check_rainbow_condition(graph: ColouredGraph, limit: int = 20):
    """Exhaustively test the component-count condition for rainbow trees.

    For every colour set R with 0 <= |R| <= n-2 (the r=0 case is plain
    connectivity), deleting the edges coloured by R must leave at most
    |R|+1 components.  Returns the first offending R, scanning sizes in
    ascending order and subsets lexicographically, or None when satisfied.
    Larger subsets never need checking.  Guarded against exponential
    blow-up: more than ``limit`` colours is refused.
    """
    c = graph.num_colours
    if c > limit:
        raise LimitExceededError(
            f"{c} colours exceed the exhaustive limit {limit} (2^{c} subsets)"
        )
    for r in range(0, min(c, graph.n - 2) + 1):
        for subset in combinations(range(c), r):
            dropped = set(subset)
            uf = UnionFind(graph.n)
            for u, v, col in graph.edges:
                if col not in dropped:
                    uf.union(u, v)
            if uf.components > r + 1:
                return subset
    return None


# ---------------------------------------------------------------------------
# DOT export for visual inspection
# ---------------------------------------------------------------------------

PALETTE = (
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080",
    "#9a6324", "#800000", "#808000", "#000075", "#a9a9a9",
)


def _dot_edge(u: int, v: int, colour: int, extra: str = "") -> str:
    paint = PALETTE[colour % len(PALETTE)]
    return f'  {u} -- {v} [label="{colour}", color="{paint}"{extra}];'


def coloured_graph_to_dot(graph: ColouredGraph, name: str = "coloured") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(graph.n))
    lines.extend(_dot_edge(u, v, c) for u, v, c in graph.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def rainbow_tree_to_dot(tree: RainbowTree, name: str = "rainbow_tree") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(tree.n))
    lines.extend(_dot_edge(u, v, c, ", penwidth=2") for u, v, c in tree.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
