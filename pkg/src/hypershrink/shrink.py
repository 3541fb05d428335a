"""Shrinking hypertrees to spanning trees with a degree guarantee.

Replacing each hyperedge by one pair of its vertices is a *shrinking*;
for a hypertree of rank k the pipeline here produces a spanning tree T
with d_T(v) >= max(1, floor(d_H(v)/k)) at every vertex: orient the
hypergraph so indegrees dominate floor(d_H/k), expand every hyperarc to a
star centred at its head, extract a rainbow spanning tree, and read the
hyperedge-to-tree-edge bijection off the colours.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .core import Hypergraph, LimitExceededError
from .orientation import orient_floor
from .rainbow import PALETTE, UnionFind, rainbow_spanning_tree, star_graph


class NotAHypertreeError(Exception):
    """The input admits no shrinking to a spanning tree.

    ``reason`` records which check failed: "edge-count" when |E| != n-1,
    "no-rainbow-tree" when the star expansion has no rainbow spanning tree.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Shrinking:
    """A spanning tree plus the bijection hyperedge -> tree edge.

    ``tree`` lists the n-1 edges in lexicographic order; ``assignment[i]``
    is the index of the tree edge chosen from hyperedge i.  The
    constructor only normalises shapes; use :func:`verify_shrinking` for
    the invariants, so that defective candidates can be inspected.
    """

    tree: tuple = ()
    assignment: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "tree", tuple((int(u), int(v)) for u, v in self.tree)
        )
        object.__setattr__(self, "assignment", tuple(int(i) for i in self.assignment))

    @classmethod
    def from_pairs(cls, pairs) -> "Shrinking":
        """Build from one chosen pair per hyperedge (pairs must be distinct)."""
        normalised = [(min(u, v), max(u, v)) for u, v in pairs]
        tree = tuple(sorted(normalised))
        if len(set(tree)) != len(tree):
            raise ValueError("chosen pairs are not distinct")
        index = {pair: j for j, pair in enumerate(tree)}
        return cls(tree, tuple(index[p] for p in normalised))

    def pair_for(self, i: int) -> tuple:
        """The tree edge assigned to hyperedge i."""
        return self.tree[self.assignment[i]]

    def tree_degrees(self, n: int) -> list:
        d = [0] * n
        for u, v in self.tree:
            if 0 <= u < n:
                d[u] += 1
            if 0 <= v < n:
                d[v] += 1
        return d


def shrink_hypertree(hypergraph: Hypergraph, k: int = None) -> Shrinking:
    """Shrink a hypertree to a spanning tree meeting the degree bound.

    ``k`` defaults to the rank; a larger k weakens the bound but is
    accepted for experiments.  Raises :class:`NotAHypertreeError` when the
    input is not a hypertree; the check is lazy (|E| != n-1 up front, a
    missing rainbow tree otherwise), no separate recognition pass is run.
    """
    n, m = hypergraph.n, hypergraph.num_edges
    if m != n - 1:
        raise NotAHypertreeError(
            "edge-count", f"a hypertree on {n} vertices has {n - 1} hyperedges, got {m}"
        )
    if n == 1:
        return Shrinking((), ())
    oriented = orient_floor(hypergraph, k)
    tree = rainbow_spanning_tree(star_graph(oriented))
    if tree is None:
        raise NotAHypertreeError(
            "no-rainbow-tree", "the star expansion has no rainbow spanning tree"
        )
    # n-1 pairwise-distinct colours on n-1 edges: every hyperedge occurs once
    pair_of_colour = {c: (u, v) for u, v, c in tree.edges}
    return Shrinking.from_pairs(pair_of_colour[i] for i in range(m))


@dataclass(frozen=True)
class VerificationCheck:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.name}: {status}" + (f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple = ()

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.all_passed

    def __iter__(self):
        return iter(self.checks)

    def __getitem__(self, name: str) -> VerificationCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.checks)


def verify_shrinking(hypergraph: Hypergraph, shrinking: Shrinking, k: int = None) -> VerificationReport:
    """Re-check every promise of a shrinking, reporting per-item pass/fail.

    Checks the tree shape, the pair-containment and bijection structure,
    the per-vertex bound d_T(v) >= max(1, floor(d_H(v)/k)), its halved
    consequence d_T(v) >= d_H(v)/(2k), and for rank-3 inputs the weaker
    d_T(v) >= d_H(v)/100.
    """
    n, m = hypergraph.n, hypergraph.num_edges
    if k is None:
        k = max(hypergraph.rank(), 1)
    checks = []

    tree = shrinking.tree
    tree_ok = len(tree) == n - 1
    detail = "" if tree_ok else f"{len(tree)} edges for {n} vertices"
    if tree_ok:
        uf = UnionFind(n)
        for u, v in tree:
            if not (0 <= u < n and 0 <= v < n and u != v):
                tree_ok, detail = False, f"bad edge ({u}, {v})"
                break
            if not uf.union(u, v):
                tree_ok, detail = False, f"cycle closed by ({u}, {v})"
                break
    checks.append(VerificationCheck("spanning-tree", tree_ok, detail))

    bad = [
        i
        for i in range(min(m, len(shrinking.assignment)))
        if not (0 <= shrinking.assignment[i] < len(tree))
        or not set(shrinking.pair_for(i)) <= set(hypergraph.edges[i])
    ]
    checks.append(
        VerificationCheck(
            "containment",
            not bad and len(shrinking.assignment) == m,
            "" if not bad else f"hyperedges {bad} do not contain their tree edge",
        )
    )

    bijective = len(shrinking.assignment) == m and sorted(
        shrinking.assignment
    ) == list(range(len(tree)))
    checks.append(VerificationCheck("bijection", bijective))

    hyper_deg = hypergraph.degrees()
    tree_deg = shrinking.tree_degrees(n)
    if n == 1:
        checks.append(VerificationCheck("degree-floor-bound", True, "single vertex"))
        checks.append(VerificationCheck("halving-corollary", True, "single vertex"))
    else:
        low = [
            v
            for v in range(n)
            if tree_deg[v] < max(1, hyper_deg[v] // k)
        ]
        checks.append(
            VerificationCheck(
                "degree-floor-bound",
                not low,
                "" if not low else f"vertices {low} fall below max(1, floor(d/{k}))",
            )
        )
        low2 = [v for v in range(n) if 2 * k * tree_deg[v] < hyper_deg[v]]
        checks.append(
            VerificationCheck(
                "halving-corollary",
                not low2,
                "" if not low2 else f"vertices {low2} fall below d/(2*{k})",
            )
        )
    if hypergraph.rank() == 3:
        low3 = [v for v in range(n) if 100 * tree_deg[v] < hyper_deg[v]]
        checks.append(
            VerificationCheck(
                "hundredth-bound",
                not low3,
                "" if not low3 else f"vertices {low3} fall below d/100",
            )
        )
    return VerificationReport(tuple(checks))


def brute_force_shrink(hypergraph: Hypergraph, limit: int = 10**6):
    """Exhaustive shrinking oracle.

    Enumerates every choice of one pair per hyperedge (lexicographically)
    and returns, among the choices forming a spanning tree, the first one
    maximising min_v d_T(v) / max(1, d_H(v)); returns None when no choice
    spans, which certifies the input is not a hypertree.  Refuses when the
    choice space exceeds ``limit``.
    """
    n, m = hypergraph.n, hypergraph.num_edges
    if m != n - 1:
        return None
    choice_lists = [list(combinations(e, 2)) for e in hypergraph.edges]
    total = 1
    for options in choice_lists:
        total *= len(options)
        if total > limit:
            raise LimitExceededError(
                f"choice space exceeds the enumeration limit {limit}"
            )
    hyper_deg = hypergraph.degrees()
    best = None
    best_score = None
    for pairs in product(*choice_lists):
        if len(set(pairs)) != m:
            continue
        uf = UnionFind(n)
        if not all(uf.union(u, v) for u, v in pairs):
            continue
        if uf.components != 1:
            continue
        tree_deg = [0] * n
        for u, v in pairs:
            tree_deg[u] += 1
            tree_deg[v] += 1
        score = min(
            (Fraction(tree_deg[v], max(1, hyper_deg[v])) for v in range(n)),
            default=Fraction(1),
        )
        if best_score is None or score > best_score:
            best, best_score = pairs, score
    if best is None:
        return None
    return Shrinking.from_pairs(best)


def shrinking_to_json(hypergraph: Hypergraph, shrinking: Shrinking, k: int = None) -> str:
    """Serialise a shrinking with its degree data and per-vertex bound."""
    if k is None:
        k = max(hypergraph.rank(), 1)
    hyper_deg = hypergraph.degrees()
    return json.dumps(
        {
            "tree": [list(e) for e in shrinking.tree],
            "assignment": list(shrinking.assignment),
            "degrees": {
                "hyper": hyper_deg,
                "tree": shrinking.tree_degrees(hypergraph.n),
            },
            "bound": [max(1, d // k) for d in hyper_deg]
            if hypergraph.n > 1
            else [0] * hypergraph.n,
        }
    )


def shrinking_to_dot(hypergraph: Hypergraph, shrinking: Shrinking) -> str:
    """Overlay the tree (bold, coloured by hyperedge) on the clique
    expansion (gray) for visual inspection."""
    lines = ["graph shrinking {"]
    lines.extend(f"  {v};" for v in range(hypergraph.n))
    chosen = {
        (shrinking.pair_for(i), i)
        for i in range(min(hypergraph.num_edges, len(shrinking.assignment)))
    }
    for i, e in enumerate(hypergraph.edges):
        for a, b in combinations(e, 2):
            if ((a, b), i) in chosen:
                paint = PALETTE[i % len(PALETTE)]
                lines.append(
                    f'  {a} -- {b} [label="{i}", color="{paint}", penwidth=2];'
                )
            else:
                lines.append(f'  {a} -- {b} [color="gray", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
