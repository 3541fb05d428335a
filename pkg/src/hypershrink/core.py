"""Hypergraph data model: validation, degree queries, and file formats.

Vertices are dense integers ``0..n-1``.  Hyperedges are tuples of vertex
ids, stored strictly sorted; the position of a hyperedge in the edge list
is its stable identity (used as the colour id downstream).  All values are
immutable after construction and safe to share between threads.
"""

import json
from dataclasses import dataclass
from typing import Iterable


class FormatError(ValueError):
    """Raised when a hypergraph file cannot be parsed."""


class LimitExceededError(RuntimeError):
    """Raised when an exhaustive routine would exceed its safety limit."""


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on vertices ``0..n-1`` with an ordered list of hyperedges.

    The constructor normalises edges to tuples but does not enforce the
    simplicity invariants; use :func:`validate` to obtain a violation
    report.  All query methods assume a valid hypergraph.
    """

    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        object.__setattr__(
            self, "edges", tuple(tuple(int(v) for v in e) for e in self.edges)
        )

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Number of hyperedges containing vertex ``v``."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list:
        """Degree of every vertex, indexed by vertex id."""
        d = [0] * self.n
        for e in self.edges:
            for v in e:
                d[v] += 1
        return d

    def rank(self) -> int:
        """Maximum hyperedge size; 0 for an edgeless hypergraph."""
        return max((len(e) for e in self.edges), default=0)

    def incident_edge_count(self, vertices: Iterable[int]) -> int:
        """Number of hyperedges meeting the given vertex set (e*(F))."""
        fset = set(vertices)
        return sum(1 for e in self.edges if not fset.isdisjoint(e))


@dataclass(frozen=True)
class DirectedHypergraph:
    """A hypergraph whose every hyperedge carries a designated head vertex.

    ``heads[i]`` is the head of ``base.edges[i]``; the remaining vertices
    of the hyperedge are its tails.
    """

    base: Hypergraph
    heads: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "heads", tuple(int(h) for h in self.heads))
        if len(self.heads) != len(self.base.edges):
            raise ValueError("one head per hyperedge required")
        for i, (e, h) in enumerate(zip(self.base.edges, self.heads)):
            if h not in e:
                raise ValueError(f"head {h} not a member of hyperedge {i}")

    def indegree(self, v: int) -> int:
        """Number of hyperarcs whose head is ``v``."""
        return sum(1 for h in self.heads if h == v)

    def outdegree(self, v: int) -> int:
        """Number of hyperarcs in which ``v`` is a tail."""
        return sum(
            1 for e, h in zip(self.base.edges, self.heads) if v != h and v in e
        )

    def indegrees(self) -> list:
        d = [0] * self.base.n
        for h in self.heads:
            d[h] += 1
        return d

    def tails(self, i: int) -> tuple:
        """Tail vertices of hyperarc ``i`` in ascending order."""
        h = self.heads[i]
        return tuple(v for v in self.base.edges[i] if v != h)


@dataclass(frozen=True)
class DemandFunction:
    """Per-vertex non-negative integer demands."""

    values: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if any(x < 0 for x in self.values):
            raise ValueError("demands must be non-negative")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def total(self) -> int:
        return sum(self.values)

    def sum_over(self, vertices: Iterable[int]) -> int:
        """f(F): the sum of demands over a vertex set."""
        return sum(self.values[v] for v in vertices)


@dataclass(frozen=True)
class Violation:
    """One problem found by :func:`validate`."""

    kind: str  # "loop" | "duplicate" | "vertex-range" | "unsorted"
    edge_index: int
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at edge {self.edge_index}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __iter__(self):
        return iter(self.violations)

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def validate(hypergraph: Hypergraph) -> ValidationReport:
    """Check the simplicity invariants, returning violations as data.

    Reported kinds: ``loop`` (fewer than two distinct vertices),
    ``duplicate`` (an earlier hyperedge has the same vertex set),
    ``vertex-range`` (id outside ``[0, n)``) and ``unsorted`` (edge not
    strictly increasing).  The report is empty exactly when the input is
    a valid simple hypergraph.
    """
    problems = []
    seen = {}
    for i, e in enumerate(hypergraph.edges):
        distinct = frozenset(e)
        if len(distinct) < 2:
            problems.append(Violation("loop", i, f"edge {list(e)} has size {len(distinct)}"))
        if any(v < 0 or v >= hypergraph.n for v in e):
            problems.append(
                Violation("vertex-range", i, f"edge {list(e)} leaves [0, {hypergraph.n})")
            )
        if tuple(e) != tuple(sorted(distinct)):
            problems.append(Violation("unsorted", i, f"edge {list(e)} is not strictly sorted"))
        if distinct in seen:
            problems.append(
                Violation("duplicate", i, f"edge {list(e)} repeats edge {seen[distinct]}")
            )
        else:
            seen[distinct] = i
    return ValidationReport(tuple(problems))


# ---------------------------------------------------------------------------
# File formats.  JSON: {"n": <int>, "edges": [[v, ...], ...]}.
# Text: first line "n m", then m lines of space-separated vertex ids.
# Parsers sort each edge; semantic checks are left to validate().
# ---------------------------------------------------------------------------


def hypergraph_to_json(hypergraph: Hypergraph) -> str:
    return json.dumps(
        {"n": hypergraph.n, "edges": [list(e) for e in hypergraph.edges]}
    )


def hypergraph_from_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise FormatError('expected an object with "n" and "edges"')
    n, edges = data["n"], data["edges"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise FormatError('"n" must be an integer')
    if not isinstance(edges, list):
        raise FormatError('"edges" must be a list')
    parsed = []
    for i, e in enumerate(edges):
        if not isinstance(e, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in e
        ):
            raise FormatError(f"edge {i} must be a list of integers")
        parsed.append(tuple(sorted(e)))
    return Hypergraph(n, tuple(parsed))


def hypergraph_to_text(hypergraph: Hypergraph) -> str:
    lines = [f"{hypergraph.n} {hypergraph.num_edges}"]
    lines.extend(" ".join(str(v) for v in e) for e in hypergraph.edges)
    return "\n".join(lines) + "\n"


def hypergraph_from_text(text: str) -> Hypergraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError('first line must be "n m"')
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"bad header: {exc}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for i, ln in enumerate(lines[1:]):
        try:
            edges.append(tuple(sorted(int(tok) for tok in ln.split())))
        except ValueError as exc:
            raise FormatError(f"edge line {i}: {exc}") from exc
    return Hypergraph(n, tuple(edges))


def demands_from_json(text: str, n: int) -> DemandFunction:
    """Parse a demand file: a JSON array of n non-negative integers."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in data
    ):
        raise FormatError("expected a JSON array of integers")
    if len(data) != n:
        raise FormatError(f"expected {n} demand entries, found {len(data)}")
    if any(x < 0 for x in data):
        raise FormatError("demands must be non-negative")
    return DemandFunction(tuple(data))
