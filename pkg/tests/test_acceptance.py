"""End-to-end acceptance checklist.

One test per criterion; each prints a single [ACCEPTANCE] line naming the
criterion and its verdict before asserting.  Run with

    pytest tests/test_acceptance.py -v -s

to see the checklist as it executes.
"""

import json
import random
import subprocess
import sys
import time

import pytest

from hypershrink import (
    DemandFunction,
    Hypergraph,
    NotAHypertreeError,
    adversarial_star,
    brute_force_shrink,
    check_rainbow_condition,
    hypergraph_to_json,
    is_hypertree,
    is_hypertree_bruteforce,
    orient_floor,
    orient_with_demands,
    rainbow_spanning_tree,
    random_hypertree,
    shrink_hypertree,
    shrinking_to_json,
    verify_shrinking,
)
from helpers import (
    H1,
    NESTED4,
    PATH3,
    SINGLE_BIG3,
    STAR7,
    TRIANGLE3,
    TRIANGLE4,
    component_count,
    random_coloured_graph,
    random_tree_count_hypergraph,
    random_valid_hypergraph,
)

CORPUS_SIZE = 1000
EXPANSIONS = (0.0, 0.3, 0.7, 1.0)


def _report(number: int, name: str, ok: bool):
    verdict = "PASS" if ok else "FAIL"
    print(f"[ACCEPTANCE] criterion {number} ({name}): {verdict}")
    assert ok, f"criterion {number} ({name}) failed"


@pytest.fixture(scope="module")
def corpus():
    """>= 1000 hypertrees, n <= 200, generation rank caps 2..6, mixed p."""
    instances = []
    for i in range(CORPUS_SIZE):
        if i % 5 == 0:
            n = 121 + (17 * (i // 5)) % 80
        else:
            n = 2 + (37 * i) % 119
        k = 2 + i % 5
        p = EXPANSIONS[i % 4]
        hypergraph, _ = random_hypertree(n, k, 20_000 + i, p)
        instances.append((hypergraph, k))
    return instances


@pytest.fixture(scope="module")
def shrunk(corpus):
    results = []
    for hypergraph, k_cap in corpus:
        shrinking = shrink_hypertree(hypergraph)
        results.append((hypergraph, k_cap, shrinking))
    return results


@pytest.fixture(scope="module")
def small_corpus():
    """>= 2000 random n <= 6 hypergraphs with n-1 edges, plus hand-built ones."""
    rng = random.Random(70_000)
    instances = [
        H1,
        PATH3,
        TRIANGLE3,
        TRIANGLE4,
        NESTED4,
        SINGLE_BIG3,
        STAR7,
        adversarial_star(1, 2),
        adversarial_star(3, 3),
        Hypergraph(1, ()),
        Hypergraph(2, ((0, 1),)),
        Hypergraph(4, ((0, 1), (0, 1, 2), (0, 1, 3))),
    ]
    instances.extend(
        random_hypertree(rng.randint(2, 6), rng.randint(2, 4), seed, 0.8)[0]
        for seed in range(50)
    )
    while len(instances) < 2050:
        instances.append(random_tree_count_hypergraph(rng, rng.randint(1, 6)))
    return instances


def test_criterion_1_floor_degree_bound(shrunk):
    ok = True
    for hypergraph, k_cap, shrinking in shrunk:
        rank = hypergraph.rank()
        report = verify_shrinking(hypergraph, shrinking)
        if not report["degree-floor-bound"].passed:
            ok = False
        tree_deg = shrinking.tree_degrees(hypergraph.n)
        for t, d in zip(tree_deg, hypergraph.degrees()):
            if t < max(1, d // rank) or t < max(1, d // k_cap):
                ok = False
    _report(1, "floor degree bound on generated hypertrees", ok)


def test_criterion_2_halving_corollary(shrunk):
    ok = True
    for hypergraph, k_cap, shrinking in shrunk:
        rank = hypergraph.rank()
        report = verify_shrinking(hypergraph, shrinking)
        if not report["halving-corollary"].passed:
            ok = False
        tree_deg = shrinking.tree_degrees(hypergraph.n)
        for t, d in zip(tree_deg, hypergraph.degrees()):
            if 2 * rank * t < d or 2 * k_cap * t < d:
                ok = False
    _report(2, "degree at least d/(2k)", ok)


def test_criterion_3_rank3_hundredth_bound(shrunk):
    rank3 = [
        (hypergraph, shrinking)
        for hypergraph, _, shrinking in shrunk
        if hypergraph.rank() == 3
    ]
    ok = len(rank3) >= 50
    for hypergraph, shrinking in rank3:
        tree_deg = shrinking.tree_degrees(hypergraph.n)
        for t, d in zip(tree_deg, hypergraph.degrees()):
            if 100 * t < d:
                ok = False
        if not verify_shrinking(hypergraph, shrinking)["hundredth-bound"].passed:
            ok = False
    _report(3, f"rank-3 sub-corpus ({len(rank3)} instances) d/100 bound", ok)


def test_criterion_4_floor_orientation_everywhere():
    rng = random.Random(44)
    ok = True
    for _ in range(1000):
        hypergraph = random_valid_hypergraph(rng, n_max=14, m_max=28)
        rank = hypergraph.rank()
        directed = orient_floor(hypergraph)
        indegrees = directed.indegrees()
        for v, d in enumerate(hypergraph.degrees()):
            if indegrees[v] < d // rank:
                ok = False
    _report(4, "floor orientation on random hypergraphs", ok)


def test_criterion_5_demand_dichotomy():
    rng = random.Random(55)
    oriented_seen = violator_seen = 0
    ok = True
    for _ in range(1000):
        hypergraph = random_valid_hypergraph(rng, n_max=10, m_max=16)
        demands = DemandFunction(
            tuple(rng.choice((0, 0, 1, 1, 2, 3)) for _ in range(hypergraph.n))
        )
        result = orient_with_demands(hypergraph, demands)
        if result.is_oriented:
            oriented_seen += 1
            indegrees = result.oriented.indegrees()
            if any(indegrees[v] < demands[v] for v in range(hypergraph.n)):
                ok = False
        else:
            violator_seen += 1
            F = result.violator
            if demands.sum_over(F) <= hypergraph.incident_edge_count(F):
                ok = False
    ok = ok and oriented_seen > 0 and violator_seen > 0
    _report(
        5,
        f"demand orientation dichotomy ({oriented_seen} oriented, "
        f"{violator_seen} violators)",
        ok,
    )


def test_criterion_6_rainbow_equivalence():
    rng = random.Random(66)
    started = time.monotonic()
    ok = True
    for _ in range(500):
        graph = random_coloured_graph(rng, n_max=8, c_max=12)
        tree = rainbow_spanning_tree(graph)
        violator = check_rainbow_condition(graph)
        if (tree is None) != (violator is not None):
            ok = False
        if violator is not None:
            kept = [(u, v) for u, v, c in graph.edges if c not in violator]
            if component_count(graph.n, kept) <= len(violator) + 1:
                ok = False
    elapsed = time.monotonic() - started
    ok = ok and elapsed < 60
    _report(6, f"rainbow finder vs condition checker ({elapsed:.1f}s)", ok)


def test_criterion_7_recognizer_agreement(small_corpus):
    ok = True
    for hypergraph in small_corpus:
        if bool(is_hypertree_bruteforce(hypergraph)) != is_hypertree(hypergraph):
            ok = False
    expected = [
        (H1, True),
        (TRIANGLE3, False),
        (TRIANGLE4, False),
        (NESTED4, True),
        (SINGLE_BIG3, False),
        (adversarial_star(3, 3), True),
    ]
    for hypergraph, want in expected:
        if is_hypertree(hypergraph) is not want:
            ok = False
    _report(7, f"recognizer agreement on {len(small_corpus)} instances", ok)


def test_criterion_8_shrink_oracle_agreement(small_corpus):
    ok = True
    succeeded = failed = 0
    for hypergraph in small_corpus:
        choices = 1
        for e in hypergraph.edges:
            choices *= len(e) * (len(e) - 1) // 2
        if choices > 10**6:
            continue
        oracle = brute_force_shrink(hypergraph)
        try:
            shrink_hypertree(hypergraph)
            fast = True
        except NotAHypertreeError:
            fast = False
        if fast != (oracle is not None):
            ok = False
        if fast:
            succeeded += 1
        else:
            failed += 1
    ok = ok and succeeded > 0 and failed > 0
    _report(
        8,
        f"shrink vs exhaustive oracle ({succeeded} shrinkable, {failed} not)",
        ok,
    )


def test_criterion_9_hub_tightness():
    star = adversarial_star(100, 3)
    shrinking = shrink_hypertree(star)
    hub_degree = shrinking.tree_degrees(star.n)[0]
    _report(9, f"hub keeps degree {hub_degree} >= 33", hub_degree >= 33)


def _run_cli(args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "hypershrink.cli", *args],
        capture_output=True,
        cwd=cwd,
    )


def test_criterion_10_determinism(tmp_path, corpus):
    ok = True
    # library level: same inputs, byte-identical serializations
    for hypergraph, _ in corpus[:60]:
        first = shrinking_to_json(hypergraph, shrink_hypertree(hypergraph))
        second = shrinking_to_json(hypergraph, shrink_hypertree(hypergraph))
        if first != second:
            ok = False
        if orient_floor(hypergraph) != orient_floor(hypergraph):
            ok = False
    for seed in range(40):
        a = hypergraph_to_json(random_hypertree(25, 4, seed, 0.5)[0])
        b = hypergraph_to_json(random_hypertree(25, 4, seed, 0.5)[0])
        if a != b:
            ok = False

    # command level: rerun every subcommand, compare stdout and stderr bytes
    h1 = tmp_path / "h1.json"
    h1.write_text(hypergraph_to_json(H1))
    triangle = tmp_path / "triangle.json"
    triangle.write_text(hypergraph_to_json(TRIANGLE4))
    feasible = tmp_path / "feasible.json"
    feasible.write_text("[0, 0, 1, 0]")
    infeasible = tmp_path / "infeasible.json"
    infeasible.write_text("[1, 1, 1, 1]")
    commands = [
        ["validate", str(h1)],
        ["validate", str(triangle)],
        ["check", str(h1)],
        ["check", "--oracle", str(h1)],
        ["check", str(triangle)],
        ["shrink", str(h1)],
        ["shrink", "--out", "dot", str(h1)],
        ["shrink", "--k", "4", str(h1)],
        ["shrink", str(triangle)],
        ["orient", str(h1)],
        ["orient", str(h1), "--demands", str(feasible)],
        ["orient", str(h1), "--demands", str(infeasible)],
        ["gen", "--n", "40", "--k", "5", "--seed", "7", "--p", "0.6"],
        ["gen", "--n", "2", "--k", "2", "--seed", "0", "--p", "0"],
        ["bench", "--trials", "5", "--n", "30", "--k", "3", "--seed", "3"],
    ]
    for args in commands:
        first = _run_cli(args, tmp_path)
        second = _run_cli(args, tmp_path)
        if (
            first.stdout != second.stdout
            or first.stderr != second.stderr
            or first.returncode != second.returncode
        ):
            ok = False

    # gen --witness: the written file must also be byte-stable
    witness_a = tmp_path / "wa.json"
    witness_b = tmp_path / "wb.json"
    _run_cli(["gen", "--n", "12", "--k", "4", "--seed", "3",
              "--witness", str(witness_a)], tmp_path)
    _run_cli(["gen", "--n", "12", "--k", "4", "--seed", "3",
              "--witness", str(witness_b)], tmp_path)
    if witness_a.read_bytes() != witness_b.read_bytes():
        ok = False
    _report(10, "byte-identical reruns for operations and commands", ok)
