import gc
import math
import random
import time

import pytest

from kcover import (
    CoverSpec,
    DepthIndex,
    Graph,
    InputError,
    RootedTree,
    approx_tree_4,
    approx_tree_k,
    approx_tree_k_trace,
    extract_maximal_k_subforest,
    gen_random_tree,
    optimal_tree_31,
    p3_partition,
    spider_graph,
    validate_completion,
    worst_case_spider,
)

from helpers import path_graph, rooted, star_graph, valid_p3_partition


def test_rooted_tree_from_path():
    t = rooted(path_graph(5))
    assert t.root == 0
    assert t.parent == (0, 0, 1, 2, 3)
    assert t.depth == (0, 1, 2, 3, 4)
    kids = t.children()
    assert kids[0] == [1] and kids[3] == [4] and kids[4] == []


def test_rooted_tree_rejects_non_trees():
    with pytest.raises(InputError):
        RootedTree.from_graph(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(InputError):
        RootedTree.from_graph(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(InputError):
        RootedTree.from_graph(path_graph(3), root=5)


def test_depth_index_pops_deepest_bucket_with_highest_key():
    idx = DepthIndex([0, 1, 1, 2, 2], 2)
    for node, key in [(0, 0), (1, 5), (2, 7), (3, 1), (4, 2)]:
        idx.push(node, key)
    order = []
    while (got := idx.pop_deepest(lambda node, key: True)) is not None:
        order.append(got)
    assert order == [(4, 2), (3, 1), (2, 7), (1, 5), (0, 0)]


def test_depth_index_drops_stale_entries():
    idx = DepthIndex([0, 1, 1], 1)
    idx.push(1, 3)
    idx.push(2, 1)
    idx.push(1, 9)
    live = {(1, 9), (2, 1)}
    assert idx.pop_deepest(lambda node, key: (node, key) in live) == (1, 9)
    assert idx.pop_deepest(lambda node, key: (node, key) in live) == (2, 1)
    assert idx.pop_deepest(lambda node, key: True) is None


def test_p3_partition_examples():
    # P5 has exactly one valid pairing, so the output is forced.
    groups = p3_partition(rooted(path_graph(5)))
    assert {frozenset(grp) for grp in groups} == {
        frozenset({(0, 1), (1, 2)}),
        frozenset({(2, 3), (3, 4)}),
    }

    star = p3_partition(rooted(star_graph(4)))
    assert sorted(len(grp) for grp in star) == [1, 2]

    assert p3_partition(rooted(path_graph(3))) == [((0, 1), (1, 2))]


def test_p3_partition_rejects_tiny_trees():
    with pytest.raises(InputError):
        p3_partition(rooted(path_graph(2)))


def test_p3_partition_validity_random():
    for seed in range(80):
        n = 3 + seed % 38
        t = rooted(gen_random_tree(n, seed))
        groups = p3_partition(t)
        assert len(groups) == math.ceil((n - 1) / 2)
        assert sum(1 for grp in groups if len(grp) == 1) == (n - 1) % 2
        assert valid_p3_partition(t, groups)


def test_optimal_tree_31_examples():
    assert list(optimal_tree_31(rooted(path_graph(3)))) == [(0, 2)]

    p5 = optimal_tree_31(rooted(path_graph(5)))
    assert p5.as_set() == {(0, 2), (2, 4)}

    star = optimal_tree_31(rooted(star_graph(4)))
    assert star.as_set() == {(1, 2), (1, 3)}

    with pytest.raises(InputError):
        optimal_tree_31(rooted(path_graph(2)))


def test_optimal_tree_31_random_trees():
    spec = CoverSpec(3, 1)
    for seed in range(60):
        n = 3 + seed % 30
        g = gen_random_tree(n, seed)
        c = optimal_tree_31(rooted(g))
        assert len(c) == math.ceil((n - 1) / 2)
        assert validate_completion(g, c, spec).ok


def test_spider_graph_layout():
    g = spider_graph([2, 2])
    assert g.n == 5
    assert g.edge_list() == [(0, 1), (0, 3), (1, 2), (3, 4)]
    with pytest.raises(InputError):
        spider_graph([])
    with pytest.raises(InputError):
        spider_graph([2, 0])


def test_worst_case_spider_shapes():
    g15 = worst_case_spider(15)
    assert g15.n == 15 and g15.degree(0) == 7
    assert sorted(g15.degree(v) for v in range(15)).count(1) == 7

    g5 = worst_case_spider(5)
    assert g5.degree(0) == 2 and g5.m == 4

    g6 = worst_case_spider(6)  # two 2-edge legs plus one 1-edge leg
    assert g6.degree(0) == 3 and g6.m == 5
    assert sorted(g6.degree(v) for v in range(6)) == [1, 1, 1, 2, 2, 3]

    g4 = worst_case_spider(4)
    assert g4.degree(0) == 2

    with pytest.raises(InputError):
        worst_case_spider(3)


def _random_forest(seed: int) -> Graph:
    rng = random.Random(seed)
    sizes = [rng.randint(2, 6)] + [rng.randint(1, 6) for _ in range(rng.randint(0, 3))]
    edges: list[tuple[int, int]] = []
    base = 0
    for size in sizes:
        if size >= 2:
            tree = gen_random_tree(size, rng.randrange(10**6))
            edges.extend((u + base, v + base) for u, v in tree.edge_list())
        base += size
    return Graph(base, edges)


def test_extract_subforest_examples():
    cut = extract_maximal_k_subforest(Graph(2, [(0, 1)]), 4)
    assert cut.vertices == (0, 1) and cut.edges == ((0, 1),)

    # One component with >= 7 vertices: a 7-vertex subtree of it.
    big = Graph(11, [(i, i + 1) for i in range(8)] + [(9, 10)])
    cut = extract_maximal_k_subforest(big, 7)
    assert cut.vertices == (0, 1, 2, 3, 4, 5, 6) and len(cut.edges) == 6

    # Two components of 5 vertices each, k=7: whole first + 2 carved vertices.
    two = Graph(10, [(i, i + 1) for i in range(4)] + [(i, i + 1) for i in range(5, 9)])
    cut = extract_maximal_k_subforest(two, 7)
    assert cut.vertices == (0, 1, 2, 3, 4, 5, 6)
    assert set(cut.edges) == {(0, 1), (1, 2), (2, 3), (3, 4), (5, 6)}


def test_extract_subforest_rejects_bad_inputs():
    with pytest.raises(InputError):
        extract_maximal_k_subforest(Graph(3, []), 4)
    with pytest.raises(InputError):
        extract_maximal_k_subforest(Graph(3, [(0, 1), (1, 2), (0, 2)]), 4)
    with pytest.raises(InputError):
        extract_maximal_k_subforest(Graph(2, [(0, 1)]), 1)


def test_extract_subforest_maximality_random():
    for seed in range(60):
        f = _random_forest(seed)
        k = 2 + seed % 6
        cut = extract_maximal_k_subforest(f, k)
        verts = set(cut.vertices)
        assert len(verts) <= k
        assert set(cut.edges) <= f.edges
        touched = {v for e in cut.edges for v in e}
        assert touched == verts  # every chosen vertex lies on a chosen edge
        # maximal: either the budget cannot hold another K2, or nothing is left
        budget = k - len(verts)
        assert budget <= 1 or set(cut.edges) == f.edges


def test_approx_tree_k_frozen_paths():
    p5 = path_graph(5)
    trace = approx_tree_k_trace(rooted(p5), 5)
    assert len(trace.completion) == 6
    assert trace.covered_per_iteration == (4,)
    assert validate_completion(p5, trace.completion, CoverSpec(5, 1)).ok

    p9 = path_graph(9)
    trace = approx_tree_k_trace(rooted(p9), 5)
    assert len(trace.completion) == 12
    assert trace.covered_per_iteration == (4, 4)
    assert validate_completion(p9, trace.completion, CoverSpec(5, 1)).ok
    assert validate_completion(p9, trace.completion, CoverSpec(3, 3)).ok


def test_approx_tree_k_rejects_bad_inputs():
    with pytest.raises(InputError):
        approx_tree_k(rooted(path_graph(6)), 4)
    with pytest.raises(InputError):
        approx_tree_k(rooted(path_graph(4)), 5)


def test_approx_tree_k_properties_random():
    for k in (5, 6, 7):
        for seed in range(20):
            n = k + seed * 2
            g = gen_random_tree(n, 1000 * k + seed)
            trace = approx_tree_k_trace(rooted(g), k)
            assert validate_completion(g, trace.completion, CoverSpec(k, 1)).ok
            assert validate_completion(g, trace.completion, CoverSpec(3, k - 2)).ok
            covered = trace.covered_per_iteration
            assert sum(covered) == n - 1
            # every non-final iteration removes at least floor(k/2) tree edges
            assert all(c >= k // 2 for c in covered[:-1])


def test_approx_tree_k_even_k_addition_bound():
    # for even k and n >= 2k the additions stay below I*C(k,2) - (n-1)
    k = 6
    for seed in range(15):
        n = 2 * k + seed * 3
        g = gen_random_tree(n, seed)
        trace = approx_tree_k_trace(rooted(g), k)
        iterations = len(trace.covered_per_iteration)
        assert len(trace.completion) <= iterations * math.comb(k, 2) - (n - 1)


def test_approx_tree_4_frozen_examples():
    star = star_graph(4)
    c = approx_tree_4(rooted(star))
    assert len(c) == 3  # matches the exhaustive-search optimum
    assert validate_completion(star, c, CoverSpec(4, 1)).ok

    p4 = path_graph(4)
    c = approx_tree_4(rooted(p4))
    assert len(c) == 3
    assert validate_completion(p4, c, CoverSpec(4, 1)).ok

    spider = worst_case_spider(15)
    c = approx_tree_4(rooted(spider), check_invariants=True)
    assert len(c) == 19
    assert len(c) <= 2 * 14
    assert validate_completion(spider, c, CoverSpec(4, 1)).ok

    with pytest.raises(InputError):
        approx_tree_4(rooted(path_graph(3)))


def test_approx_tree_4_random_trees():
    for seed in range(50):
        n = 4 + seed * 3
        g = gen_random_tree(n, seed)
        c = approx_tree_4(rooted(g), check_invariants=True)
        assert len(c) <= 2 * (n - 1)
        assert validate_completion(g, c, CoverSpec(4, 1)).ok
        assert validate_completion(g, c, CoverSpec(3, 2)).ok


def test_approx_tree_4_deterministic():
    g = gen_random_tree(40, 11)
    assert list(approx_tree_4(rooted(g))) == list(approx_tree_4(rooted(g)))


def _best_of(times: int, fn) -> float:
    best = math.inf
    for _ in range(times):
        gc.collect()
        gc.disable()
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
        gc.enable()
    return best


def test_optimal_tree_31_linear_time_smoke():
    t = rooted(path_graph(1_000_000))
    assert _best_of(2, lambda: optimal_tree_31(t)) < 5.0


def test_approx_tree_4_scaling_smoke():
    # O(n log n)-consistent: time at most ~2.2x per doubling, with slack for
    # interpreter noise on a shared machine.
    timed = []
    for n in (250_000, 500_000, 1_000_000):
        t = rooted(gen_random_tree(n, 7))
        timed.append(_best_of(2, lambda: approx_tree_4(t)))
    assert timed[1] / timed[0] < 2.6
    assert timed[2] / timed[1] < 2.6
