"""Small graph builders and slow reference implementations shared by the tests.

The reference implementations here are deliberately naive (subset enumeration,
remove-and-recount, induced-cycle scans) so they share no code with the module
under test.
"""

from __future__ import annotations

import random
from itertools import combinations

from kcover import (
    CompletionSet,
    CoverSpec,
    Graph,
    LabeledReductionGraph,
    RootedTree,
    SetCoverInstance,
    validate_completion,
)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    return Graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def rooted(g: Graph) -> RootedTree:
    return RootedTree.from_graph(g)


def nonedges(g: Graph) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]


def naive_min_completion(g: Graph, spec: CoverSpec) -> CompletionSet:
    """Minimum completion by brute subset enumeration. Tiny graphs only."""
    candidates = nonedges(g)
    for size in range(len(candidates) + 1):
        for subset in combinations(candidates, size):
            c = CompletionSet(subset)
            if validate_completion(g, c, spec).ok:
                return c
    raise AssertionError("no completion exists even after filling every non-edge")


def brute_bridges(g: Graph) -> list[tuple[int, int]]:
    """An edge is a bridge iff removing it increases the component count."""
    base = len(g.components())
    return [e for e in g.edge_list() if len(g.without_edges([e]).components()) > base]


def brute_is_chordal(g: Graph) -> bool:
    """No induced cycle of length four or more."""
    for size in range(4, g.n + 1):
        for subset in combinations(range(g.n), size):
            sub, _ = g.induced(subset)
            if (
                sub.m == size
                and all(sub.degree(v) == 2 for v in range(size))
                and sub.is_connected()
            ):
                return False
    return True


def random_cover(inst: SetCoverInstance, rng: random.Random) -> list[int]:
    """A random (not necessarily minimal) index set that covers the universe."""
    everything = set(range(inst.universe_size))
    while True:
        chosen = [j for j in range(len(inst.sets)) if rng.random() < 0.6]
        if set().union(*(inst.sets[j] for j in chosen), frozenset()) == everything:
            return chosen


def pad_with_decoys(
    rg: LabeledReductionGraph,
    base: CompletionSet,
    rng: random.Random,
    spec: CoverSpec,
) -> CompletionSet:
    """Pad a good completion with random non-edges, keeping it valid."""
    chosen = list(base)
    pool = [e for e in nonedges(rg.graph) if e not in base.as_set()]
    rng.shuffle(pool)
    for decoy in pool[:6]:
        trial = CompletionSet(chosen + [decoy])
        if validate_completion(rg.graph, trial, spec).ok:
            chosen.append(decoy)
    rng.shuffle(chosen)
    return CompletionSet(chosen)


def valid_p3_partition(t: RootedTree, groups: list[tuple]) -> bool:
    """Groups must partition the tree's edges into paths of one or two edges."""
    seen: list[tuple[int, int]] = []
    for group in groups:
        if len(group) == 2:
            (a, b), (c, d) = group
            if not ({a, b} & {c, d}):
                return False
        elif len(group) != 1:
            return False
        seen.extend(group)
    return len(seen) == len(set(seen)) and sorted(seen) == t.base.edge_list()
