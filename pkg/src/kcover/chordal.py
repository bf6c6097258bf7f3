"""Optimal (3,1) completion for chordal graphs.

In a chordal graph the edges missing a triangle are exactly the bridges, and
the bridges form vertex-disjoint trees.  Completing each of those trees
independently (with the tree solver, or a single chord for a lone bridge) is
optimal for the whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import CompletionSet, Edge, Graph, check_chordal, find_bridges, norm_edge
from .trees import RootedTree, optimal_tree_31


@dataclass(frozen=True)
class ChordalDecomposition:
    """Bridge-trees of a graph plus per-vertex placement labels."""

    trees: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[Edge, ...], ...]
    boundary: frozenset[int]
    interior: frozenset[int]
    outer: frozenset[int]

    def label(self, v: int) -> str:
        if v in self.boundary:
            return "boundary"
        if v in self.interior:
            return "interior"
        return "outer"


def decompose_trees(g: Graph) -> ChordalDecomposition:
    """Group the bridges of g into maximal trees.

    A vertex of a tree that also meets a non-bridge edge is a boundary vertex;
    vertices outside every tree are outer.
    """
    if g.n < 3:
        raise InputError(f"decomposition needs at least 3 vertices, got {g.n}")
    if not g.is_connected():
        raise InputError("decomposition needs a connected graph")
    bridges = set(find_bridges(g))
    adj: dict[int, list[int]] = {}
    for u, v in bridges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    trees: list[tuple[int, ...]] = []
    tree_edges: list[tuple[Edge, ...]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        trees.append(tuple(comp))
    tree_of: dict[int, int] = {}
    for idx, comp in enumerate(trees):
        for v in comp:
            tree_of[v] = idx
    grouped: list[list[Edge]] = [[] for _ in trees]
    for e in sorted(bridges):
        grouped[tree_of[e[0]]].append(e)
    tree_edges = [tuple(group) for group in grouped]
    in_tree = set(adj)
    boundary = frozenset(
        v for v in in_tree if len(g.adj[v]) > len(adj[v])
    )
    interior = frozenset(in_tree - boundary)
    outer = frozenset(range(g.n)) - in_tree
    return ChordalDecomposition(
        trees=tuple(trees),
        tree_edges=tuple(tree_edges),
        boundary=boundary,
        interior=interior,
        outer=frozenset(outer),
    )


def optimal_chordal_31(g: Graph, allow_nonchordal: bool = False) -> CompletionSet:
    """Minimum completion giving every edge of a connected chordal graph a triangle.

    Solves each bridge-tree independently: the tree solver for trees with at
    least three vertices, and for a lone bridge one chord from its non-boundary
    endpoint to a neighbor of the boundary endpoint.

    With allow_nonchordal=True the same procedure runs on any connected graph
    as a heuristic; the result then still saturates every bridge but carries
    no optimality guarantee.
    """
    if g.n < 3:
        raise InputError("triangle completion needs at least 3 vertices")
    if not g.is_connected():
        raise InputError("graph must be connected")
    chordality = check_chordal(g)
    if not chordality.is_chordal and not allow_nonchordal:
        raise InputError(
            f"graph is not chordal (later neighbors of vertex "
            f"{chordality.certificate} are not a clique)"
        )
    dec = decompose_trees(g)
    additions: list[Edge] = []
    added: set[Edge] = set()
    for verts, tedges in zip(dec.trees, dec.tree_edges):
        if len(verts) >= 3:
            back = {old: new for new, old in enumerate(verts)}
            sub = Graph(len(verts), [(back[u], back[v]) for (u, v) in tedges])
            for a, b in optimal_tree_31(RootedTree.from_graph(sub)):
                e = norm_edge(verts[a], verts[b])
                additions.append(e)
                added.add(e)
        else:
            a, b = verts
            if a in dec.boundary and b in dec.boundary:
                u, v = a, b
            elif a in dec.boundary:
                u, v = a, b
            elif b in dec.boundary:
                u, v = b, a
            else:
                raise AssertionError("a lone bridge in a connected n>=3 graph has a boundary endpoint")
            chord = None
            for base, far in ((u, v), (v, u)):
                for x in g.adj[base]:
                    if x == far:
                        continue
                    e = norm_edge(far, x)
                    if e in g.edges:
                        raise AssertionError("bridge endpoint neighbor already closes a triangle")
                    if e not in added:
                        chord = e
                        break
                if chord is not None:
                    break
            if chord is None:
                raise AssertionError("no chord available for a lone bridge")
            additions.append(chord)
            added.add(chord)
    return CompletionSet(additions)
