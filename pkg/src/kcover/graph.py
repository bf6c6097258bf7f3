"""Undirected simple graphs plus the clique-cover predicates used everywhere else.

Vertices are dense integers 0..n-1 and every edge is a normalized pair (u, v)
with u < v.  Graphs are immutable; edits return new graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Order the endpoints of an edge; self-loops are rejected."""
    if u == v:
        raise InputError(f"self-loop ({u},{v}) is not allowed")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        adj_lists: list[list[int]] = [[] for _ in range(n)]
        seen: set[Edge] = set()
        for u, v in edges:
            e = norm_edge(u, v)
            if e[0] < 0 or e[1] >= n:
                raise InputError(f"edge {e} out of range for n={n}")
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
            adj_lists[e[0]].append(e[1])
            adj_lists[e[1]].append(e[0])
        self.n = n
        self.edges = frozenset(seen)
        self.adj = tuple(tuple(sorted(a)) for a in adj_lists)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + [norm_edge(u, v) for u, v in pairs])

    def without_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        drop = {norm_edge(u, v) for u, v in pairs}
        missing = drop - self.edges
        if missing:
            raise InputError(f"cannot remove non-edges {sorted(missing)}")
        return Graph(self.n, self.edges - drop)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph with dense relabeling.

        Returns (subgraph, old_ids) where old_ids[new] is the original id.
        """
        old_ids = sorted(set(vertices))
        if old_ids and not (0 <= old_ids[0] and old_ids[-1] < self.n):
            raise InputError("induced vertex set out of range")
        back = {old: new for new, old in enumerate(old_ids)}
        keep = set(old_ids)
        sub_edges = [
            (back[u], back[v]) for (u, v) in self.edges if u in keep and v in keep
        ]
        return Graph(len(old_ids), sub_edges), old_ids

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class CoverSpec:
    """Target cover parameters: every edge must lie in at least l cliques of order k."""

    k: int
    l: int = 1

    def __post_init__(self) -> None:
        if self.k < 3:
            raise InputError(f"clique order k must be >= 3, got {self.k}")
        if self.l < 1:
            raise InputError(f"multiplicity l must be >= 1, got {self.l}")


class CompletionSet:
    """Ordered list of normalized edge additions with no duplicates."""

    __slots__ = ("additions",)

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        out: list[Edge] = []
        seen: set[Edge] = set()
        for u, v in pairs:
            e = norm_edge(u, v)
            if e in seen:
                raise InputError(f"duplicate addition {e}")
            seen.add(e)
            out.append(e)
        self.additions = tuple(out)

    def as_set(self) -> frozenset[Edge]:
        return frozenset(self.additions)

    def __len__(self) -> int:
        return len(self.additions)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.additions)

    def __contains__(self, e: object) -> bool:
        return e in self.additions

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CompletionSet) and self.additions == other.additions

    def __hash__(self) -> int:
        return hash(self.additions)

    def __repr__(self) -> str:
        return f"CompletionSet({list(self.additions)!r})"


@dataclass(frozen=True)
class CoverCheck:
    """Verdict of a completion check: ok iff no violations and the result is connected."""

    ok: bool
    violations: tuple[Edge, ...]
    connected: bool


@dataclass(frozen=True)
class ChordalityResult:
    is_chordal: bool
    elimination_order: tuple[int, ...] | None
    certificate: int | None


def triangle_vertices(g: Graph, e: tuple[int, int]) -> list[int]:
    """Vertices forming a triangle with edge e, in ascending order."""
    u, v = norm_edge(*e)
    if (u, v) not in g.edges:
        raise InputError(f"({u},{v}) is not an edge")
    a, b = (u, v) if len(g.adj[u]) <= len(g.adj[v]) else (v, u)
    return [w for w in g.adj[a] if w != b and norm_edge(w, b) in g.edges]


def count_k_cliques_on_edge(g: Graph, e: tuple[int, int], k: int, cap: int) -> int:
    """Number of k-cliques containing edge e, counted up to cap.

    Equivalent to counting (k-2)-cliques inside the common neighborhood of the
    endpoints; the search stops as soon as cap cliques are found.
    """
    if k < 3:
        raise InputError(f"clique order k must be >= 3, got {k}")
    if cap < 1:
        raise InputError(f"cap must be >= 1, got {cap}")
    common = triangle_vertices(g, e)
    need = k - 2
    if need == 1:
        return min(len(common), cap)
    edges = g.edges
    count = 0

    def grow(cands: list[int], need: int) -> bool:
        nonlocal count
        if need == 1:
            count += len(cands)
            return count >= cap
        for i, w in enumerate(cands):
            if len(cands) - i < need:
                return False
            ext = [x for x in cands[i + 1 :] if (w, x) in edges]
            if len(ext) >= need - 1 and grow(ext, need - 1):
                return True
        return False

    grow(common, need)
    return min(count, cap)


def unsaturated_edges(g: Graph, spec: CoverSpec) -> list[Edge]:
    """Edges lying in fewer than spec.l cliques of order spec.k, in lexicographic order."""
    return [
        e
        for e in sorted(g.edges)
        if count_k_cliques_on_edge(g, e, spec.k, spec.l) < spec.l
    ]


def apply_completion(g: Graph, c: CompletionSet) -> Graph:
    """Add every pair of c to g.  Pairs must be non-edges; duplicates are rejected."""
    for e in c:
        if e[0] < 0 or e[1] >= g.n:
            raise InputError(f"addition {e} out of range for n={g.n}")
        if e in g.edges:
            raise InputError(f"addition {e} is already an edge")
    return Graph(g.n, list(g.edges) + list(c))


def validate_completion(g: Graph, c: CompletionSet, spec: CoverSpec) -> CoverCheck:
    """Check that g plus c has a (k,l)-cover and is connected."""
    completed = apply_completion(g, c)
    violations = tuple(unsaturated_edges(completed, spec))
    connected = completed.is_connected()
    return CoverCheck(ok=not violations and connected, violations=violations, connected=connected)


def find_bridges(g: Graph) -> list[Edge]:
    """All bridges of g, in lexicographic order (iterative lowpoint search)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges: list[Edge] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[list[int]] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent, i = frame
            if i < len(g.adj[v]):
                frame[2] += 1
                w = g.adj[v][i]
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, v, 0])
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if parent != -1:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] > disc[parent]:
                        bridges.append(norm_edge(parent, v))
    return sorted(bridges)


def check_chordal(g: Graph) -> ChordalityResult:
    """Chordality test via maximum cardinality search.

    Returns the elimination order on success, or a certificate vertex whose
    later neighbors fail to form a clique under the attempted order.
    """
    import heapq

    n = g.n
    if n == 0:
        return ChordalityResult(True, (), None)
    weight = [0] * n
    numbered = [False] * n
    heap: list[tuple[int, int]] = [(0, v) for v in range(n)]
    heapq.heapify(heap)
    visit: list[int] = []
    while len(visit) < n:
        while True:
            negw, v = heapq.heappop(heap)
            if not numbered[v] and -negw == weight[v]:
                break
        numbered[v] = True
        visit.append(v)
        for w in g.adj[v]:
            if not numbered[w]:
                weight[w] += 1
                heapq.heappush(heap, (-weight[w], w))
    peo = visit[::-1]
    pos = [0] * n
    for idx, v in enumerate(peo):
        pos[v] = idx
    edges = g.edges
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=lambda w: pos[w])
        for w in later:
            if w != u and norm_edge(u, w) not in edges:
                return ChordalityResult(False, None, v)
    return ChordalityResult(True, tuple(peo), None)
