"""
Simple undirected graphs and the combinatorial kernels built on them.

Vertices are the integers ``0..n-1``. A :class:`Graph` is immutable; every
operation in this module is a pure function of its inputs.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .constants import MAX_CLIQUE_VERTICES, MAX_ISO_VERTICES
from .errors import (
    DuplicateEdgeError,
    NoEdgesError,
    OutOfRangeError,
    SelfLoopError,
    TooLargeError,
)

Edge = tuple[int, int]


class Graph:
    """
    Simple undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Unordered vertex pairs. Self-loops, repeated pairs (in either
        orientation) and out-of-range endpoints are rejected.
    labels : sequence of str, optional
        One display label per vertex, e.g. ``"(x,y,i,k)"`` lattice labels.

    Raises
    ------
    SelfLoopError, DuplicateEdgeError, OutOfRangeError
        On malformed input.
    """

    __slots__ = ("n", "edges", "_adj", "labels")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (),
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise OutOfRangeError(f"vertex count must be nonnegative, got {n}")
        seen: set[Edge] = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for pair in edges:
            u, v = (int(w) for w in pair)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdgeError(f"edge {e} given twice")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise OutOfRangeError(f"{len(labels)} labels for {n} vertices")
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self.labels: Optional[tuple[str, ...]] = labels

    # basic queries -------------------------------------------------------
    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex ``i`` of the result is ``vertices[i]``."""
        pos = {v: i for i, v in enumerate(vertices)}
        sub = [(pos[u], pos[v]) for u, v in combinations(vertices, 2) if self.has_edge(u, v)]
        return Graph(len(vertices), sub)

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=int)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def graph_from_edge_list(n: int, pairs: Iterable[Sequence[int]],
                         labels: Optional[Sequence[str]] = None) -> Graph:
    """Build a :class:`Graph`, rejecting self-loops, repeats and bad endpoints."""
    return Graph(n, pairs, labels)


# cliques ------------------------------------------------------------------
def maximal_cliques(g: Graph, max_vertices: int = MAX_CLIQUE_VERTICES) -> list[tuple[int, ...]]:
    """
    All maximal cliques, via Bron-Kerbosch with Tomita pivoting.

    Isolated vertices appear as singleton cliques. The result is sorted
    (each clique ascending, cliques lexicographically) so it is stable
    across runs.

    Raises
    ------
    TooLargeError
        If ``g.n > max_vertices``.
    """
    if g.n > max_vertices:
        raise TooLargeError(f"maximal-clique enumeration capped at {max_vertices} vertices, got {g.n}")
    adj = [g.neighbors(v) for v in range(g.n)]
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(p & adj[u]))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand([], set(range(g.n)), set())
    return sorted(out)


def clique_graph(g: Graph, max_vertices: int = MAX_CLIQUE_VERTICES) -> tuple[Graph, list[tuple[int, ...]]]:
    """
    Clique graph K(g).

    Returns the graph together with the list of maximal cliques; vertex ``i``
    of K(g) stands for ``cliques[i]``.
    """
    cliques = maximal_cliques(g, max_vertices)
    sets = [set(c) for c in cliques]
    edges = [(i, j) for i, j in combinations(range(len(cliques)), 2) if sets[i] & sets[j]]
    return Graph(len(cliques), edges), cliques


def two_coloring(g: Graph) -> Optional[list[int]]:
    """
    Proper 2-colouring by breadth-first layering, or ``None`` when an odd
    cycle exists. Each component's least vertex gets colour 0.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def line_graph(g: Graph) -> tuple[Graph, list[Edge]]:
    """
    Line graph L(g).

    Returns ``(L, edge_of)``, where vertex ``i`` of ``L`` represents the root
    edge ``edge_of[i]`` (the root's edges in sorted order).
    """
    if not g.edges:
        raise NoEdgesError("line graph of an edgeless graph is empty")
    edge_of = list(g.edges)
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edge_of):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for inc in incident:
        for i, j in combinations(inc, 2):
            pairs.add((i, j))
    return Graph(len(edge_of), pairs), edge_of


# subgraph search ----------------------------------------------------------
def _search_order(pattern: Graph) -> tuple[list[int], list[Optional[int]]]:
    """Pattern vertices in BFS order (highest degree first) with BFS parents."""
    order: list[int] = []
    parent: list[Optional[int]] = []
    placed = [False] * pattern.n
    for s in sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v)):
        if placed[s]:
            continue
        placed[s] = True
        order.append(s)
        parent.append(None)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(pattern.neighbors(u), key=lambda v: (-pattern.degree(v), v)):
                if not placed[w]:
                    placed[w] = True
                    order.append(w)
                    parent.append(u)
                    queue.append(w)
    return order, parent


def _embed(host: Graph, pattern: Graph, exact_degree: bool) -> Optional[dict[int, int]]:
    if pattern.n > host.n:
        return None
    order, parent = _search_order(pattern)
    mapping: dict[int, int] = {}
    used: set[int] = set()
    pdeg = pattern.degrees()
    hdeg = host.degrees()

    def fits(p: int, h: int) -> bool:
        if h in used:
            return False
        if exact_degree and hdeg[h] != pdeg[p]:
            return False
        if hdeg[h] < pdeg[p]:
            return False
        for q, hq in mapping.items():
            if pattern.has_edge(p, q) != host.has_edge(h, hq):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        if parent[i] is None:
            candidates = range(host.n)
        else:
            candidates = sorted(host.neighbors(mapping[parent[i]]))
        for h in candidates:
            if fits(p, h):
                mapping[p] = h
                used.add(h)
                if extend(i + 1):
                    return True
                del mapping[p]
                used.discard(h)
        return False

    return dict(sorted(mapping.items())) if extend(0) else None


def find_induced_subgraph(host: Graph, pattern: Graph) -> Optional[dict[int, int]]:
    """
    Find an induced copy of ``pattern`` in ``host``.

    Returns an injective map pattern-vertex -> host-vertex that preserves both
    adjacency and non-adjacency, or ``None``.
    """
    return _embed(host, pattern, exact_degree=False)


def is_diamond_free(g: Graph, method: str = "scan") -> bool:
    """
    True iff no induced diamond (K4 minus an edge).

    ``method="scan"`` searches for an induced diamond directly;
    ``method="cliques"`` uses the equivalent test that every edge lies in
    exactly one maximal clique.
    """
    if method == "scan":
        diamond = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        return find_induced_subgraph(g, diamond) is None
    if method == "cliques":
        count: dict[Edge, int] = {}
        for c in maximal_cliques(g, max_vertices=max(g.n, 1)):
            for e in combinations(c, 2):
                count[e] = count.get(e, 0) + 1
        return all(k == 1 for k in count.values())
    raise ValueError(f"unknown method {method!r}")


def are_isomorphic(g1: Graph, g2: Graph, max_vertices: int = MAX_ISO_VERTICES) -> bool:
    """
    Exact isomorphism test for small graphs.

    Cheap invariants (order, size, degree sequence) are compared first; the
    decision is then a degree-constrained backtracking search for a bijection
    preserving adjacency and non-adjacency.

    Raises
    ------
    TooLargeError
        If either graph exceeds ``max_vertices``.
    """
    if max(g1.n, g2.n) > max_vertices:
        raise TooLargeError(f"isomorphism test capped at {max_vertices} vertices")
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return _embed(g2, g1, exact_degree=True) is not None
