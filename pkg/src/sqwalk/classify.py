"""
Line-graph recognition and the Class 1 / 2a / 2b / 2b' taxonomy.

Two independent recognisers are provided: a scan for the nine Beineke
induced subgraphs, and a complete backtracking search for a Krausz
partition (a clique cover in which every edge lies in exactly one element
and every vertex in exactly two). The partition also yields the root graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .catalog import beineke
from .constants import MAX_MATCHINGS, MAX_SEARCH_VERTICES
from .errors import DisconnectedError, TooLargeError
from .graph import (
    Edge,
    Graph,
    clique_graph,
    find_induced_subgraph,
    is_diamond_free,
    maximal_cliques,
    two_coloring,
)
from .tessellation import Polygon, Tessellation, TessellationPair

CLASS1 = "Class1"
CLASS2A = "Class2a"
CLASS2B = "Class2b"
CLASS2B_PRIME = "Class2bPrime"


@dataclass(frozen=True)
class KrauszPartition:
    """Krausz partition of a graph; ``coloring`` is a 2-colouring of the elements if one exists."""

    elements: tuple[Polygon, ...]
    coloring: Optional[tuple[int, ...]]

    def root(self, n: int) -> tuple[Graph, list[Edge]]:
        """
        Root graph: one vertex per element, adjacent when the elements meet.

        Returns the root and, for every vertex ``k`` of the host graph, the
        root edge it corresponds to.
        """
        holders: list[list[int]] = [[] for _ in range(n)]
        for i, el in enumerate(self.elements):
            for v in el:
                holders[v].append(i)
        edge_of = [(min(h), max(h)) for h in holders]
        return Graph(len(self.elements), edge_of), edge_of

    def tessellations(self) -> TessellationPair:
        """Blue/red tessellations induced by a 2-coloured partition."""
        if self.coloring is None:
            raise ValueError("partition is not 2-colourable")
        blue = [el for el, c in zip(self.elements, self.coloring) if c == 0]
        red = [el for el, c in zip(self.elements, self.coloring) if c == 1]
        return TessellationPair(Tessellation(blue, "blue"), Tessellation(red, "red"))


def _element_coloring(elements: tuple[Polygon, ...]) -> Optional[tuple[int, ...]]:
    holders: dict[int, list[int]] = {}
    for i, el in enumerate(elements):
        for v in el:
            holders.setdefault(v, []).append(i)
    edges = {(min(h), max(h)) for h in holders.values()}
    col = two_coloring(Graph(len(elements), edges))
    return None if col is None else tuple(col)


def find_krausz_partition(g: Graph, max_vertices: int = MAX_SEARCH_VERTICES) -> Optional[KrauszPartition]:
    """
    Complete backtracking search for a Krausz partition.

    Edges are assigned to cliques one element at a time. A vertex already in
    one element must put all of its remaining edges into a single second
    element, which is applied as a forced move; otherwise the free
    neighbourhood of the least open vertex is split into two cliques, larger
    first element tried first. Returns ``None`` iff no partition exists.

    Raises
    ------
    TooLargeError
        If ``g.n > max_vertices``.
    """
    if g.n > max_vertices:
        raise TooLargeError(f"Krausz search capped at {max_vertices} vertices, got {g.n}")
    free = [set(g.neighbors(v)) for v in range(g.n)]
    count = [0] * g.n
    elements: list[Polygon] = []

    def clique_of_free(vs) -> bool:
        return all(b in free[a] for a, b in combinations(vs, 2))

    def apply(block: Polygon) -> bool:
        for a, b in combinations(block, 2):
            free[a].discard(b)
            free[b].discard(a)
        for v in block:
            count[v] += 1
        elements.append(block)
        return all(count[v] < 2 or not free[v] for v in block)

    def undo(block: Polygon) -> None:
        elements.pop()
        for v in block:
            count[v] -= 1
        for a, b in combinations(block, 2):
            free[a].add(b)
            free[b].add(a)

    def solve() -> bool:
        forced = next((v for v in range(g.n) if count[v] == 1 and free[v]), None)
        if forced is not None:
            block = tuple(sorted({forced} | free[forced]))
            if any(count[u] >= 2 for u in block) or not clique_of_free(sorted(free[forced])):
                return False
            ok = apply(block)
            if ok and solve():
                return True
            undo(block)
            return False
        v = next((v for v in range(g.n) if free[v]), None)
        if v is None:
            return True
        nbrs = sorted(free[v])
        u0, rest = nbrs[0], nbrs[1:]
        cand = [w for w in rest if w in free[u0] and count[w] < 2]
        if count[u0] >= 2:
            return False
        for r in range(len(cand), -1, -1):
            for extra in combinations(cand, r):
                first = (u0,) + extra
                second = [w for w in nbrs if w not in first]
                if not clique_of_free(first) or not clique_of_free(second):
                    continue
                block = tuple(sorted((v,) + first))
                ok = apply(block)
                if ok and solve():
                    return True
                undo(block)
        return False

    if not solve():
        return None
    for v in range(g.n):
        for _ in range(2 - count[v]):
            elements.append((v,))
    elems = tuple(sorted(elements))
    return KrauszPartition(elems, _element_coloring(elems))


def beineke_witness(g: Graph) -> Optional[tuple[int, dict[int, int]]]:
    """First Beineke graph (by index) found as an induced subgraph, with its embedding."""
    for i in range(1, 10):
        emb = find_induced_subgraph(g, beineke(i))
        if emb is not None:
            return i, emb
    return None


def is_line_graph(g: Graph, cross_check: bool = True, max_vertices: int = MAX_SEARCH_VERTICES) -> bool:
    """
    Line-graph test by Beineke scan.

    With ``cross_check`` (and ``g`` within the Krausz cap) the Krausz search is
    run too and any disagreement raises ``AssertionError``.
    """
    verdict = beineke_witness(g) is None
    if cross_check and g.n <= max_vertices:
        krausz = find_krausz_partition(g, max_vertices) is not None
        if krausz != verdict:
            raise AssertionError(f"Beineke scan ({verdict}) and Krausz search ({krausz}) disagree")
    return verdict


def root_graph(g: Graph, max_vertices: int = MAX_SEARCH_VERTICES) -> Optional[tuple[Graph, list[Edge]]]:
    """
    Root graph R with L(R) isomorphic to ``g``, plus the map host vertex -> root edge.

    For a triangle the search order yields the claw (a bipartite root) rather
    than the triangle itself.
    """
    kp = find_krausz_partition(g, max_vertices)
    return None if kp is None else kp.root(g.n)


def clique_graph_is_root(g: Graph, max_vertices: int = MAX_SEARCH_VERTICES) -> bool:
    """
    Whether ``g`` equals L(K(g)) through the map sending each vertex to the
    pair of maximal cliques containing it.
    """
    cliques = maximal_cliques(g, max(max_vertices, g.n))
    holders: list[list[int]] = [[] for _ in range(g.n)]
    for i, c in enumerate(cliques):
        for v in c:
            holders[v].append(i)
    if any(len(h) != 2 for h in holders):
        return False
    sets = [set(c) for c in cliques]
    if any(len(sets[i] & sets[j]) > 1 for i, j in combinations(range(len(cliques)), 2)):
        return False
    return True


@dataclass(frozen=True)
class TwoBPrimeEvidence:
    """Perfect matching M and the cliques left after deleting M's edges."""

    matching: tuple[Edge, ...]
    cliques: tuple[Polygon, ...]

    def tessellations(self) -> TessellationPair:
        return TessellationPair(Tessellation(self.cliques, "blue"), Tessellation(self.matching, "red"))


def verify_two_b_prime(g: Graph, ev: TwoBPrimeEvidence) -> bool:
    """Re-check conditions (1)-(3) for a claimed matching, independently of the search."""
    matched = [v for e in ev.matching for v in e]
    if sorted(matched) != list(range(g.n)):
        return False
    mset = set(ev.matching)
    for u, v in ev.matching:
        if not g.has_edge(u, v) or g.neighbors(u) & g.neighbors(v):
            return False
    rest = Graph(g.n, [e for e in g.edges if e not in mset])
    comps = rest.components()
    return sorted(comps) == sorted(list(c) for c in ev.cliques) and all(rest.is_clique(c) for c in comps)


def check_two_b_prime(g: Graph, max_vertices: int = MAX_SEARCH_VERTICES,
                      max_matchings: int = MAX_MATCHINGS) -> Optional[TwoBPrimeEvidence]:
    """
    Search for a perfect matching M such that every M-edge is a maximal
    2-clique and deleting M leaves disjoint cliques.

    Only edges without common neighbours can be M-edges, which prunes the
    matching enumeration. Returns ``None`` when no such matching exists.

    Raises
    ------
    TooLargeError
        Above ``max_vertices`` or after ``max_matchings`` perfect matchings.
    """
    if g.n > max_vertices:
        raise TooLargeError(f"matching search capped at {max_vertices} vertices, got {g.n}")
    if g.n % 2:
        return None
    cand = [sorted(w for w in g.neighbors(v) if not g.neighbors(v) & g.neighbors(w))
            for v in range(g.n)]
    if any(not c for c in cand):
        return None
    mate = [-1] * g.n
    found = 0

    def leaf() -> Optional[TwoBPrimeEvidence]:
        m = tuple(sorted((v, mate[v]) for v in range(g.n) if v < mate[v]))
        mset = set(m)
        rest = Graph(g.n, [e for e in g.edges if e not in mset])
        comps = rest.components()
        if all(rest.is_clique(c) for c in comps):
            return TwoBPrimeEvidence(m, tuple(tuple(c) for c in comps))
        return None

    def rec() -> Optional[TwoBPrimeEvidence]:
        nonlocal found
        v = next((v for v in range(g.n) if mate[v] < 0), None)
        if v is None:
            found += 1
            if found > max_matchings:
                raise TooLargeError(f"more than {max_matchings} candidate perfect matchings")
            return leaf()
        for w in cand[v]:
            if mate[w] < 0:
                mate[v], mate[w] = w, v
                res = rec()
                if res is not None:
                    return res
                mate[v] = mate[w] = -1
        return None

    return rec()


@dataclass(frozen=True)
class ClassEvidence:
    """Class label with a witness that can be re-checked by :func:`verify_evidence`."""

    label: str
    beineke: Optional[tuple[int, dict[int, int]]] = None
    krausz: Optional[KrauszPartition] = None
    root: Optional[Graph] = None
    two_b_prime: Optional[TwoBPrimeEvidence] = field(default=None)

    def to_dict(self) -> dict:
        out: dict = {"class": self.label}
        if self.beineke is not None:
            idx, emb = self.beineke
            out["beineke"] = {"index": idx, "embedding": [emb[k] for k in sorted(emb)]}
        if self.krausz is not None:
            out["krausz"] = {"elements": [list(e) for e in self.krausz.elements],
                             "coloring": None if self.krausz.coloring is None else list(self.krausz.coloring)}
        if self.root is not None:
            out["root"] = {"n": self.root.n, "edges": [list(e) for e in self.root.edges]}
        if self.two_b_prime is not None:
            out["matching"] = [list(e) for e in self.two_b_prime.matching]
            out["complement_cliques"] = [list(c) for c in self.two_b_prime.cliques]
        return out


def _is_krausz(g: Graph, kp: KrauszPartition) -> bool:
    times = [0] * g.n
    seen: dict[Edge, int] = {}
    for el in kp.elements:
        if not g.is_clique(el):
            return False
        for v in el:
            times[v] += 1
        for u, v in combinations(sorted(el), 2):
            seen[(u, v)] = seen.get((u, v), 0) + 1
    return all(t == 2 for t in times) and all(seen.get(e, 0) == 1 for e in g.edges) and len(seen) == g.edge_count


def verify_evidence(g: Graph, ev: ClassEvidence) -> bool:
    """Independently re-validate the witness carried by ``ev``."""
    if ev.label == CLASS1:
        if ev.beineke is None:
            return False
        idx, emb = ev.beineke
        pat = beineke(idx)
        image = [emb[p] for p in range(pat.n)]
        return len(set(image)) == pat.n and g.induced(image) == pat
    if ev.krausz is None or not _is_krausz(g, ev.krausz):
        return False
    bipartite = ev.krausz.coloring is not None
    if ev.label == CLASS2A:
        return not bipartite
    if ev.label == CLASS2B:
        return bipartite
    if ev.label == CLASS2B_PRIME:
        return bipartite and ev.two_b_prime is not None and verify_two_b_prime(g, ev.two_b_prime)
    return False


def classify_graph(g: Graph, max_vertices: int = MAX_SEARCH_VERTICES) -> ClassEvidence:
    """
    Place a connected graph in Class 1, 2a, 2b or 2b'.

    Class 1 is decided by the Beineke scan (no size cap). Line graphs need a
    Krausz partition, so they are subject to ``max_vertices``. A Class 2b
    verdict (bipartite root) is cross-checked against the diamond-free plus
    bipartite-clique-graph characterisation.

    Raises
    ------
    DisconnectedError, TooLargeError
    """
    if not g.is_connected():
        raise DisconnectedError("classification requires a connected graph")
    witness = beineke_witness(g)
    if witness is not None:
        if g.n <= max_vertices and find_krausz_partition(g, max_vertices) is not None:
            raise AssertionError("Krausz partition found for a graph with a Beineke subgraph")
        return ClassEvidence(CLASS1, beineke=witness)
    kp = find_krausz_partition(g, max_vertices)
    if kp is None:
        raise AssertionError("no Beineke subgraph but no Krausz partition either")
    root, _ = kp.root(g.n)
    bipartite = kp.coloring is not None
    k, _ = clique_graph(g, max(max_vertices, g.n))
    theorem = is_diamond_free(g) and two_coloring(k) is not None
    if theorem != bipartite:
        raise AssertionError("root bipartiteness disagrees with the diamond-free test")
    if not bipartite:
        return ClassEvidence(CLASS2A, krausz=kp, root=root)
    prime = check_two_b_prime(g, max_vertices)
    if prime is not None:
        return ClassEvidence(CLASS2B_PRIME, krausz=kp, root=root, two_b_prime=prime)
    return ClassEvidence(CLASS2B, krausz=kp, root=root)


def krausz_tessellations(g: Graph, max_vertices: int = MAX_SEARCH_VERTICES) -> TessellationPair:
    """Blue/red tessellations from a 2-coloured Krausz partition (Class 2b graphs)."""
    kp = find_krausz_partition(g, max_vertices)
    if kp is None or kp.coloring is None:
        raise ValueError("graph has no 2-colourable Krausz partition")
    return kp.tessellations()
