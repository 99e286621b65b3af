"""
Polygons, tessellations and the 2-tessellability decision.

A tessellation is a partition of the vertex set into cliques (polygons). A
*partial* tessellation partitions only an induced subgraph; validation can be
told to skip the coverage requirement for those.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .constants import MAX_BRUTE_FORCE_VERTICES, MAX_CLIQUE_VERTICES
from .errors import (
    DisconnectedError,
    EmptyPolygonError,
    InvalidTessellationError,
    NotTwoTessellableError,
    OutOfRangeError,
    TooLargeError,
)
from .graph import Edge, Graph, clique_graph, two_coloring

Polygon = tuple[int, ...]


@dataclass(frozen=True)
class Tessellation:
    """Ordered list of polygons with a colour tag (``"blue"`` or ``"red"``)."""

    polygons: tuple[Polygon, ...]
    color: str = "blue"

    def __init__(self, polygons: Sequence[Sequence[int]], color: str = "blue"):
        polys = tuple(tuple(int(v) for v in p) for p in polygons)
        for i, p in enumerate(polys):
            if not p:
                raise EmptyPolygonError(f"polygon {i} is empty")
        object.__setattr__(self, "polygons", polys)
        object.__setattr__(self, "color", color)

    def __len__(self) -> int:
        return len(self.polygons)

    def __iter__(self):
        return iter(self.polygons)

    def vertices(self) -> set[int]:
        return {v for p in self.polygons for v in p}

    def polygon_of(self, n: int) -> list[int]:
        """Index of the polygon holding each vertex, ``-1`` where uncovered."""
        where = [-1] * n
        for i, p in enumerate(self.polygons):
            for v in p:
                where[v] = i
        return where

    def edges(self) -> set[Edge]:
        return {(min(u, v), max(u, v)) for p in self.polygons for u, v in combinations(p, 2)}


@dataclass(frozen=True)
class TessellationPair:
    blue: Tessellation
    red: Tessellation

    def __init__(self, blue, red):
        if not isinstance(blue, Tessellation):
            blue = Tessellation(blue, "blue")
        if not isinstance(red, Tessellation):
            red = Tessellation(red, "red")
        object.__setattr__(self, "blue", blue)
        object.__setattr__(self, "red", red)


@dataclass(frozen=True)
class Violation:
    """First problem found by :func:`validate_tessellation`."""

    kind: str  # "NotAClique" | "Overlap" | "UncoveredVertex"
    polygon: Optional[int]
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        where = f" in polygon {self.polygon}" if self.polygon is not None else ""
        return f"{self.kind}{where}: vertices {list(self.vertices)}"


def validate_tessellation(g: Graph, t: Tessellation, complete: bool = True) -> Optional[Violation]:
    """
    Check that ``t`` is a tessellation of ``g``.

    Polygons are scanned in order; the first one that is not a clique or that
    reuses a vertex is reported. With ``complete=True`` every vertex must be
    covered. Returns ``None`` when the tessellation is valid.
    """
    owner: dict[int, int] = {}
    for i, poly in enumerate(t.polygons):
        for v in poly:
            if not 0 <= v < g.n:
                raise OutOfRangeError(f"polygon {i} names vertex {v} outside 0..{g.n - 1}")
        for u, v in combinations(poly, 2):
            if u == v or not g.has_edge(u, v):
                if u == v:
                    return Violation("Overlap", i, (u,))
                return Violation("NotAClique", i, (u, v))
        for v in poly:
            if v in owner:
                return Violation("Overlap", i, (v,))
            owner[v] = i
    if complete:
        missing = tuple(v for v in range(g.n) if v not in owner)
        if missing:
            return Violation("UncoveredVertex", None, missing)
    return None


def check_tessellation(g: Graph, t: Tessellation, complete: bool = True) -> None:
    """Like :func:`validate_tessellation` but raises ``InvalidTessellationError``."""
    bad = validate_tessellation(g, t, complete)
    if bad is not None:
        raise InvalidTessellationError(bad)


def union_covers_edges(g: Graph, pair: TessellationPair) -> tuple[bool, list[Edge]]:
    """Whether every edge of ``g`` lies inside some blue or red polygon, plus the misses."""
    covered = pair.blue.edges() | pair.red.edges()
    missing = [e for e in g.edges if e not in covered]
    return not missing, missing


def intersection_edges(pair: TessellationPair) -> list[Edge]:
    """Edges whose endpoints share a blue polygon and also share a red polygon."""
    return sorted(pair.blue.edges() & pair.red.edges())


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedError("graph must be connected")


def is_two_tessellable(g: Graph, max_vertices: int = MAX_CLIQUE_VERTICES) -> bool:
    """A connected graph is 2-tessellable iff its clique graph is 2-colourable."""
    _require_connected(g)
    k, _ = clique_graph(g, max_vertices)
    return two_coloring(k) is not None


def build_two_tessellation(g: Graph, max_vertices: int = MAX_CLIQUE_VERTICES) -> TessellationPair:
    """
    Construct a covering blue/red tessellation pair.

    Maximal cliques are coloured by a 2-colouring of the clique graph and
    become polygons of their colour. Every vertex left in only one colour then
    receives a singleton polygon of the other colour.

    Raises
    ------
    NotTwoTessellableError
        If the clique graph has an odd cycle.
    """
    _require_connected(g)
    k, cliques = clique_graph(g, max_vertices)
    coloring = two_coloring(k)
    if coloring is None:
        raise NotTwoTessellableError("clique graph is not 2-colourable")
    polys: list[list[Polygon]] = [[], []]
    taken: list[set[int]] = [set(), set()]
    for c, col in zip(cliques, coloring):
        # same-coloured maximal cliques are disjoint; the filter only guards ordering
        kept = tuple(v for v in c if v not in taken[col])
        if kept:
            polys[col].append(kept)
            taken[col].update(kept)
    for v in range(g.n):
        for col in (0, 1):
            if v not in taken[col]:
                polys[col].append((v,))
                taken[col].add(v)
    return TessellationPair(Tessellation(polys[0], "blue"), Tessellation(polys[1], "red"))


def clique_partitions(g: Graph) -> Iterator[tuple[Polygon, ...]]:
    """Every partition of the vertex set into cliques (exponential)."""
    order = list(range(g.n))

    def rec(rest: list[int], acc: list[Polygon]) -> Iterator[tuple[Polygon, ...]]:
        if not rest:
            yield tuple(acc)
            return
        v, tail = rest[0], rest[1:]
        cand = [u for u in tail if g.has_edge(u, v)]
        for r in range(len(cand), -1, -1):
            for extra in combinations(cand, r):
                if not g.is_clique(extra):
                    continue
                block = (v,) + extra
                left = [u for u in tail if u not in extra]
                yield from rec(left, acc + [block])

    yield from rec(order, [])


def covering_tessellation_pairs(g: Graph, max_vertices: int = MAX_BRUTE_FORCE_VERTICES
                                ) -> Iterator[TessellationPair]:
    """
    Enumerate every (blue, red) pair of complete tessellations whose union
    covers all edges. Independent of clique graphs; used as an oracle.
    """
    if g.n > max_vertices:
        raise TooLargeError(f"exhaustive tessellation search capped at {max_vertices} vertices")
    index = {e: i for i, e in enumerate(g.edges)}
    full = (1 << len(index)) - 1
    parts = []
    for p in clique_partitions(g):
        mask = 0
        for poly in p:
            for u, v in combinations(sorted(poly), 2):
                mask |= 1 << index[(u, v)]
        parts.append((mask, p))
    for ma, pa in parts:
        need = full & ~ma
        for mb, pb in parts:
            if mb & need == need:
                yield TessellationPair(Tessellation(pa, "blue"), Tessellation(pb, "red"))


def brute_force_two_tessellable(g: Graph, max_vertices: int = MAX_BRUTE_FORCE_VERTICES) -> bool:
    """Exhaustive check that some pair of tessellations covers every edge."""
    if g.n > max_vertices:
        raise TooLargeError(f"exhaustive tessellation search capped at {max_vertices} vertices")
    index = {e: i for i, e in enumerate(g.edges)}
    full = (1 << len(index)) - 1
    masks = set()
    for p in clique_partitions(g):
        mask = 0
        for poly in p:
            for u, v in combinations(sorted(poly), 2):
                mask |= 1 << index[(u, v)]
        masks.add(mask)
    masks = sorted(masks, key=lambda m: -bin(m).count("1"))
    for a in masks:
        need = full & ~a
        if any(b & need == need for b in masks):
            return True
    return False
