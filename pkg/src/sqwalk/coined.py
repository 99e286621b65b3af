"""
Reduction of a staggered walk to a flip-flop coined walk.

When every red polygon is an edge (or a lone vertex) and the red vectors are
uniform, the red reflection is just the permutation swapping the two ends of
each red edge. Renumbering vertices so each blue polygon is contiguous makes
the blue reflection block diagonal: one coin per blue polygon. Each blue
d-clique then plays the role of a degree-d vertex of a smaller multigraph
whose edges are the red pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.sparse as sp

from .constants import MAX_DENSE_DIM, NORM_TOL
from .errors import NonUniformMatchingVectorError, NotClass2bPrimeError, TooLargeError
from .graph import Graph
from .operators import PolygonStateVector, reflection_from, uniform_vectors
from .tessellation import TessellationPair, check_tessellation


@dataclass(frozen=True, eq=False)
class CoinedWalk:
    """
    Coined form ``U = S C`` of a staggered walk, in the reduced vertex order.

    Attributes
    ----------
    order : ndarray
        ``order[r]`` is the original vertex placed at reduced position ``r``.
        Blue polygons occupy consecutive positions, in polygon order.
    coin_blocks : tuple of ndarray
        ``2 |a><a| - I`` for each blue polygon vector ``a``.
    shift_perm : ndarray
        Reduced-order involution: the flip-flop shift sends position ``r`` to
        ``shift_perm[r]``.
    arcs : tuple of (int, int)
        Multigraph edges between blue polygons, one per red pair.
    loops : tuple of int
        Blue polygon of each red singleton (a half-edge that reflects).
    """

    order: np.ndarray
    coin_blocks: tuple
    shift_perm: np.ndarray
    arcs: tuple
    loops: tuple

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def perfect_matching(self) -> bool:
        """True when the red polygons form a perfect matching (no loops)."""
        return not self.loops

    def degrees(self) -> list[int]:
        """A blue d-clique becomes a vertex of degree d."""
        return [b.shape[0] for b in self.coin_blocks]

    def multigraph(self) -> dict:
        return {"vertices": len(self.coin_blocks), "degrees": self.degrees(),
                "edges": [list(a) for a in self.arcs], "loops": list(self.loops)}

    def coin(self) -> sp.csr_matrix:
        return sp.block_diag(self.coin_blocks, format="csr")

    def shift(self) -> sp.csr_matrix:
        n = self.n
        return sp.csr_matrix((np.ones(n), (self.shift_perm, np.arange(n))), shape=(n, n))

    def reduced_matrix(self, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
        """Dense ``S C`` in the reduced order."""
        if self.n > max_dim:
            raise TooLargeError(f"dense realisation capped at dimension {max_dim}")
        return (self.shift() @ self.coin()).toarray()

    def recompose(self, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
        """``S C`` mapped back to the original vertex numbering."""
        red = self.reduced_matrix(max_dim)
        out = np.empty_like(red)
        out[np.ix_(self.order, self.order)] = red
        return out


def _is_uniform(vec: PolygonStateVector) -> bool:
    a = vec.amplitudes
    return bool(np.max(np.abs(a - a[0])) <= NORM_TOL)


def coined_reduce(g: Graph, pair: TessellationPair,
                  blue_vectors: Optional[Sequence[PolygonStateVector]] = None,
                  red_vectors: Optional[Sequence[PolygonStateVector]] = None) -> CoinedWalk:
    """
    Rewrite ``U = U1 U0`` as a flip-flop shift times a block-diagonal coin.

    Red polygons must have one or two vertices. A two-vertex red polygon with
    equal amplitudes reflects to the swap of its ends; a one-vertex polygon
    reflects to the identity and becomes a loop.

    Raises
    ------
    NotClass2bPrimeError
        If a red polygon has more than two vertices or lies inside one blue
        polygon.
    NonUniformMatchingVectorError
        If a red pair carries unequal amplitudes.
    """
    check_tessellation(g, pair.blue)
    check_tessellation(g, pair.red)
    blue_vectors = uniform_vectors(pair.blue) if blue_vectors is None else list(blue_vectors)
    red_vectors = uniform_vectors(pair.red) if red_vectors is None else list(red_vectors)
    reflection_from(pair.blue, g.n, blue_vectors)
    reflection_from(pair.red, g.n, red_vectors)
    blue_of = pair.blue.polygon_of(g.n)

    order = np.asarray([v for p in pair.blue.polygons for v in p], dtype=np.intp)
    pos = np.empty(g.n, dtype=np.intp)
    pos[order] = np.arange(g.n)
    shift = np.arange(g.n)
    arcs, loops = [], []
    for poly, vec in zip(pair.red.polygons, red_vectors):
        if len(poly) > 2:
            raise NotClass2bPrimeError(f"red polygon {poly} is not a matching edge")
        if len(poly) == 1:
            loops.append(blue_of[poly[0]])
            continue
        u, v = poly
        if blue_of[u] == blue_of[v]:
            raise NotClass2bPrimeError(f"red edge {poly} lies inside a blue polygon")
        if not _is_uniform(vec):
            raise NonUniformMatchingVectorError(f"red pair {poly} has amplitudes {vec.amplitudes.tolist()}")
        shift[pos[u]], shift[pos[v]] = pos[v], pos[u]
        arcs.append((min(blue_of[u], blue_of[v]), max(blue_of[u], blue_of[v])))
    blocks = tuple(2 * np.outer(vec.amplitudes, vec.amplitudes.conj()) - np.eye(len(vec.polygon))
                   for vec in blue_vectors)
    return CoinedWalk(order, blocks, shift, tuple(arcs), tuple(loops))


def grover_coin(d: int) -> np.ndarray:
    """``(2/d) J - I``."""
    return np.full((d, d), 2.0 / d) - np.eye(d)
