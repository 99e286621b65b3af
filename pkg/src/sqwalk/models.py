"""
Two worked examples of walks with a coined equivalent.

``honeycomb(m)`` inflates each vertex of an m x m honeycomb torus into a
triangle. ``three_state(L, rho)`` is the three-state flip-flop walk on a
ring of L sites written as a staggered walk.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import BadRhoError, OddMError, TooSmallError
from .graph import Graph
from .operators import EvolutionOperator, PolygonStateVector, reflection_from, uniform_vectors
from .tessellation import Tessellation, TessellationPair


@dataclass(frozen=True, eq=False)
class HoneycombModel:
    m: int
    graph: Graph
    pair: TessellationPair

    def index(self, x: int, y: int, i: int, k: int) -> int:
        return honeycomb_index(self.m, x, y, i, k)


def honeycomb_index(m: int, x: int, y: int, i: int, k: int) -> int:
    """Linear index ``((x m + y) 2 + i) 3 + k`` with ``x, y`` taken mod ``m``."""
    return (((x % m) * m + (y % m)) * 2 + i) * 3 + k


def honeycomb(m: int) -> HoneycombModel:
    """
    Triangle-inflated honeycomb on an m x m torus (``6 m^2`` vertices).

    Blue polygons are the triangles ``(x, y, i, 0..2)``. Red polygon ``k`` of
    cell ``(x, y)`` joins ``(x, y, 0, k)`` to ``(x - [k == 1], y - [k == 2], 1, k)``.

    Raises
    ------
    OddMError
        If ``m`` is odd.
    TooSmallError
        If ``m < 2``.
    """
    if m % 2:
        raise OddMError(f"honeycomb needs an even m, got {m}")
    if m < 2:
        raise TooSmallError(f"honeycomb needs m >= 2, got {m}")
    idx = lambda x, y, i, k: honeycomb_index(m, x, y, i, k)  # noqa: E731
    blue, red, edges = [], [], []
    for x in range(m):
        for y in range(m):
            for i in range(2):
                tri = tuple(idx(x, y, i, k) for k in range(3))
                blue.append(tri)
                edges += [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])]
    for x in range(m):
        for y in range(m):
            for k in range(3):
                a = idx(x, y, 0, k)
                b = idx(x - (k == 1), y - (k == 2), 1, k)
                red.append((a, b))
                edges.append((a, b))
    labels = [f"({x},{y},{i},{k})" for x in range(m) for y in range(m) for i in range(2) for k in range(3)]
    g = Graph(6 * m * m, edges, labels)
    return HoneycombModel(m, g, TessellationPair(Tessellation(blue, "blue"), Tessellation(red, "red")))


def honeycomb_walk(model: HoneycombModel,
                   blue_amplitudes: Optional[Sequence[Sequence[complex]]] = None) -> EvolutionOperator:
    """
    Staggered walk on a honeycomb model.

    ``blue_amplitudes`` gives three amplitudes per blue triangle (in polygon
    order); ``None`` means uniform. Red vectors are always uniform.
    """
    n = model.graph.n
    if blue_amplitudes is None:
        bv = uniform_vectors(model.pair.blue)
    else:
        bv = [PolygonStateVector(p, a) for p, a in zip(model.pair.blue.polygons, blue_amplitudes)]
    return EvolutionOperator(reflection_from(model.pair.blue, n, bv),
                             reflection_from(model.pair.red, n, uniform_vectors(model.pair.red)))


def alpha_rho(rho: float) -> np.ndarray:
    """The +1 eigenvector ``(s, rho, s)`` of the coin, ``s = sqrt((1 - rho^2) / 2)``."""
    s = np.sqrt((1 - rho * rho) / 2)
    return np.array([s, rho, s])


def coin_matrix(rho: float) -> np.ndarray:
    """Three-state coin written out entrywise."""
    if not 0 < rho < 1:
        raise BadRhoError(f"rho must lie in (0, 1), got {rho}")
    r2 = rho * rho
    c = rho * np.sqrt(2 - 2 * r2)
    return np.array([[-r2, c, 1 - r2],
                     [c, 2 * r2 - 1, c],
                     [1 - r2, c, -r2]])


@dataclass(frozen=True, eq=False)
class ThreeStateModel:
    L: int
    rho: float
    graph: Graph
    pair: TessellationPair

    def coin(self) -> np.ndarray:
        return coin_matrix(self.rho)

    def alpha(self) -> np.ndarray:
        return alpha_rho(self.rho)

    def blue_vectors(self) -> list[PolygonStateVector]:
        a = self.alpha()
        return [PolygonStateVector(p, a) for p in self.pair.blue.polygons]

    def walk(self) -> EvolutionOperator:
        n = self.graph.n
        return EvolutionOperator(reflection_from(self.pair.blue, n, self.blue_vectors()),
                                 reflection_from(self.pair.red, n))

    def shift_matrix(self) -> np.ndarray:
        """Flip-flop shift on the ring: ``(n,0) -> (n+1,2)``, ``(n,2) -> (n-1,0)``, ``(n,1)`` fixed."""
        L = self.L
        s = np.zeros((3 * L, 3 * L))
        for n in range(L):
            s[3 * ((n + 1) % L) + 2, 3 * n] = 1
            s[3 * n + 1, 3 * n + 1] = 1
            s[3 * ((n - 1) % L), 3 * n + 2] = 1
        return s


def three_state(L: int, rho: float) -> ThreeStateModel:
    """
    Three-state walk on a ring of ``L`` sites; vertex ``(n, i)`` has index ``3 n + i``.

    Blue polygons are the site triangles. Red polygons are the pairs
    ``{(n, 0), (n + 1, 2)}`` and the singletons ``{(n, 1)}``.

    Raises
    ------
    BadRhoError
        Unless ``0 < rho < 1``.
    TooSmallError
        If ``L < 3``.
    """
    if not 0 < rho < 1:
        raise BadRhoError(f"rho must lie in (0, 1), got {rho}")
    if L < 3:
        raise TooSmallError(f"ring needs L >= 3 sites, got {L}")
    blue = [(3 * n, 3 * n + 1, 3 * n + 2) for n in range(L)]
    red: list[tuple[int, ...]] = []
    edges = []
    for n in range(L):
        edges += [(3 * n, 3 * n + 1), (3 * n, 3 * n + 2), (3 * n + 1, 3 * n + 2)]
        a, b = 3 * n, 3 * ((n + 1) % L) + 2
        red.append((a, b))
        edges.append((a, b))
    red += [(3 * n + 1,) for n in range(L)]
    labels = [f"({n},{i})" for n in range(L) for i in range(3)]
    g = Graph(3 * L, edges, labels)
    return ThreeStateModel(L, float(rho), g, TessellationPair(Tessellation(blue, "blue"), Tessellation(red, "red")))


def fig1_pair() -> TessellationPair:
    """Blue {0,1,2,3},{4}; red {0,1},{2,3,4} on the ``fig1`` catalog graph."""
    return TessellationPair(Tessellation([(0, 1, 2, 3), (4,)], "blue"),
                            Tessellation([(0, 1), (2, 3, 4)], "red"))


def barbell_pair(variant: str) -> TessellationPair:
    """
    Tessellations of ``barbell(3)``.

    ``"b"`` puts the bridge alone in a red polygon (no shared edges);
    ``"a"`` pairs the outer vertices of each triangle in red as well, so two
    edges lie in both tessellations.
    """
    blue = Tessellation([(0, 1, 2), (3, 4, 5)], "blue")
    if variant == "b":
        return TessellationPair(blue, Tessellation([(2, 3), (0,), (1,), (4,), (5,)], "red"))
    if variant == "a":
        return TessellationPair(blue, Tessellation([(2, 3), (0, 1), (4, 5)], "red"))
    raise ValueError(f"barbell variant must be 'a' or 'b', got {variant!r}")
