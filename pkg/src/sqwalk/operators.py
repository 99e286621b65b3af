"""
Orthogonal reflections and the staggered evolution operator.

A reflection ``2 sum_k |v_k><v_k| - I`` is stored by its polygon vectors and
applied matrix-free: one sparse product with the (N x m) matrix whose columns
are the vectors, and one with its adjoint. Uncovered vertices (partial
tessellations) pick up a factor -1, which is how search marks vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.sparse as sp

from .constants import MAX_DENSE_DIM, NORM_TOL
from .errors import (
    DimensionMismatchError,
    EmptyPolygonError,
    InvalidAmplitudesError,
    OutOfRangeError,
    TooLargeError,
    VectorPolygonMismatchError,
)
from .tessellation import Polygon, Tessellation


@dataclass(frozen=True, eq=False)
class PolygonStateVector:
    """Unit vector supported on one polygon, with a nonzero amplitude on every member."""

    polygon: Polygon
    amplitudes: np.ndarray

    def __post_init__(self):
        poly = tuple(int(v) for v in self.polygon)
        if not poly:
            raise EmptyPolygonError("polygon vector needs at least one vertex")
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape != (len(poly),):
            raise InvalidAmplitudesError(f"{amps.size} amplitudes for a {len(poly)}-vertex polygon")
        if np.any(amps == 0):
            raise InvalidAmplitudesError(f"zero amplitude on polygon {poly}")
        if not np.all(np.isfinite(amps)):
            raise InvalidAmplitudesError("non-finite amplitude")
        if abs(np.linalg.norm(amps) - 1.0) > NORM_TOL:
            raise InvalidAmplitudesError(f"amplitudes on {poly} have norm {np.linalg.norm(amps)!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "polygon", poly)
        object.__setattr__(self, "amplitudes", amps)

    def dense(self, n: int) -> np.ndarray:
        v = np.zeros(n, dtype=np.complex128)
        v[list(self.polygon)] = self.amplitudes
        return v


def uniform_polygon_vector(polygon: Sequence[int]) -> PolygonStateVector:
    """Uniform superposition ``|p|^{-1/2} sum_{k in p} |k>``."""
    if len(polygon) == 0:
        raise EmptyPolygonError("polygon is empty")
    d = len(polygon)
    return PolygonStateVector(tuple(polygon), np.full(d, 1 / np.sqrt(d)))


def uniform_vectors(t: Tessellation) -> list[PolygonStateVector]:
    return [uniform_polygon_vector(p) for p in t.polygons]


class Reflection:
    """
    Orthogonal reflection ``2 sum_k |v_k><v_k| - I`` on ``C^n``.

    Parameters
    ----------
    n : int
        Hilbert-space dimension (number of graph vertices).
    vectors : sequence of PolygonStateVector
        Polygon vectors with pairwise disjoint supports.
    """

    def __init__(self, n: int, vectors: Sequence[PolygonStateVector]):
        rows, cols, vals = [], [], []
        seen: set[int] = set()
        for j, vec in enumerate(vectors):
            for v, a in zip(vec.polygon, vec.amplitudes):
                if not 0 <= v < n:
                    raise OutOfRangeError(f"vertex {v} outside 0..{n - 1}")
                if v in seen:
                    raise VectorPolygonMismatchError(f"vertex {v} lies in two polygons")
                seen.add(v)
                rows.append(v)
                cols.append(j)
                vals.append(a)
        self.n = n
        self.vectors = tuple(vectors)
        self._v = sp.csr_matrix((np.asarray(vals, dtype=np.complex128), (rows, cols)),
                                shape=(n, len(vectors)))
        self._vh = self._v.conj().T.tocsr()

    def apply(self, psi: np.ndarray) -> np.ndarray:
        """Apply to a state (shape ``(n,)``) or to the columns of an ``(n, k)`` array."""
        if psi.shape[0] != self.n:
            raise DimensionMismatchError(f"state of length {psi.shape[0]} for dimension {self.n}")
        return 2 * (self._v @ (self._vh @ psi)) - psi

    def dense(self, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
        if self.n > max_dim:
            raise TooLargeError(f"dense realisation capped at dimension {max_dim}")
        vd = self._v.toarray()
        return 2 * vd @ vd.conj().T - np.eye(self.n)

    def __repr__(self) -> str:
        return f"Reflection(n={self.n}, polygons={len(self.vectors)})"


def reflection_from(t: Tessellation, n: int,
                    vectors: Optional[Sequence[PolygonStateVector]] = None) -> Reflection:
    """
    Reflection induced by tessellation ``t`` on ``C^n``.

    ``vectors`` default to uniform superpositions and must otherwise match the
    polygons of ``t`` one-to-one and in order.
    """
    if vectors is None:
        vectors = uniform_vectors(t)
    if len(vectors) != len(t.polygons):
        raise VectorPolygonMismatchError(f"{len(vectors)} vectors for {len(t.polygons)} polygons")
    for i, (poly, vec) in enumerate(zip(t.polygons, vectors)):
        if set(poly) != set(vec.polygon) or len(poly) != len(vec.polygon):
            raise VectorPolygonMismatchError(f"vector {i} is supported on {vec.polygon}, polygon is {poly}")
    return Reflection(n, vectors)


class EvolutionOperator:
    """One staggered step ``U = U1 U0``: first ``u0``, then ``u1``."""

    def __init__(self, u0: Reflection, u1: Reflection):
        if u0.n != u1.n:
            raise DimensionMismatchError(f"reflections act on dimensions {u0.n} and {u1.n}")
        self.u0 = u0
        self.u1 = u1
        self.n = u0.n

    def step(self, psi: np.ndarray) -> np.ndarray:
        return self.u1.apply(self.u0.apply(psi))

    def evolve(self, psi: np.ndarray, steps: int) -> np.ndarray:
        for _ in range(steps):
            psi = self.step(psi)
        return psi

    def dense(self, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
        if self.n > max_dim:
            raise TooLargeError(f"dense realisation capped at dimension {max_dim}")
        return self.step(np.eye(self.n, dtype=np.complex128))


def staggered_walk(n: int, blue: Tessellation, red: Tessellation,
                   blue_vectors: Optional[Sequence[PolygonStateVector]] = None,
                   red_vectors: Optional[Sequence[PolygonStateVector]] = None) -> EvolutionOperator:
    """Convenience constructor: ``U = U1 U0`` with U0 from ``blue`` and U1 from ``red``."""
    return EvolutionOperator(reflection_from(blue, n, blue_vectors), reflection_from(red, n, red_vectors))


def apply_step(ev: EvolutionOperator, psi: np.ndarray) -> np.ndarray:
    """One application of ``U`` without materialising any dense matrix."""
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape[0] != ev.n:
        raise DimensionMismatchError(f"state of length {psi.shape[0]} for dimension {ev.n}")
    return ev.step(psi)


def dense_matrix(ev: EvolutionOperator, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
    """Dense ``U``; column ``j`` is ``apply_step`` on basis vector ``j``."""
    return ev.dense(max_dim)


def basis_state(n: int, v: int) -> np.ndarray:
    psi = np.zeros(n, dtype=np.complex128)
    psi[v] = 1.0
    return psi
