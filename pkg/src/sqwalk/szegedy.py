"""
Extended Szegedy walks and the conversion from staggered walks.

The Szegedy Hilbert space is ``C^m (x) C^n`` with basis index ``x * n + y``.
A staggered walk whose blue and red polygons meet in at most one vertex maps
into it: vertex ``k`` in blue polygon ``i`` and red polygon ``j`` is sent to
the basis state ``(i, j)``. Pairs ``(i, j)`` hit by no vertex span the idle
subspace, where the Szegedy walk acts as the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .constants import MAX_DENSE_DIM, NORM_TOL, OPERATOR_TOL
from .errors import (
    DimensionMismatchError,
    EdgeInIntersectionError,
    NotStochasticError,
    SupportMismatchError,
    TooLargeError,
)
from .graph import Graph
from .operators import EvolutionOperator, PolygonStateVector, reflection_from, uniform_vectors
from .tessellation import TessellationPair, check_tessellation, intersection_edges


@dataclass(frozen=True, eq=False)
class SzegedyInstance:
    """
    Extended Szegedy walk ``W = R1 R0`` on ``C^m (x) C^n``.

    Attributes
    ----------
    P, Q : ndarray
        Right-stochastic ``(m, n)`` and ``(n, m)`` transition matrices.
    theta, theta_prime : ndarray
        ``(m, n)`` phase arrays; ``|phi_x>`` carries ``e^{i theta[x, y]}`` on
        ``|x, y>`` and ``|psi_y>`` carries ``e^{i theta_prime[x, y]}``.
    embedding : ndarray or None
        For converted walks, ``embedding[k]`` is the basis index ``i * n + j``
        of vertex ``k``.
    """

    P: np.ndarray
    Q: np.ndarray
    theta: np.ndarray
    theta_prime: np.ndarray
    embedding: Optional[np.ndarray] = None

    @property
    def m(self) -> int:
        return self.P.shape[0]

    @property
    def n(self) -> int:
        return self.P.shape[1]

    @property
    def dim(self) -> int:
        return self.m * self.n

    @property
    def idle_dimension(self) -> int:
        """``m n - N`` for converted walks, else the number of zero entries of P."""
        if self.embedding is None:
            return int(np.count_nonzero(self.P == 0))
        return self.dim - len(self.embedding)

    def root(self) -> Graph:
        """Bipartite root: blue part ``0..m-1``, red part ``m..m+n-1``."""
        xs, ys = np.nonzero(self.P)
        return Graph(self.m + self.n, [(int(x), self.m + int(y)) for x, y in zip(xs, ys)])

    def phi(self) -> np.ndarray:
        """Columns are ``|phi_x>``, shape ``(m n, m)``."""
        m, n = self.m, self.n
        out = np.zeros((m * n, m), dtype=np.complex128)
        for x in range(m):
            out[x * n:(x + 1) * n, x] = np.sqrt(self.P[x]) * np.exp(1j * self.theta[x])
        return out

    def psi(self) -> np.ndarray:
        """Columns are ``|psi_y>``, shape ``(m n, n)``."""
        m, n = self.m, self.n
        out = np.zeros((m * n, n), dtype=np.complex128)
        for y in range(n):
            out[np.arange(m) * n + y, y] = np.sqrt(self.Q[y]) * np.exp(1j * self.theta_prime[:, y])
        return out

    def _check_dim(self, max_dim: int) -> None:
        if self.dim > max_dim:
            raise TooLargeError(f"dense Szegedy operators capped at dimension {max_dim}, got {self.dim}")

    def r0(self, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
        self._check_dim(max_dim)
        a = self.phi()
        return 2 * a @ a.conj().T - np.eye(self.dim)

    def r1(self, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
        self._check_dim(max_dim)
        b = self.psi()
        return 2 * b @ b.conj().T - np.eye(self.dim)

    def walk(self, max_dim: int = MAX_DENSE_DIM) -> np.ndarray:
        return self.r1(max_dim) @ self.r0(max_dim)

    def embed(self, psi: np.ndarray) -> np.ndarray:
        """``T psi``: place vertex amplitudes at their ``(i, j)`` basis states."""
        if self.embedding is None:
            raise ValueError("instance has no embedding")
        out = np.zeros(self.dim, dtype=np.complex128)
        out[self.embedding] = psi
        return out


def _check_stochastic(name: str, a: np.ndarray) -> None:
    if np.any(a < 0) or not np.all(np.isfinite(a)):
        raise NotStochasticError(f"{name} has negative or non-finite entries")
    dev = np.max(np.abs(a.sum(axis=1) - 1.0)) if a.size else 0.0
    if dev > NORM_TOL:
        raise NotStochasticError(f"rows of {name} sum to 1 only within {dev:.3g}")


def szegedy_from_matrices(P, Q, theta=None, theta_prime=None,
                          embedding: Optional[Sequence[int]] = None) -> SzegedyInstance:
    """
    Build an extended Szegedy walk from stochastic matrices and phases.

    Parameters
    ----------
    P : array_like, shape (m, n)
    Q : array_like, shape (n, m)
    theta, theta_prime : array_like, shape (m, n), optional
        Phases; zero gives the original phase-free walk.

    Raises
    ------
    NotStochasticError
        If a row of P or Q fails to sum to one or has a negative entry.
    SupportMismatchError
        If the zero patterns of P and Q transposed differ.
    """
    P = np.asarray(P, dtype=float)
    Q = np.asarray(Q, dtype=float)
    if P.ndim != 2 or Q.shape != P.shape[::-1]:
        raise DimensionMismatchError(f"P has shape {P.shape}, Q has shape {Q.shape}")
    _check_stochastic("P", P)
    _check_stochastic("Q", Q)
    if not np.array_equal(P > 0, Q.T > 0):
        raise SupportMismatchError("nonzero patterns of P and Q^T differ")
    theta = np.zeros(P.shape) if theta is None else np.asarray(theta, dtype=float)
    theta_prime = np.zeros(P.shape) if theta_prime is None else np.asarray(theta_prime, dtype=float)
    if theta.shape != P.shape or theta_prime.shape != P.shape:
        raise DimensionMismatchError("phase arrays must have the shape of P")
    emb = None if embedding is None else np.asarray(embedding, dtype=np.intp)
    inst = SzegedyInstance(P, Q, theta, theta_prime, emb)
    for name, cols in (("phi", inst.phi()), ("psi", inst.psi())):
        gram = cols.conj().T @ cols
        if np.max(np.abs(gram - np.eye(gram.shape[0]))) > OPERATOR_TOL:
            raise NotStochasticError(f"{name} vectors are not orthonormal")
    return inst


def szegedy_convert(g: Graph, pair: TessellationPair,
                    blue_vectors: Optional[Sequence[PolygonStateVector]] = None,
                    red_vectors: Optional[Sequence[PolygonStateVector]] = None) -> SzegedyInstance:
    """
    Cast a staggered walk as an extended Szegedy walk.

    Blue polygons become the ``m`` vertices of one side of the bipartite
    root, red polygons the ``n`` vertices of the other, and each graph vertex
    the root edge joining its two polygons. ``p[i, j]`` is the squared
    modulus of the blue amplitude on that vertex and ``theta[i, j]`` its
    argument; ``Q`` and ``theta_prime`` come from the red amplitudes.

    Raises
    ------
    EdgeInIntersectionError
        If a blue and a red polygon share two or more vertices.
    """
    check_tessellation(g, pair.blue)
    check_tessellation(g, pair.red)
    shared = intersection_edges(pair)
    if shared:
        raise EdgeInIntersectionError(f"edges {shared} lie in both tessellations")
    blue_vectors = uniform_vectors(pair.blue) if blue_vectors is None else list(blue_vectors)
    red_vectors = uniform_vectors(pair.red) if red_vectors is None else list(red_vectors)
    # validates vectors against polygons
    reflection_from(pair.blue, g.n, blue_vectors)
    reflection_from(pair.red, g.n, red_vectors)
    m, n = len(pair.blue), len(pair.red)
    blue_of = pair.blue.polygon_of(g.n)
    red_of = pair.red.polygon_of(g.n)
    amp_a = np.zeros(g.n, dtype=np.complex128)
    amp_b = np.zeros(g.n, dtype=np.complex128)
    for vec in blue_vectors:
        amp_a[list(vec.polygon)] = vec.amplitudes
    for vec in red_vectors:
        amp_b[list(vec.polygon)] = vec.amplitudes
    P = np.zeros((m, n))
    Q = np.zeros((n, m))
    theta = np.zeros((m, n))
    theta_p = np.zeros((m, n))
    emb = np.empty(g.n, dtype=np.intp)
    for k in range(g.n):
        i, j = blue_of[k], red_of[k]
        emb[k] = i * n + j
        P[i, j] = abs(amp_a[k]) ** 2
        Q[j, i] = abs(amp_b[k]) ** 2
        theta[i, j] = np.angle(amp_a[k])
        theta_p[i, j] = np.angle(amp_b[k])
    return szegedy_from_matrices(P, Q, theta, theta_p, emb)


def block_order(inst: SzegedyInstance) -> np.ndarray:
    """Basis permutation listing T-images by vertex, then idle states ascending."""
    used = set(inst.embedding.tolist())
    idle = [b for b in range(inst.dim) if b not in used]
    return np.concatenate([inst.embedding, np.asarray(idle, dtype=np.intp)])


def verify_block_structure(inst: SzegedyInstance, ev: EvolutionOperator,
                           tol: float = OPERATOR_TOL, n_random: int = 4,
                           seed: int = 0) -> tuple[bool, float]:
    """
    Certify ``W = [[U, 0], [0, I]]`` and ``R0 = [[U0, 0], [0, -I]]``.

    Rows and columns are reordered by :func:`block_order`. Also checks
    ``T U psi = W T psi`` on ``n_random`` random states. Returns the verdict
    and the largest entrywise deviation seen.
    """
    if inst.embedding is None or len(inst.embedding) != ev.n:
        raise DimensionMismatchError("instance was not converted from a walk of this dimension")
    N = ev.n
    order = block_order(inst)
    w = inst.walk()[np.ix_(order, order)]
    r0 = inst.r0()[np.ix_(order, order)]
    u = ev.dense()
    u0 = ev.u0.dense()
    idle = inst.dim - N
    want_w = np.zeros_like(w)
    want_w[:N, :N] = u
    want_w[N:, N:] = np.eye(idle)
    want_r0 = np.zeros_like(r0)
    want_r0[:N, :N] = u0
    want_r0[N:, N:] = -np.eye(idle)
    dev = max(np.max(np.abs(w - want_w)), np.max(np.abs(r0 - want_r0)))
    rng = np.random.default_rng(seed)
    wfull = inst.walk()
    for _ in range(n_random):
        psi = rng.normal(size=N) + 1j * rng.normal(size=N)
        psi /= np.linalg.norm(psi)
        lhs = inst.embed(ev.step(psi))
        rhs = wfull @ inst.embed(psi)
        dev = max(dev, np.max(np.abs(lhs - rhs)))
    return bool(dev < tol), float(dev)
