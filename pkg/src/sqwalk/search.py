"""
Spatial search with a partial tessellation on the 8-clique torus.

The search graph has one 8-clique per cell ``(x, y)`` of an n x n torus.
Red 4-cliques join neighbouring cells: ``{(x,y,0), (x,y,7), (x+1,y,3),
(x+1,y,4)}`` and ``{(x,y,1), (x,y,2), (x,y+1,5), (x,y+1,6)}``. Leaving the
marked cell's 8-clique out of the blue tessellation makes its vertices
pick up a sign under the blue reflection, and that sign drives the search.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

import numpy as np
import scipy.sparse as sp
from scipy.optimize import curve_fit

from .errors import BadParamsError, NoPeakError, TooSmallError, ZeroProbabilityError
from .graph import Graph
from .operators import EvolutionOperator, reflection_from
from .tessellation import Tessellation, validate_tessellation

log = logging.getLogger(__name__)

PEAK_TOL = 1e-12


def torus_index(n: int, x: int, y: int, k: int) -> int:
    """Linear index ``((x n + y) 8 + k)`` with ``x, y`` taken mod ``n``."""
    return ((x % n) * n + (y % n)) * 8 + k


@dataclass(frozen=True, eq=False)
class SearchInstance:
    n: int
    graph: Graph
    blue: Tessellation
    red: Tessellation
    marked: tuple[int, ...]
    marked_cell: tuple[int, int]
    walk: EvolutionOperator

    @property
    def N(self) -> int:
        return self.graph.n


def torus_instance(n: int, marked_cell: tuple[int, int] = (0, 0)) -> SearchInstance:
    """
    Build the ``N = 8 n^2`` search graph with one blue 8-clique left out.

    Raises
    ------
    TooSmallError
        If ``n < 2``.
    """
    if n < 2:
        raise TooSmallError(f"torus side must be >= 2, got {n}")
    x0, y0 = marked_cell[0] % n, marked_cell[1] % n
    idx = lambda x, y, k: torus_index(n, x, y, k)  # noqa: E731
    blue, red = [], []
    edges: set[tuple[int, int]] = set()
    for x in range(n):
        for y in range(n):
            cell = tuple(idx(x, y, k) for k in range(8))
            if (x, y) != (x0, y0):
                blue.append(cell)
            red.append((idx(x, y, 0), idx(x, y, 7), idx(x + 1, y, 3), idx(x + 1, y, 4)))
            red.append((idx(x, y, 1), idx(x, y, 2), idx(x, y + 1, 5), idx(x, y + 1, 6)))
            for group in (cell, red[-2], red[-1]):
                edges.update((min(u, v), max(u, v)) for u, v in combinations(group, 2))
    N = 8 * n * n
    labels = [f"({x},{y},{k})" for x in range(n) for y in range(n) for k in range(8)]
    g = Graph(N, edges, labels)
    bt, rt = Tessellation(blue, "blue"), Tessellation(red, "red")
    walk = EvolutionOperator(reflection_from(bt, N), reflection_from(rt, N))
    marked = tuple(idx(x0, y0, k) for k in range(8))
    return SearchInstance(n, g, bt, rt, marked, (x0, y0), walk)


def check_search_instance(inst: SearchInstance) -> list[str]:
    """
    Combinatorial checks on an instance; returns a list of problems (empty if fine).

    Marked vertices must lie in exactly one polygon and all others in two,
    every vertex must be covered. The marked clique's edges must exist, lie
    in no blue polygon, and (apart from the few that sit in red 4-cliques)
    lie outside every polygon.
    """
    problems = []
    g = inst.graph
    bad = validate_tessellation(g, inst.blue, complete=False)
    if bad is not None:
        problems.append(f"blue: {bad}")
    bad = validate_tessellation(g, inst.red, complete=True)
    if bad is not None:
        problems.append(f"red: {bad}")
    count = np.zeros(g.n, dtype=int)
    for t in (inst.blue, inst.red):
        for p in t.polygons:
            count[list(p)] += 1
    marked = set(inst.marked)
    for v in range(g.n):
        want = 1 if v in marked else 2
        if count[v] != want:
            problems.append(f"vertex {v} lies in {count[v]} polygons, expected {want}")
    blue_edges = inst.blue.edges()
    covered = blue_edges | inst.red.edges()
    loose = 0
    for u, v in combinations(sorted(inst.marked), 2):
        if not g.has_edge(u, v):
            problems.append(f"marked clique misses edge ({u}, {v})")
        elif (u, v) in blue_edges:
            problems.append(f"marked edge ({u}, {v}) lies in a blue polygon")
        loose += (u, v) not in covered
    if not loose:
        problems.append("every marked edge lies in some polygon")
    return problems


def uniform_state(N: int) -> np.ndarray:
    if N < 1:
        raise BadParamsError(f"state dimension must be >= 1, got {N}")
    return np.full(N, 1 / math.sqrt(N), dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class SearchResult:
    """
    Marked-set probability ``p[t]`` for ``t = 0..t_max``.

    ``norm_drift[t]`` is ``| ||psi_t|| - 1 |``. ``raw_sums`` holds the plain
    (not squared) sum of marked amplitudes when requested; it is kept only
    for comparison and is not a probability.
    """

    N: int
    p: np.ndarray
    norm_drift: np.ndarray
    raw_sums: Optional[np.ndarray] = None

    def peak(self) -> tuple[int, float]:
        return peak(self.p)


def run_search(inst: SearchInstance, t_max: int, raw_sums: bool = False,
               psi0: Optional[np.ndarray] = None) -> SearchResult:
    """Evolve ``U^t psi0`` (uniform by default) and record the marked probability."""
    if t_max < 1:
        raise BadParamsError(f"t_max must be >= 1, got {t_max}")
    psi = uniform_state(inst.N) if psi0 is None else np.asarray(psi0, dtype=np.complex128)
    marked = np.asarray(inst.marked)
    p = np.empty(t_max + 1)
    drift = np.empty(t_max + 1)
    sums = np.empty(t_max + 1, dtype=np.complex128) if raw_sums else None
    for t in range(t_max + 1):
        amps = psi[marked]
        p[t] = float(np.vdot(amps, amps).real)
        drift[t] = abs(np.linalg.norm(psi) - 1.0)
        if sums is not None:
            sums[t] = amps.sum()
        if t < t_max:
            psi = inst.walk.step(psi)
    return SearchResult(inst.N, p, drift, sums)


def peak(series: Sequence[float], tol: float = PEAK_TOL) -> tuple[int, float]:
    """
    First local maximum of a series that rises above its initial value.

    A run of equal values (within ``tol``) counts as one point: the peak is
    the start of the first run that is entered by a strict rise, left by a
    strict fall, and sits above ``series[0]``. The walk's probability series
    comes in equal consecutive pairs, so a pointwise test would stop at the
    first pair.

    Raises
    ------
    NoPeakError
        If no such maximum exists.
    """
    p = np.asarray(series, dtype=float)
    if len(p) < 3:
        raise BadParamsError("peak detection needs at least three values")
    t = 1
    while t < len(p) - 1:
        if p[t] > p[t - 1] + tol:
            end = t
            while end + 1 < len(p) and abs(p[end + 1] - p[t]) <= tol:
                end += 1
            if end + 1 < len(p) and p[end + 1] < p[t] - tol and p[t] > p[0]:
                return t, float(p[t])
            t = end + 1
        else:
            t += 1
    raise NoPeakError("series has no interior maximum above its start")


def _sine2(t, amp, omega, base):
    return amp * np.sin(omega * t) ** 2 + base


def fitted_peak(series: Sequence[float], window: float = 2.0) -> tuple[float, float]:
    """
    Peak of a fitted ``A sin^2(w t) + C`` curve.

    The fit uses ``t <= window * t0 + 1``, where ``t0`` is the raw peak.
    Returns the first maximum ``(pi / (2 w), A + C)``.
    """
    p = np.asarray(series, dtype=float)
    t0, p0 = peak(p)
    ts = np.arange(len(p))
    sel = ts <= window * t0 + 1
    (amp, omega, base), _ = curve_fit(_sine2, ts[sel], p[sel], p0=[p0, math.pi / 2 / t0, p[0]])
    omega = abs(omega)
    return math.pi / 2 / omega, float(_sine2(math.pi / 2 / omega, amp, omega, base))


def fit_power_law(N: Sequence[float], t: Sequence[float]) -> tuple[float, float, float]:
    """Least-squares ``t = a N^b`` on log-log axes; returns ``(a, b, residual norm)``."""
    x, y = np.log(np.asarray(N, float)), np.log(np.asarray(t, float))
    (b, ln_a), res, *_ = np.polyfit(x, y, 1, full=True)
    return float(math.exp(ln_a)), float(b), float(math.sqrt(res[0])) if len(res) else 0.0


def fit_log_decay(N: Sequence[float], p: Sequence[float]) -> tuple[float, float, float]:
    """Least-squares ``p = c / (ln N)^d`` via ``ln(1/p)`` against ``ln ln N``."""
    x = np.log(np.log(np.asarray(N, float)))
    y = np.log(1 / np.asarray(p, float))
    (d, neg_ln_c), res, *_ = np.polyfit(x, y, 1, full=True)
    return float(math.exp(-neg_ln_c)), float(d), float(math.sqrt(res[0])) if len(res) else 0.0


@dataclass(frozen=True)
class ScalingFit:
    """``t* ~ a N^b`` and ``p* ~ c / (ln N)^d`` with residual norms and data points."""

    a: float
    b: float
    c: float
    d: float
    residual_t: float
    residual_p: float
    points: tuple = field(default=())  # (n, N, t*, p*)

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d,
                "residual_t": self.residual_t, "residual_p": self.residual_p,
                "points": [{"n": n, "N": N, "t_star": t, "p_star": p} for n, N, t, p in self.points]}


def default_t_max(N: int) -> int:
    return int(2 * math.sqrt(N)) + 20


def _one_point(args) -> tuple[int, int, Optional[float], Optional[float], np.ndarray]:
    n, t_max, method = args
    inst = torus_instance(n)
    res = run_search(inst, t_max or default_t_max(inst.N))
    try:
        t, p = fitted_peak(res.p) if method == "sine" else peak(res.p)
    except NoPeakError:
        return n, inst.N, None, None, res.p
    return n, inst.N, float(t), float(p), res.p


def search_sweep(n_values: Sequence[int], t_max: Optional[int] = None, method: str = "raw",
                 workers: Optional[int] = None) -> list[tuple]:
    """Run every instance; returns ``(n, N, t*, p*, series)`` with ``None`` peaks on failure."""
    if method not in ("raw", "sine"):
        raise BadParamsError(f"unknown peak method {method!r}")
    jobs = [(n, t_max, method) for n in n_values]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_one_point, jobs))
    return [_one_point(j) for j in jobs]


def fit_sweep(rows: Sequence[tuple]) -> ScalingFit:
    """Fit both laws to sweep rows, skipping instances without a peak."""
    kept = []
    for n, N, t, p, *_ in rows:
        if t is None:
            log.warning("no peak for n=%d; instance skipped", n)
        else:
            kept.append((n, N, t, p))
    if len(kept) < 4:
        raise NoPeakError(f"only {len(kept)} instances have a peak; at least 4 needed")
    Ns = [r[1] for r in kept]
    a, b, rt = fit_power_law(Ns, [r[2] for r in kept])
    c, d, rp = fit_log_decay(Ns, [r[3] for r in kept])
    return ScalingFit(a, b, c, d, rt, rp, tuple(kept))


def scaling_experiment(n_values: Sequence[int], t_max: Optional[int] = None, method: str = "raw",
                       workers: Optional[int] = None) -> ScalingFit:
    """
    Run the search for each torus side in ``n_values`` and fit both laws.

    ``method="raw"`` takes peaks from the simulated series (see :func:`peak`);
    ``method="sine"`` takes them from a fitted ``A sin^2(w t) + C`` curve.
    """
    if len(n_values) < 4:
        raise BadParamsError("scaling fit needs at least four sizes")
    return fit_sweep(search_sweep(n_values, t_max, method, workers))


def amplified_cost(t_star: float, p_star: float) -> float:
    """Total cost ``t* / sqrt(p*)`` of repeating the walk under amplitude amplification."""
    if p_star <= 0:
        raise ZeroProbabilityError("success probability must be positive")
    return t_star / math.sqrt(p_star)


def random_walk_hitting_time(g: Graph, targets: Sequence[int], walkers: int = 4000,
                             seed: int = 12345, max_steps: int = 10_000_000) -> float:
    """
    Monte-Carlo mean hitting time of the simple random walk.

    Walkers start at uniformly random vertices (a start inside ``targets``
    counts as time 0) and move to a uniformly random neighbour each step.
    """
    rng = np.random.default_rng(seed)
    adj = sp.csr_matrix((np.ones(2 * g.edge_count),
                         (np.r_[[u for u, _ in g.edges], [v for _, v in g.edges]],
                          np.r_[[v for _, v in g.edges], [u for u, _ in g.edges]])),
                        shape=(g.n, g.n))
    ptr, nbr = adj.indptr, adj.indices
    deg = np.diff(ptr)
    if np.any(deg == 0):
        raise BadParamsError("random walk needs a graph without isolated vertices")
    is_target = np.zeros(g.n, dtype=bool)
    is_target[list(targets)] = True
    pos = rng.integers(0, g.n, size=walkers)
    alive = ~is_target[pos]
    pos = pos[alive]
    total = 0
    step = 0
    while pos.size and step < max_steps:
        step += 1
        pos = nbr[ptr[pos] + (rng.random(pos.size) * deg[pos]).astype(np.intp)]
        hit = is_target[pos]
        total += step * int(hit.sum())
        pos = pos[~hit]
    if pos.size:
        raise BadParamsError(f"{pos.size} walkers still running after {max_steps} steps")
    return total / walkers
