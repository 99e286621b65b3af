"""
Named graphs with frozen vertex numbering.

========== ============ ==================================================
name       params       numbering
========== ============ ==================================================
complete   n            0..n-1
cycle      n >= 3       edges (i, i+1 mod n)
path       n >= 1       edges (i, i+1), n vertices
claw       -            centre 0, leaves 1, 2, 3
diamond    -            K4 on 0..3 minus the edge (0, 3)
beineke    1..9         see ``BEINEKE_EDGES``
hajos      -            central triangle 0,1,2; vertex 3 on (0,1), 4 on
                        (1,2), 5 on (0,2)
barbell    k >= 3       cliques 0..k-1 and k..2k-1 joined by (k-1, k);
                        default k = 3
fig1       -            K4 on 0..3 plus vertex 4 joined to 2 and 3
========== ============ ==================================================

The nine Beineke graphs are the minimal non-line graphs. Their order follows
the usual literature listing: 1 is the claw, 3 is K5 minus an edge, 6 is two
K4 sharing an edge, 7 has a 5-cycle clique graph, 9 is the wheel W5.
"""

from __future__ import annotations

import re
from itertools import combinations

from .errors import BadParamsError, UnknownNameError
from .graph import Graph

BEINEKE_EDGES: dict[int, tuple[int, list[tuple[int, int]]]] = {
    1: (4, [(0, 1), (0, 2), (0, 3)]),
    2: (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)]),
    3: (5, [(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    4: (6, [(0, 1), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (4, 5)]),
    5: (6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (4, 5)]),
    6: (6, [(0, 1), (0, 2), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4),
            (3, 5), (4, 5)]),
    7: (6, [(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4)]),
    8: (6, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]),
    9: (6, [(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (3, 5),
            (4, 5)]),
}


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParamsError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise BadParamsError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def beineke(i: int) -> Graph:
    if i not in BEINEKE_EDGES:
        raise BadParamsError(f"Beineke graphs are numbered 1..9, got {i}")
    n, edges = BEINEKE_EDGES[i]
    return Graph(n, edges)


def barbell(k: int = 3) -> Graph:
    if k < 3:
        raise BadParamsError(f"barbell clique size must be >= 3, got {k}")
    edges = list(combinations(range(k), 2)) + list(combinations(range(k, 2 * k), 2))
    return Graph(2 * k, edges + [(k - 1, k)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts 0..m-1 and m..m+n-1."""
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


_FIXED = {
    "claw": lambda: Graph(4, [(0, 1), (0, 2), (0, 3)]),
    "diamond": lambda: Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "hajos": lambda: Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4),
                               (0, 5), (2, 5)]),
    "fig1": lambda: Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4),
                              (3, 4)]),
}
_PARAMETRIC = {
    "complete": (complete, 1, 1),
    "cycle": (cycle, 1, 1),
    "path": (path, 1, 1),
    "beineke": (beineke, 1, 1),
    "barbell": (barbell, 0, 1),
    "complete_bipartite": (complete_bipartite, 2, 2),
}
_CALL = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\((.*)\))?\s*$")


def named_graph(name: str, *params: int) -> Graph:
    """
    Look up a catalog graph, e.g. ``named_graph("cycle", 5)`` or
    ``named_graph("beineke(1)")``.

    Raises
    ------
    UnknownNameError
        If the name is not in the catalog.
    BadParamsError
        On a wrong number or value of parameters.
    """
    m = _CALL.match(name)
    if m is None:
        raise UnknownNameError(f"unknown graph name {name!r}")
    key, inline = m.group(1), m.group(2)
    if inline is not None:
        if params:
            raise BadParamsError("parameters given both inline and as arguments")
        try:
            params = tuple(int(s) for s in inline.split(",") if s.strip())
        except ValueError as exc:
            raise BadParamsError(f"non-integer parameter in {name!r}") from exc
    if key in _FIXED:
        if params:
            raise BadParamsError(f"{key} takes no parameters")
        return _FIXED[key]()
    if key in _PARAMETRIC:
        fn, lo, hi = _PARAMETRIC[key]
        if not lo <= len(params) <= hi:
            raise BadParamsError(f"{key} takes {lo}..{hi} parameters, got {len(params)}")
        if key == "complete" and params[0] < 0:
            raise BadParamsError("complete graph needs n >= 0")
        return fn(*params)
    raise UnknownNameError(f"unknown graph name {name!r}")


CATALOG_NAMES = sorted(list(_FIXED) + list(_PARAMETRIC))
