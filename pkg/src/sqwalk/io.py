"""
Plain-text file formats.

* Edge list: first non-comment line is the vertex count ``N``, then one
  ``u v`` pair per line. ``#`` starts a comment. Writers emit sorted edges.
* Tessellation: JSON object ``{"blue": [[v, ...], ...], "red": [...]}``.
* Amplitudes: CSV with header ``polygon_index,vertex,re,im``.
* Dense matrix: CSV of complex entries written as ``re+imj``.
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import ParseError
from .graph import Graph
from .operators import PolygonStateVector
from .tessellation import Tessellation, TessellationPair

PathLike = Union[str, Path]


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; see the module docstring."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("edge list is empty")
    lineno, head = rows[0]
    if len(head) != 1:
        raise ParseError(f"line {lineno}: expected the vertex count alone")
    try:
        n = int(head[0])
        pairs = []
        for lineno, parts in rows[1:]:
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected two vertices, got {len(parts)} fields")
            pairs.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"line {lineno}: {exc}") from exc
    return Graph(n, pairs)


def read_edge_list(path: PathLike) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_edge_list(g))


def format_tessellations(pair: TessellationPair) -> str:
    data = {"blue": [list(p) for p in pair.blue.polygons], "red": [list(p) for p in pair.red.polygons]}
    return json.dumps(data) + "\n"


def parse_tessellations(text: str) -> TessellationPair:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"tessellation file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or set(data) != {"blue", "red"}:
        raise ParseError('tessellation file must be an object with keys "blue" and "red"')
    out = []
    for key in ("blue", "red"):
        polys = data[key]
        if not isinstance(polys, list) or not all(
                isinstance(p, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in p)
                for p in polys):
            raise ParseError(f'"{key}" must be a list of integer lists')
        out.append(Tessellation(polys, key))
    return TessellationPair(*out)


def read_tessellations(path: PathLike) -> TessellationPair:
    return parse_tessellations(Path(path).read_text())


def write_tessellations(pair: TessellationPair, path: PathLike) -> None:
    Path(path).write_text(format_tessellations(pair))


def format_amplitudes(vectors: Sequence[PolygonStateVector]) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["polygon_index", "vertex", "re", "im"])
    for i, vec in enumerate(vectors):
        for v, a in zip(vec.polygon, vec.amplitudes):
            w.writerow([i, v, repr(float(a.real)), repr(float(a.imag))])
    return buf.getvalue()


def parse_amplitudes(text: str, t: Tessellation) -> list[PolygonStateVector]:
    """
    Read amplitudes for the polygons of ``t``.

    Every polygon must be listed; rows for one polygon may come in any order
    and are matched to its vertices.
    """
    rows = list(csv.reader(_io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0]] != ["polygon_index", "vertex", "re", "im"]:
        raise ParseError("amplitude CSV needs the header polygon_index,vertex,re,im")
    amps: dict[int, dict[int, complex]] = {}
    for lineno, row in enumerate(rows[1:], 2):
        if not row:
            continue
        if len(row) != 4:
            raise ParseError(f"line {lineno}: expected 4 fields")
        try:
            i, v, re, im = int(row[0]), int(row[1]), float(row[2]), float(row[3])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        amps.setdefault(i, {})[v] = complex(re, im)
    out = []
    for i, poly in enumerate(t.polygons):
        got = amps.get(i, {})
        if set(got) != set(poly):
            raise ParseError(f"polygon {i}: amplitudes given for {sorted(got)}, polygon is {list(poly)}")
        out.append(PolygonStateVector(poly, [got[v] for v in poly]))
    extra = set(amps) - set(range(len(t.polygons)))
    if extra:
        raise ParseError(f"amplitudes for unknown polygons {sorted(extra)}")
    return out


def read_amplitudes(path: PathLike, t: Tessellation) -> list[PolygonStateVector]:
    return parse_amplitudes(Path(path).read_text(), t)


def _fmt_complex(z: complex) -> str:
    re, im = float(z.real), float(z.imag)
    re = 0.0 if re == 0 else re  # no negative zeros in golden files
    im = 0.0 if im == 0 else im
    return f"{re!r}{'+' if im >= 0 else '-'}{abs(im)!r}j"


def format_dense(mat: np.ndarray) -> str:
    return "".join(",".join(_fmt_complex(z) for z in row) + "\n" for row in np.asarray(mat))


def parse_dense(text: str) -> np.ndarray:
    try:
        rows = [[complex(c) for c in line.split(",")] for line in text.splitlines() if line.strip()]
    except ValueError as exc:
        raise ParseError(f"bad complex entry: {exc}") from exc
    return np.array(rows, dtype=np.complex128)


def format_series(header: Iterable[str], rows: Iterable[Sequence]) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(header))
    for r in rows:
        w.writerow([repr(x) if isinstance(x, float) else x for x in r])
    return buf.getvalue()
