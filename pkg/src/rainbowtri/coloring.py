"""The closed-form edge colorings of the two families.

Both colorings are defined on vertex labels, mirroring how the constructions
are indexed; properness and rainbow-freeness are certified by the verifier,
never assumed here.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import isqrt
from typing import Mapping

from .errors import MissingLabels, SchemaError
from .families import LabeledTriangulation, barrel_size
from .triangulation import canonical_edge


@dataclass(frozen=True)
class EdgeColoring:
    """Total map from canonical edges to colors 1..palette_size."""

    palette_size: int
    colors: Mapping[tuple, int] = field(compare=True)

    def __post_init__(self):
        if self.palette_size < 1:
            raise ValueError(f"palette size must be positive, got {self.palette_size}")
        for edge, c in self.colors.items():
            if not 1 <= c <= self.palette_size:
                raise ValueError(f"color {c} on edge {edge} outside palette "
                                 f"1..{self.palette_size}")

    def colors_used(self) -> int:
        return len(set(self.colors.values()))

    def __getitem__(self, edge) -> int:
        u, v = edge
        return self.colors[canonical_edge(u, v)]


_RING_LABEL = re.compile(r"^v\[(\d+),(\d+)\]$")
_ROW_LABEL = re.compile(r"^([uv])(\d+)$")


def _wrap(x: int, k: int) -> int:
    return (x - 1) % k + 1


def barrel_coloring(lt: LabeledTriangulation) -> EdgeColoring:
    """Proper coloring of the ring-tower family on k+2 colors, no rainbow 4-cycle.

    Ring edges take their position index: the edge from column t to column t+1
    of any ring gets color t.  Edges climbing from one ring to the next (hub
    edges included) get color i+j, where i is the upper row and j the column,
    reduced into 1..k.  The diagonals alternate between the two extra colors
    k+1 and k+2 by the parity of their upper row.
    """
    k = lt.family.get("k")
    n = lt.graph.n
    if k is None:
        # recover k from n = k^2 - 3k + 2 when the metadata is absent
        root = isqrt(4 * n + 1)
        k = (3 + root) // 2 if root * root == 4 * n + 1 else None
    if k is None or k < 5 or barrel_size(k) != n:
        raise MissingLabels(f"graph of order {n} is not a ring tower")

    coords = {}
    for idx, lab in enumerate(lt.labels):
        if lab == "v0":
            coords[idx] = (0, None)
        elif lab == f"v{k - 2}":
            coords[idx] = (k - 2, None)
        else:
            m = _RING_LABEL.match(lab)
            if not m:
                raise MissingLabels(f"vertex {idx} label {lab!r} is not a "
                                    "ring-tower label")
            coords[idx] = (int(m.group(1)), int(m.group(2)))
    if len(coords) != n:
        raise MissingLabels("ring-tower labels incomplete")

    colors = {}
    for edge in lt.graph.edges:
        (r1, c1), (r2, c2) = sorted((coords[edge[0]], coords[edge[1]]))
        if r1 == r2:
            # ring edge between columns c1 and c2 = c1+1 (cyclically)
            if _wrap(c1 + 1, k) == c2:
                colors[edge] = c1
            elif _wrap(c2 + 1, k) == c1:
                colors[edge] = c2
            else:
                raise MissingLabels(f"edge {edge} is not a ring edge")
        elif r2 == r1 + 1:
            if r1 == 0:
                colors[edge] = _wrap(1 + c2, k)        # bottom hub to ring 1
            elif r2 == k - 2:
                colors[edge] = _wrap((k - 2) + c1, k)  # ring k-3 to top hub
            elif c1 == c2:
                colors[edge] = _wrap(r2 + c1, k)       # vertical
            elif _wrap(c1 - 1, k) == c2:
                colors[edge] = k + 1 if r1 % 2 == 1 else k + 2  # diagonal
            else:
                raise MissingLabels(f"edge {edge} is not a ring-tower edge")
        else:
            raise MissingLabels(f"edge {edge} skips a ring")
    return EdgeColoring(palette_size=k + 2, colors=colors)


def strip_coloring(lt: LabeledTriangulation) -> EdgeColoring:
    """Proper 6-coloring of the strip family, no rainbow 5- or 6-cycle.

    Path edges alternate colors 1/2 by the parity of their lower index, the
    short zigzag edges alternate 3/4 the same way, the verticals u_i v_i all
    get 5, and the long diagonals u_i v_{i+2} all get 6.  The odd-case apex
    u_0 falls out of the same rules at index 0.
    """
    coords = {}
    for idx, lab in enumerate(lt.labels):
        m = _ROW_LABEL.match(lab)
        if not m:
            raise MissingLabels(f"vertex {idx} label {lab!r} is not a strip label")
        coords[idx] = (m.group(1), int(m.group(2)))

    colors = {}
    for edge in lt.graph.edges:
        (row1, i), (row2, j) = coords[edge[0]], coords[edge[1]]
        if row1 == row2:
            if abs(i - j) != 1:
                raise MissingLabels(f"edge {edge} is not a strip edge")
            colors[edge] = 1 if min(i, j) % 2 == 1 else 2
        else:
            if row1 == "v":
                (row1, i), (row2, j) = (row2, j), (row1, i)
            d = j - i  # u_i to v_j
            if d == 0:
                colors[edge] = 5
            elif d == 2:
                colors[edge] = 6
            elif d in (1, -1):
                colors[edge] = 3 if min(i, j) % 2 == 1 else 4
            else:
                raise MissingLabels(f"edge {edge} is not a strip edge")
    return EdgeColoring(palette_size=6, colors=colors)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def serialize_coloring(col: EdgeColoring) -> dict:
    """Coloring document: ``{"palette", "edges": [[u, v, color], ...]}``."""
    rows = [[u, v, col.colors[(u, v)]] for u, v in sorted(col.colors)]
    return {"palette": col.palette_size, "edges": rows}


def parse_coloring(doc) -> EdgeColoring:
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("coloring document must be a JSON object")
    if "palette" not in doc or "edges" not in doc:
        raise SchemaError('coloring document needs "palette" and "edges"')
    palette = doc["palette"]
    if not isinstance(palette, int) or isinstance(palette, bool) or palette < 1:
        raise SchemaError(f'"palette" must be a positive integer, got {palette!r}')
    rows = doc["edges"]
    if not isinstance(rows, list):
        raise SchemaError('"edges" must be a list of [u, v, color] triples')
    colors = {}
    for row in rows:
        if (not isinstance(row, list) or len(row) != 3
                or any(not isinstance(x, int) or isinstance(x, bool) for x in row)):
            raise SchemaError(f"bad coloring row {row!r}")
        u, v, c = row
        if u == v:
            raise SchemaError(f"self-loop in coloring row {row!r}")
        edge = canonical_edge(u, v)
        if edge in colors:
            raise SchemaError(f"edge {edge} colored twice")
        if not 1 <= c <= palette:
            raise SchemaError(f"color {c} outside palette 1..{palette}")
        colors[edge] = c
    return EdgeColoring(palette_size=palette, colors=colors)
