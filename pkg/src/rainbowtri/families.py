"""Constructions: the two extremal families, small fixtures, JSON ingestion.

Both families are specified by their face lists; the rotation system is
derived from the faces and then re-certified by the face trace, so the
binding contract is "every traced face is a triangle", not any particular
rotation ordering.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .errors import InvalidK, InvalidN, NotATriangulation, SchemaError, UnknownFixture
from .errors import InconsistentRotation
from .triangulation import PlanarTriangulation, rotations_from_faces

FIXTURE_NAMES = ("octahedron", "icosahedron", "k4", "stacked_k4")


class LabeledTriangulation:
    """A triangulation together with per-vertex label strings.

    Labels follow the family naming (``v0``, ``v[2,3]``, ``u4``, ...) so that
    certificates and exports can cite the construction's own vertex names.
    ``family`` is a small metadata dict recording how the graph was built.
    """

    __slots__ = ("graph", "labels", "family", "by_label")

    def __init__(self, graph: PlanarTriangulation, labels: Sequence[str],
                 family: Optional[dict] = None):
        labels = tuple(labels)
        if len(labels) != graph.n:
            raise ValueError(f"{len(labels)} labels for {graph.n} vertices")
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be distinct")
        self.graph = graph
        self.labels = labels
        self.family = dict(family) if family else {}
        self.by_label = {lab: i for i, lab in enumerate(labels)}

    def label_edge(self, edge) -> tuple:
        u, v = edge
        return (self.labels[u], self.labels[v])

    def __eq__(self, other):
        return (isinstance(other, LabeledTriangulation)
                and self.graph.rotations == other.graph.rotations
                and self.labels == other.labels
                and self.family == other.family)

    def __repr__(self):
        kind = self.family.get("name", "graph")
        return f"LabeledTriangulation({kind}, n={self.graph.n})"


def _wrap(x: int, k: int) -> int:
    """Map an integer into the 1-based residues 1..k."""
    return (x - 1) % k + 1


# ---------------------------------------------------------------------------
# Ring-tower family ("hk"): k-3 concentric k-gon rings capped by two hubs
# ---------------------------------------------------------------------------

def barrel_size(k: int) -> int:
    return k * (k - 3) + 2


def build_barrel(k: int) -> LabeledTriangulation:
    """Triangulation of k-3 stacked k-gon rings closed off by two hub vertices.

    For k >= 5 this has k^2-3k+2 vertices and is 5-connected.  Ring i sits
    between ring i-1 and ring i+1; consecutive rings are joined by verticals
    (same column) and diagonals (column j to column j-1).  The bottom hub is
    adjacent to all of ring 1, the top hub to all of ring k-3.
    """
    if k < 5:
        raise InvalidK(f"ring parameter k={k}; the family needs k >= 5")
    rows = k - 3
    hub_bottom, hub_top = 0, 1

    def ring(i, j):
        return 2 + (i - 1) * k + (_wrap(j, k) - 1)

    faces = []
    for j in range(1, k + 1):
        faces.append((hub_bottom, ring(1, j), ring(1, j + 1)))
    for i in range(1, rows):
        for j in range(1, k + 1):
            faces.append((ring(i, j), ring(i, j + 1), ring(i + 1, j)))
            faces.append((ring(i, j + 1), ring(i + 1, j + 1), ring(i + 1, j)))
    for j in range(1, k + 1):
        faces.append((hub_top, ring(rows, j), ring(rows, j + 1)))

    n = barrel_size(k)
    graph = PlanarTriangulation(rotations_from_faces(n, faces))
    labels = ["?"] * n
    labels[hub_bottom] = "v0"
    labels[hub_top] = f"v{k - 2}"
    for i in range(1, rows + 1):
        for j in range(1, k + 1):
            labels[ring(i, j)] = f"v[{i},{j}]"
    return LabeledTriangulation(graph, labels, {"name": "hk", "k": k})


# ---------------------------------------------------------------------------
# Strip family ("fn"): two paths joined by zigzags, apex added for odd n
# ---------------------------------------------------------------------------

def build_strip(n: int) -> LabeledTriangulation:
    """Two-row strip triangulation on n vertices.

    Even n = 2p: rows u_1..u_p and v_1..v_p, with u_i adjacent to u_{i+1} and
    to v_j for -1 <= j-i <= 2.  Odd n: the even strip on n-1 vertices plus an
    apex u_0 joined to u_1, v_1, v_2 (to u_1 and v_1 only when n = 3).
    The smallest members are the triangle (n=3) and K4 (n=4).
    """
    if n < 3:
        raise InvalidN(f"strip size n={n}; the family needs n >= 3")
    p = n // 2
    if n % 2 == 0:
        def u(i):
            return i - 1

        def v(j):
            return p + j - 1

        faces = _strip_faces(p, u, v)
        labels = [f"u{i}" for i in range(1, p + 1)] + \
                 [f"v{j}" for j in range(1, p + 1)]
    else:
        def u(i):
            return i

        def v(j):
            return p + j

        if n == 3:
            faces = [(u(0), u(1), v(1)), (u(0), v(1), u(1))]
        else:
            faces = [f for f in _strip_faces(p, u, v)
                     if set(f) != {u(1), v(1), v(2)}]
            faces += [(u(0), u(1), v(1)), (u(0), v(1), v(2)), (u(0), v(2), u(1))]
        labels = [f"u{i}" for i in range(0, p + 1)] + \
                 [f"v{j}" for j in range(1, p + 1)]

    graph = PlanarTriangulation(rotations_from_faces(n, faces))
    return LabeledTriangulation(graph, labels, {"name": "fn", "n": n})


def _strip_faces(p, u, v):
    faces = []
    for i in range(1, p):
        faces.append((u(i), v(i), u(i + 1)))
        faces.append((v(i), u(i + 1), v(i + 1)))
    for i in range(1, p - 1):
        faces.append((u(i), v(i + 1), v(i + 2)))
        faces.append((u(i), u(i + 1), v(i + 2)))
    faces.append((u(1), v(1), v(2)))
    faces.append((u(p - 1), u(p), v(p)))
    return faces


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

def build_fixture(name: str) -> LabeledTriangulation:
    """Small named triangulations used as test subjects and search instances."""
    if name == "k4":
        n = 4
        faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    elif name == "stacked_k4":
        # K4 with an extra vertex inside the face {1,2,3}: has a separating triangle
        n = 5
        faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3),
                 (4, 1, 2), (4, 2, 3), (4, 1, 3)]
    elif name == "octahedron":
        n = 6  # poles 0 and 5, equator 1-2-3-4
        faces = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
                 (5, 1, 2), (5, 2, 3), (5, 3, 4), (5, 4, 1)]
    elif name == "icosahedron":
        n = 12  # pole 0, upper ring 1-5, lower ring 6-10, pole 11
        a = [1, 2, 3, 4, 5]
        b = [6, 7, 8, 9, 10]
        faces = []
        for i in range(5):
            j = (i + 1) % 5
            faces.append((0, a[i], a[j]))
            faces.append((a[i], a[j], b[i]))
            faces.append((b[i], b[j], a[j]))
            faces.append((11, b[i], b[j]))
    else:
        raise UnknownFixture(f"no fixture named {name!r}; "
                             f"known: {', '.join(FIXTURE_NAMES)}")
    graph = PlanarTriangulation(rotations_from_faces(n, faces))
    labels = [str(i) for i in range(n)]
    return LabeledTriangulation(graph, labels, {"name": "fixture", "fixture": name})


# ---------------------------------------------------------------------------
# JSON ingestion / serialization
# ---------------------------------------------------------------------------

def serialize_graph(lt: LabeledTriangulation) -> dict:
    """Graph document: ``{"n", "rotations", "labels", "family"}``."""
    doc = {
        "n": lt.graph.n,
        "rotations": [list(rot) for rot in lt.graph.rotations],
        "labels": {str(i): lab for i, lab in enumerate(lt.labels)},
    }
    if lt.family:
        doc["family"] = dict(lt.family)
    return doc


def parse_graph(doc) -> LabeledTriangulation:
    """Validate a graph document and build the triangulation it describes.

    Accepts a JSON string or an already-decoded dict.  Schema violations raise
    SchemaError; a well-formed document describing anything other than a
    triangulation raises NotATriangulation naming the failed invariant.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("graph document must be a JSON object")
    if "n" not in doc or "rotations" not in doc:
        raise SchemaError('graph document needs the fields "n" and "rotations"')
    n = doc["n"]
    rotations = doc["rotations"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise SchemaError(f'"n" must be an integer >= 3, got {n!r}')
    if (not isinstance(rotations, list) or len(rotations) != n
            or not all(isinstance(rot, list) for rot in rotations)):
        raise SchemaError('"rotations" must be a list of n neighbor lists')
    for rot in rotations:
        for x in rot:
            if not isinstance(x, int) or isinstance(x, bool):
                raise SchemaError(f"rotation entries must be integers, got {x!r}")

    labels = [str(i) for i in range(n)]
    if "labels" in doc and doc["labels"] is not None:
        raw = doc["labels"]
        if not isinstance(raw, dict):
            raise SchemaError('"labels" must map vertex indices to strings')
        for key, val in raw.items():
            try:
                idx = int(key)
            except (TypeError, ValueError):
                raise SchemaError(f"label key {key!r} is not a vertex index") from None
            if not 0 <= idx < n:
                raise SchemaError(f"label key {key!r} out of range")
            if not isinstance(val, str):
                raise SchemaError(f"label value {val!r} is not a string")
            labels[idx] = val
        if len(set(labels)) != n:
            raise SchemaError("vertex labels must be distinct")

    family = doc.get("family")
    if family is not None and not isinstance(family, dict):
        raise SchemaError('"family" must be an object')

    try:
        graph = PlanarTriangulation(rotations)
    except InconsistentRotation as exc:
        raise NotATriangulation(f"rotation system invalid: {exc}") from None
    return LabeledTriangulation(graph, labels, family)
