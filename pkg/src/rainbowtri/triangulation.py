"""Embedded planar triangulations and the combinatorial algorithms on them.

A triangulation is stored as a rotation system: for every vertex, the cyclic
order of its neighbors.  Planarity is never tested abstractly; instead the
faces are traced from the rotations and the construction is accepted only if
Euler's formula holds and every face is a triangle.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .errors import (
    CycleCoversGraph,
    InconsistentRotation,
    NotATriangulation,
    TooLargeForOracle,
)

Edge = tuple  # canonical undirected edge: (min_index, max_index)


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class PlanarTriangulation:
    """Immutable simple graph with a rotation system whose faces are all triangles.

    Vertices are the integers ``0..n-1``.  ``rotations[v]`` lists the neighbors
    of ``v`` in cyclic order.  Construction validates everything: simplicity,
    symmetry of the adjacency, connectivity, the 3n-6 edge count, and the face
    trace (2n-4 faces, each a closed walk over 3 distinct vertices).  Instances
    never mutate, so they are safe to share across threads.
    """

    __slots__ = ("n", "rotations", "neighbors", "edges", "edge_index", "faces",
                 "face_sets")

    def __init__(self, rotations: Sequence[Sequence[int]]):
        rotations = tuple(tuple(rot) for rot in rotations)
        n = len(rotations)
        if n < 3:
            raise NotATriangulation(f"need at least 3 vertices, got {n}")
        for v, rot in enumerate(rotations):
            for u in rot:
                if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < n:
                    raise InconsistentRotation(
                        f"rotation of vertex {v} mentions invalid vertex {u!r}")
            if v in rot:
                raise InconsistentRotation(f"vertex {v} lists itself as a neighbor")
            if len(set(rot)) != len(rot):
                raise InconsistentRotation(f"vertex {v} repeats a neighbor")
        neighbors = tuple(frozenset(rot) for rot in rotations)
        for v, rot in enumerate(rotations):
            for u in rot:
                if v not in neighbors[u]:
                    raise InconsistentRotation(
                        f"edge {v}-{u} is listed at {v} but not at {u}")

        self.n = n
        self.rotations = rotations
        self.neighbors = neighbors
        edges = sorted(canonical_edge(v, u) for v in range(n) for u in rotations[v]
                       if v < u)
        self.edges = tuple(edges)
        self.edge_index = {e: i for i, e in enumerate(edges)}

        m = len(edges)
        if m != 3 * n - 6:
            raise NotATriangulation(f"edge count {m} differs from 3n-6 = {3 * n - 6}")
        if self._reach_count(0, ()) != n:
            raise NotATriangulation("graph is not connected")

        faces = trace_faces(self)
        if len(faces) != 2 * n - 4:
            raise NotATriangulation(
                f"face trace found {len(faces)} faces, expected 2n-4 = {2 * n - 4}")
        for face in faces:
            if len(face) != 3 or len(set(face)) != 3:
                raise NotATriangulation(f"non-triangular face {face}")
        assert n - m + len(faces) == 2  # Euler, implied by the two counts
        self.faces = faces
        self.face_sets = frozenset(frozenset(face) for face in faces)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def is_face(self, vertices: Iterable[int]) -> bool:
        return frozenset(vertices) in self.face_sets

    def _reach_count(self, start: int, removed: Sequence[int]) -> int:
        """Number of vertices reachable from start in the graph minus `removed`."""
        blocked = set(removed)
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in self.neighbors[v]:
                if u not in seen and u not in blocked:
                    seen.add(u)
                    queue.append(u)
        return len(seen)

    def __repr__(self):
        return f"PlanarTriangulation(n={self.n}, edges={self.num_edges})"


def trace_faces(graph: PlanarTriangulation) -> tuple:
    """Faces of the embedding, each as a directed closed walk of vertices.

    Trace rule (fixed once, used everywhere): after arriving at ``w`` along the
    directed edge ``v -> w``, the walk leaves along the neighbor that follows
    ``v`` in ``w``'s rotation.  The walks partition all 2|E| directed edges.
    """
    succ = []
    for rot in graph.rotations:
        d = len(rot)
        succ.append({rot[i]: rot[(i + 1) % d] for i in range(d)})
    faces = []
    used = set()
    for v0 in range(graph.n):
        for w0 in graph.rotations[v0]:
            start = (v0, w0)
            if start in used:
                continue
            walk = []
            cur = start
            while True:
                if cur in used:
                    raise InconsistentRotation(
                        f"directed edge {cur} traversed twice before face closure")
                used.add(cur)
                walk.append(cur[0])
                v, w = cur
                cur = (w, succ[w][v])
                if cur == start:
                    break
            faces.append(tuple(walk))
    return tuple(faces)


def rotations_from_faces(n: int, faces: Iterable[Sequence[int]]):
    """Build the rotation system realizing a given set of triangular faces.

    The faces may be written in either orientation; a globally consistent
    orientation is found by propagation across shared edges.  The result is
    arranged so that ``trace_faces`` recovers exactly the input face set.
    """
    faces = [tuple(face) for face in faces]
    by_edge = defaultdict(list)
    for idx, face in enumerate(faces):
        if len(face) != 3 or len(set(face)) != 3:
            raise InconsistentRotation(f"face {face} is not a vertex triple")
        for i in range(3):
            by_edge[canonical_edge(face[i], face[(i + 1) % 3])].append(idx)
    for e, fs in by_edge.items():
        if len(fs) != 2:
            raise InconsistentRotation(f"edge {e} lies on {len(fs)} faces, expected 2")

    oriented: list = [None] * len(faces)
    oriented[0] = faces[0]
    stack = [0]
    while stack:
        idx = stack.pop()
        a, b, c = oriented[idx]
        for x, y in ((a, b), (b, c), (c, a)):
            pair = by_edge[canonical_edge(x, y)]
            other = pair[0] if pair[1] == idx else pair[1]
            f = faces[other]
            # the neighboring face must traverse the shared edge as y -> x
            want = f if _has_directed(f, y, x) else (f[2], f[1], f[0])
            if not _has_directed(want, y, x):
                raise InconsistentRotation(f"faces {oriented[idx]} and {f} conflict")
            if oriented[other] is None:
                oriented[other] = want
                stack.append(other)
            elif not _has_directed(oriented[other], y, x):
                raise InconsistentRotation("face set is not consistently orientable")

    succ = [dict() for _ in range(n)]
    for face in oriented:
        x0, x1, x2 = face
        for a, b, c in ((x0, x1, x2), (x1, x2, x0), (x2, x0, x1)):
            if a in succ[b]:
                raise InconsistentRotation(f"faces overlap at vertex {b}")
            succ[b][a] = c
    rotations = []
    for v in range(n):
        if not succ[v]:
            raise InconsistentRotation(f"vertex {v} lies on no face")
        start = min(succ[v])
        rot = [start]
        cur = succ[v][start]
        while cur != start:
            rot.append(cur)
            cur = succ[v][cur]
        if len(rot) != len(succ[v]):
            raise InconsistentRotation(f"faces do not form a disk around vertex {v}")
        rotations.append(tuple(rot))
    return tuple(rotations)


def _has_directed(face, x, y) -> bool:
    a, b, c = face
    return (a, b) == (x, y) or (b, c) == (x, y) or (c, a) == (x, y)


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------

def canonical_cycle(vertices: Sequence[int]) -> tuple:
    """Canonical form of a cycle: minimum vertex first, smaller neighbor second.

    Two sequences denote the same cycle up to rotation/reflection iff their
    canonical forms are equal.
    """
    vs = tuple(vertices)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise ValueError(f"not a simple cycle: {vs}")
    i = vs.index(min(vs))
    fwd = vs[i:] + vs[:i]
    if fwd[-1] < fwd[1]:
        return (fwd[0],) + tuple(reversed(fwd[1:]))
    return fwd


def cycle_edges(cycle: Sequence[int]):
    """Canonical edges traversed by a cycle given as a vertex sequence."""
    k = len(cycle)
    return [canonical_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def enumerate_cycles(graph: PlanarTriangulation, length: int):
    """Every simple cycle with exactly `length` vertices, canonical and sorted.

    Rooted DFS from each start vertex; symmetry is broken by forcing the root
    to be the cycle minimum and the second vertex smaller than the last, so
    each cycle is produced exactly once, already in canonical form.
    """
    if not 3 <= length <= graph.n:
        raise ValueError(f"cycle length {length} outside [3, {graph.n}]")
    adj = [sorted(graph.neighbors[v]) for v in range(graph.n)]
    out = []
    in_path = [False] * graph.n
    path = [0] * length

    def extend(v: int, depth: int, root: int):
        if depth == length:
            if root in graph.neighbors[v] and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for u in adj[v]:
            if u > root and not in_path[u]:
                path[depth] = u
                in_path[u] = True
                extend(u, depth + 1, root)
                in_path[u] = False

    for root in range(graph.n):
        path[0] = root
        in_path[root] = True
        extend(root, 1, root)
        in_path[root] = False
    out.sort()
    return out


def is_separating_cycle(graph: PlanarTriangulation, cycle: Sequence[int]) -> bool:
    """True iff deleting the cycle's vertices disconnects the rest of the graph."""
    cyc = list(dict.fromkeys(cycle))
    if len(cyc) < 3:
        raise ValueError(f"not a cycle: {cycle}")
    for i, v in enumerate(cyc):
        u = cyc[(i + 1) % len(cyc)]
        if u not in graph.neighbors[v]:
            raise ValueError(f"{cycle} is not a cycle of the graph ({v}-{u} missing)")
    cset = set(cyc)
    rest = [v for v in range(graph.n) if v not in cset]
    if not rest:
        raise CycleCoversGraph("cycle covers every vertex; separation is undefined")
    return graph._reach_count(rest[0], cyc) < len(rest)


# ---------------------------------------------------------------------------
# Degrees and connectivity
# ---------------------------------------------------------------------------

def degree_sequence(graph: PlanarTriangulation):
    """Vertex degrees as a sorted list; the sum is always 2(3n-6)."""
    return sorted(len(rot) for rot in graph.rotations)


def degree_census(graph: PlanarTriangulation) -> dict:
    """Mapping degree -> number of vertices with that degree."""
    census: dict = {}
    for rot in graph.rotations:
        census[len(rot)] = census.get(len(rot), 0) + 1
    return dict(sorted(census.items()))


@dataclass(frozen=True)
class ConnectivityReport:
    """Vertex connectivity together with the evidence both routes produced."""

    kappa: int
    method: str
    separating_triangle: Optional[tuple] = None
    separating_quad: Optional[tuple] = None
    oracle_ran: bool = False
    oracle_cut: Optional[tuple] = None

    def to_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "method": self.method,
            "separating_triangle": list(self.separating_triangle)
            if self.separating_triangle else None,
            "separating_quad": list(self.separating_quad)
            if self.separating_quad else None,
            "oracle_ran": self.oracle_ran,
            "oracle_cut": list(self.oracle_cut) if self.oracle_cut else None,
        }


def connectivity_class(graph: PlanarTriangulation, *, oracle_bound: int = 60,
                       max_cut_size: int = 5,
                       run_oracle: Optional[bool] = None) -> ConnectivityReport:
    """Vertex connectivity of a triangulation, computed two ways that must agree.

    Structural route (always): a triangulation on >= 5 vertices is 3-connected;
    it is 4-connected iff no triangle separates it and 5-connected iff in
    addition no 4-cycle separates it, and planarity caps the answer at 5.
    Oracle route (when ``n <= oracle_bound`` or forced): scan vertex subsets in
    increasing size for the smallest disconnecting set.  A disagreement raises,
    since it can only mean a bug.  K3 and K4, the unique triangulations on 3
    and 4 vertices, are handled as complete graphs.
    """
    n = graph.n
    if n in (3, 4):
        return ConnectivityReport(kappa=n - 1, method="complete-graph")

    min_deg = min(len(rot) for rot in graph.rotations)
    sep_tri = None
    for tri in enumerate_cycles(graph, 3):
        if is_separating_cycle(graph, tri):
            sep_tri = tri
            break
    sep_quad = None
    if sep_tri is None:
        for quad in enumerate_cycles(graph, 4):
            if is_separating_cycle(graph, quad):
                sep_quad = quad
                break
    if sep_tri is not None:
        kappa = 3
    elif sep_quad is not None:
        kappa = 4
    else:
        kappa = 5
    kappa = min(kappa, min_deg)

    do_oracle = run_oracle if run_oracle is not None else n <= oracle_bound
    if run_oracle and n > oracle_bound:
        raise TooLargeForOracle(
            f"n={n} exceeds the oracle bound {oracle_bound}; raise it explicitly")
    oracle_cut = None
    if do_oracle:
        adjacency = [sorted(graph.neighbors[v]) for v in range(n)]
        found = kernels.find_smallest_cut(adjacency, min(max_cut_size, n - 2))
        if found is None:
            raise AssertionError(
                f"cut scan found no cut of size <= {max_cut_size} on a planar graph")
        oracle_cut = tuple(found)
        if len(oracle_cut) != kappa:
            raise AssertionError(
                f"connectivity mismatch: structural {kappa}, oracle cut {oracle_cut}")
    return ConnectivityReport(
        kappa=kappa,
        method="structural+oracle" if do_oracle else "structural",
        separating_triangle=sep_tri,
        separating_quad=sep_quad,
        oracle_ran=do_oracle,
        oracle_cut=oracle_cut,
    )
