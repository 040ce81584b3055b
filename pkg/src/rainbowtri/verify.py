"""Certification of colorings and graphs: properness, rainbow-freeness,
neighborhood cycles, structural obstructions, and the aggregate report."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .coloring import EdgeColoring
from .errors import ImproperColoring, NeighborCycleMissing, PartialColoring
from .families import LabeledTriangulation
from .triangulation import (
    ConnectivityReport,
    PlanarTriangulation,
    canonical_edge,
    connectivity_class,
    cycle_edges,
    degree_census,
    enumerate_cycles,
    is_separating_cycle,
)

REPORT_SCHEMA_VERSION = 1


def _as_graph(g) -> PlanarTriangulation:
    return g.graph if isinstance(g, LabeledTriangulation) else g


def _edge_colors(graph: PlanarTriangulation, col: EdgeColoring):
    """Colors aligned with graph.edges; raises if any edge is uncolored."""
    out = []
    for edge in graph.edges:
        c = col.colors.get(edge)
        if c is None:
            raise PartialColoring(f"edge {edge} has no color")
        out.append(c)
    return out


def check_proper(g, col: EdgeColoring):
    """All pairs of same-colored adjacent edges, in canonical order.

    An empty list certifies the coloring proper.
    """
    graph = _as_graph(g)
    _edge_colors(graph, col)
    violations = []
    for v in range(graph.n):
        incident = sorted(canonical_edge(v, u) for u in graph.neighbors[v])
        by_color = {}
        for e in incident:
            by_color.setdefault(col.colors[e], []).append(e)
        for edges in by_color.values():
            for i in range(len(edges)):
                for j in range(i + 1, len(edges)):
                    pair = (edges[i], edges[j])
                    if pair not in violations:
                        violations.append(pair)
    violations.sort()
    return violations


def _rainbow_scan(graph: PlanarTriangulation, col: EdgeColoring, length: int,
                  pigeonhole: bool = True):
    """(count, first witness, enumerated?) of rainbow cycles of one length.

    Lengths beyond n are vacuously zero (no such cycle exists).  With the
    pigeonhole short-circuit on, lengths beyond the palette are answered
    without enumerating any cycle (a cycle cannot show more distinct colors
    than the palette holds).
    """
    if length > graph.n:
        return 0, None, False
    if pigeonhole and length > col.palette_size:
        return 0, None, False
    count = 0
    witness = None
    for cyc in enumerate_cycles(graph, length):
        seen = set()
        rainbow = True
        for e in cycle_edges(cyc):
            c = col.colors[e]
            if c in seen:
                rainbow = False
                break
            seen.add(c)
        if rainbow:
            count += 1
            if witness is None:
                witness = cyc
    return count, witness, True


def _require_proper(g, col):
    violations = check_proper(g, col)
    if violations:
        raise ImproperColoring(f"coloring is not proper, e.g. edges "
                               f"{violations[0][0]} and {violations[0][1]} clash")


def find_rainbow_cycle(g, col: EdgeColoring, length: int):
    """First rainbow cycle of the given length in canonical order, or None."""
    graph = _as_graph(g)
    _require_proper(graph, col)
    _, witness, _ = _rainbow_scan(graph, col, length)
    return witness


def count_rainbow_cycles(g, col: EdgeColoring, length: int, *,
                         pigeonhole: bool = True) -> int:
    """Exact number of rainbow cycles of the given length."""
    graph = _as_graph(g)
    _require_proper(graph, col)
    count, _, _ = _rainbow_scan(graph, col, length, pigeonhole)
    return count


def neighborhood_rainbow_check(g, col: EdgeColoring) -> dict:
    """Per vertex: is the cycle through its whole neighborhood rainbow?

    In a triangulation on >= 4 vertices the rotation order of N(v) is a cycle
    of the graph; the check reads it off the embedding.  If the coloring has
    no rainbow 4-cycle, every vertex must pass.
    """
    graph = _as_graph(g)
    if graph.n < 4:
        raise NeighborCycleMissing("neighborhoods induce cycles only for n >= 4")
    _require_proper(graph, col)
    results = {}
    for v in range(graph.n):
        ring = graph.rotations[v]
        for i, a in enumerate(ring):
            b = ring[(i + 1) % len(ring)]
            if b not in graph.neighbors[a]:
                raise NeighborCycleMissing(
                    f"neighbors {a},{b} of {v} are not adjacent")
        colors = tuple(col.colors[canonical_edge(ring[i], ring[(i + 1) % len(ring)])]
                       for i in range(len(ring)))
        results[v] = {
            "rainbow": len(set(colors)) == len(colors),
            "cycle": tuple(ring),
            "colors": colors,
        }
    return results


def check_c4_obstructions(g) -> dict:
    """Vertices of degree 3 or 4 and separating triangles.

    Either kind rules out a proper coloring free of rainbow 4-cycles on a
    triangulation with n >= 5; an empty result is necessary, not sufficient.
    """
    graph = _as_graph(g)
    if graph.n == 3:
        # K3 has no 4-cycles at all; nothing to obstruct
        return {"low_degree": [], "separating_triangles": []}
    low_degree = [(v, graph.degree(v)) for v in range(graph.n)
                  if graph.degree(v) in (3, 4)]
    separating = [tri for tri in enumerate_cycles(graph, 3)
                  if is_separating_cycle(graph, tri)]
    return {"low_degree": low_degree, "separating_triangles": separating}


def has_c4_obstructions(g) -> bool:
    obs = check_c4_obstructions(g)
    return bool(obs["low_degree"] or obs["separating_triangles"])


# ---------------------------------------------------------------------------
# Aggregate certificate
# ---------------------------------------------------------------------------

@dataclass
class CertificateReport:
    """Structured pass/fail record of every check run on one (graph, coloring).

    ``claims`` maps claim names to booleans; ``passed`` is their conjunction.
    Reports are deterministic: identical inputs produce identical reports.
    """

    n: int
    edge_count: int
    face_count: int
    degree_census: dict
    connectivity: ConnectivityReport
    labels: Optional[tuple]
    palette: int
    colors_used: int
    properness_violations: list
    rainbow: dict            # length -> {"count", "witness", "enumerated"}
    neighborhood: Optional[dict]
    obstructions: dict
    claims: dict

    @property
    def passed(self) -> bool:
        return all(v for v in self.claims.values() if v is not None)

    def to_dict(self) -> dict:
        rainbow = {
            str(length): {
                "count": r["count"],
                "witness": list(r["witness"]) if r["witness"] else None,
                "enumerated": r["enumerated"],
            }
            for length, r in self.rainbow.items()
        }
        neighborhood = None
        if self.neighborhood is not None:
            failures = [
                {"vertex": v, "cycle": list(r["cycle"]), "colors": list(r["colors"])}
                for v, r in sorted(self.neighborhood.items())
                if not r["rainbow"]
            ]
            neighborhood = {
                "all_rainbow": not failures,
                "failures": failures,
            }
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "graph": {
                "n": self.n,
                "edges": self.edge_count,
                "faces": self.face_count,
                "degree_census": {str(d): c for d, c in self.degree_census.items()},
                "connectivity": self.connectivity.to_dict(),
                "labels": list(self.labels) if self.labels else None,
            },
            "coloring": {
                "palette": self.palette,
                "colors_used": self.colors_used,
                "proper": not self.properness_violations,
                "violations": [[list(a), list(b)]
                               for a, b in self.properness_violations],
            },
            "rainbow": rainbow,
            "neighborhood": neighborhood,
            "obstructions": {
                "low_degree": [list(x) for x in self.obstructions["low_degree"]],
                "separating_triangles": [list(t) for t in
                                         self.obstructions["separating_triangles"]],
            },
            "claims": dict(sorted(self.claims.items())),
            "pass": self.passed,
        }


def certify(g, col: EdgeColoring, lengths: Sequence[int], *,
            oracle_bound: int = 60) -> CertificateReport:
    """Run every check and aggregate the verdicts.

    Claims recorded: the triangulation invariants, properness of the coloring,
    and "no rainbow cycle of length L" for each requested L.  When 4 is among
    the lengths and the coloring indeed has no rainbow 4-cycle, the
    neighborhood-cycle check must confirm every vertex, and that becomes a
    claim too (it is a consequence of rainbow-4-freeness).
    """
    graph = _as_graph(g)
    labels = g.labels if isinstance(g, LabeledTriangulation) else None
    lengths = sorted(set(lengths))
    if any(length < 3 for length in lengths):
        raise ValueError(f"cycle lengths {lengths} must all be at least 3")

    violations = check_proper(graph, col)
    rainbow = {}
    for length in lengths:
        count, witness, enumerated = _rainbow_scan(graph, col, length)
        rainbow[length] = {"count": count, "witness": witness,
                           "enumerated": enumerated}

    claims = {
        # construction already validated these; restate them as data
        "triangulation": (graph.num_edges == 3 * graph.n - 6
                          and len(graph.faces) == 2 * graph.n - 4
                          and all(len(f) == 3 for f in graph.faces)),
        "proper": not violations,
    }
    for length in lengths:
        claims[f"no_rainbow_{length}"] = rainbow[length]["count"] == 0

    neighborhood = None
    if graph.n >= 4 and not violations:
        neighborhood = neighborhood_rainbow_check(graph, col)
    if 4 in lengths and rainbow[4]["count"] == 0 and neighborhood is not None:
        claims["neighborhood_rainbow"] = all(
            r["rainbow"] for r in neighborhood.values())
    else:
        claims["neighborhood_rainbow"] = None

    return CertificateReport(
        n=graph.n,
        edge_count=graph.num_edges,
        face_count=len(graph.faces),
        degree_census=degree_census(graph),
        connectivity=connectivity_class(graph, oracle_bound=oracle_bound),
        labels=labels,
        palette=col.palette_size,
        colors_used=col.colors_used(),
        properness_violations=violations,
        rainbow=rainbow,
        neighborhood=neighborhood,
        obstructions=check_c4_obstructions(graph),
        claims=claims,
    )
