"""Exhaustive decision oracle: does a triangulation admit a proper edge
coloring with a given palette and no rainbow cycle of the forbidden lengths?

The search itself runs in a swappable kernel (compiled or pure Python); this
module owns problem compilation, the cheap pre-verdicts, and the soundness
assertion that every SAT witness re-certifies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from time import monotonic
from typing import Optional

from . import kernels
from ._kernel_py import BUDGET, SAT, UNSAT
from .coloring import EdgeColoring
from .errors import RainbowTriError
from .families import LabeledTriangulation
from .triangulation import PlanarTriangulation, canonical_edge, cycle_edges, \
    enumerate_cycles
from .verify import certify, check_c4_obstructions

DEFAULT_BUDGET_NODES = 100_000_000
DEFAULT_BUDGET_SECONDS = 300.0


def _as_graph(g) -> PlanarTriangulation:
    return g.graph if isinstance(g, LabeledTriangulation) else g


@dataclass
class SearchProblem:
    graph: object  # PlanarTriangulation or LabeledTriangulation
    palette_size: int
    forbidden_lengths: frozenset = frozenset()
    budget_nodes: int = DEFAULT_BUDGET_NODES
    budget_seconds: float = DEFAULT_BUDGET_SECONDS
    symmetry_breaking: bool = True

    def __post_init__(self):
        self.forbidden_lengths = frozenset(self.forbidden_lengths)
        g = _as_graph(self.graph)
        if self.palette_size < 1:
            raise ValueError("palette size must be at least 1")
        for length in self.forbidden_lengths:
            if not 3 <= length <= g.n:
                raise ValueError(f"forbidden length {length} outside [3, {g.n}]")


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    wall_time: float = 0.0
    backend: str = "none"
    reason: Optional[str] = None

    def to_dict(self) -> dict:
        return {"nodes": self.nodes, "max_depth": self.max_depth,
                "wall_time": round(self.wall_time, 6), "backend": self.backend,
                "reason": self.reason}


@dataclass
class SearchOutcome:
    status: str  # "SAT" | "UNSAT" | "BUDGET_EXCEEDED"
    witness: Optional[EdgeColoring]
    stats: SearchStats = field(default_factory=SearchStats)

    def to_dict(self) -> dict:
        from .coloring import serialize_coloring

        return {
            "status": self.status,
            "witness": serialize_coloring(self.witness) if self.witness else None,
            "stats": self.stats.to_dict(),
        }


@dataclass
class PrecheckVerdict:
    status: str
    reason: str
    witness: Optional[EdgeColoring] = None


def greedy_proper_coloring(graph: PlanarTriangulation,
                           palette: int) -> Optional[EdgeColoring]:
    """First-fit proper coloring over the canonical edge order, or None if the
    palette runs out.  Deterministic; used by the trivial-SAT pre-verdict."""
    colors = {}
    for u, v in graph.edges:
        used = set()
        for w in graph.neighbors[u]:
            c = colors.get(canonical_edge(u, w))
            if c:
                used.add(c)
        for w in graph.neighbors[v]:
            c = colors.get(canonical_edge(v, w))
            if c:
                used.add(c)
        c = 1
        while c in used:
            c += 1
        if c > palette:
            return None
        colors[(u, v)] = c
    return EdgeColoring(palette_size=palette, colors=colors)


def _trivial_proper_witness(g, palette: int) -> Optional[EdgeColoring]:
    """Some proper coloring within the palette, found without searching.

    A graph carrying family labels already knows a proper coloring (6 colors
    for strips, k+2 for ring towers); otherwise first-fit greedy is attempted.
    """
    if isinstance(g, LabeledTriangulation):
        from .coloring import barrel_coloring, strip_coloring
        from .errors import MissingLabels

        maker = {"fn": strip_coloring, "hk": barrel_coloring}.get(
            g.family.get("name"))
        if maker is not None:
            try:
                col = maker(g)
            except MissingLabels:
                col = None
            if col is not None and col.palette_size <= palette:
                return EdgeColoring(palette_size=palette, colors=col.colors)
    return greedy_proper_coloring(_as_graph(g), palette)


def precheck(problem: SearchProblem) -> Optional[PrecheckVerdict]:
    """Cheap verdicts that skip the search entirely, or None.

    UNSAT: palette below the maximum degree (properness alone pigeonholes a
    vertex), or a rainbow-4 obstruction (degree <= 4 vertex / separating
    triangle) when 4-cycles are forbidden on n >= 5.  SAT: every forbidden
    length exceeds the palette, so any proper coloring qualifies; one is
    attempted greedily and returned as witness if it fits.
    """
    graph = _as_graph(problem.graph)
    palette = problem.palette_size
    max_deg = max(graph.degree(v) for v in range(graph.n))
    if palette < max_deg:
        return PrecheckVerdict(
            "UNSAT", f"a degree-{max_deg} vertex needs {max_deg} distinct colors, "
                     f"palette has {palette}")
    if 4 in problem.forbidden_lengths and graph.n >= 5:
        obs = check_c4_obstructions(graph)
        if obs["low_degree"]:
            v, d = obs["low_degree"][0]
            return PrecheckVerdict(
                "UNSAT", f"vertex {v} has degree {d}; a rainbow-4-free proper "
                         "coloring requires minimum degree 5")
        if obs["separating_triangles"]:
            tri = obs["separating_triangles"][0]
            return PrecheckVerdict(
                "UNSAT", f"separating triangle {tri}; a rainbow-4-free proper "
                         "coloring requires 4-connectivity")
    if all(length > palette for length in problem.forbidden_lengths):
        witness = _trivial_proper_witness(problem.graph, palette)
        if witness is not None:
            return PrecheckVerdict(
                "SAT", f"no cycle can show more than {palette} distinct colors, "
                       "so any proper coloring qualifies", witness)
    return None


def _compile(problem: SearchProblem):
    graph = _as_graph(problem.graph)
    m = graph.num_edges
    incident = [[] for _ in range(graph.n)]
    for idx, (u, v) in enumerate(graph.edges):
        incident[u].append(idx)
        incident[v].append(idx)
    edge_adj = []
    for idx, (u, v) in enumerate(graph.edges):
        adj = sorted(set(incident[u] + incident[v]) - {idx})
        edge_adj.append(adj)

    cycles = []
    # lengths beyond the palette can never be rainbow: drop them up front
    for length in sorted(problem.forbidden_lengths):
        if length > problem.palette_size:
            continue
        for cyc in enumerate_cycles(graph, length):
            cycles.append([graph.edge_index[e] for e in cycle_edges(cyc)])
    edge_cycles = [[] for _ in range(m)]
    for cid, cyc in enumerate(cycles):
        for e in cyc:
            edge_cycles[e].append(cid)

    order = sorted(range(m), key=lambda e: (-len(edge_adj[e]), e))
    pre_assign = []
    if problem.symmetry_breaking:
        pre_assign = [(graph.edge_index[canonical_edge(0, u)], c + 1)
                      for c, u in enumerate(graph.rotations[0])]
    return graph, m, edge_adj, cycles, edge_cycles, order, pre_assign


def solve(problem: SearchProblem, *, use_precheck: bool = True,
          backend: Optional[str] = None) -> SearchOutcome:
    """Decide the problem by exhaustive backtracking (see the kernel docs).

    Deterministic: identical problems give identical verdicts, witnesses and
    node counts.  Every SAT witness is re-certified before being returned.
    """
    graph = _as_graph(problem.graph)
    start = monotonic()
    backend_name = backend or kernels.default_backend()

    if use_precheck:
        early = precheck(problem)
        if early is not None:
            stats = SearchStats(wall_time=monotonic() - start, backend="precheck",
                                reason=early.reason)
            if early.witness is not None:
                _assert_witness(problem, early.witness)
            return SearchOutcome(early.status, early.witness, stats)

    if problem.symmetry_breaking and graph.degree(0) > problem.palette_size:
        # pre-coloring vertex 0 needs one color per incident edge
        stats = SearchStats(wall_time=monotonic() - start, backend="precheck",
                            reason=f"vertex 0 has degree {graph.degree(0)}, "
                                   f"palette has {problem.palette_size}")
        return SearchOutcome("UNSAT", None, stats)

    graph, m, edge_adj, cycles, edge_cycles, order, pre_assign = _compile(problem)
    status, colors, nodes, max_depth = kernels.run_search(
        m, problem.palette_size, edge_adj, cycles, edge_cycles, order,
        pre_assign, problem.budget_nodes, problem.budget_seconds,
        backend=backend_name)

    stats = SearchStats(nodes=nodes, max_depth=max_depth,
                        wall_time=monotonic() - start, backend=backend_name)
    if status == SAT:
        witness = EdgeColoring(
            palette_size=problem.palette_size,
            colors={e: colors[i] for i, e in enumerate(graph.edges)})
        _assert_witness(problem, witness)
        return SearchOutcome("SAT", witness, stats)
    if status == UNSAT:
        return SearchOutcome("UNSAT", None, stats)
    if status == BUDGET:
        return SearchOutcome("BUDGET_EXCEEDED", None, stats)
    raise RainbowTriError(f"kernel returned unknown status {status!r}")


def _assert_witness(problem: SearchProblem, witness: EdgeColoring):
    report = certify(problem.graph, witness, sorted(problem.forbidden_lengths))
    if not report.passed:
        failed = [k for k, v in report.claims.items() if v is False]
        raise AssertionError(f"SAT witness failed certification: {failed}")
