"""Independent brute-force oracles the implementation is checked against.

Everything here is deliberately naive: subsets and permutations for cycles,
plain recursion with properness filtering for colorings.  No propagation,
no symmetry breaking, no shared code with the library's search or cycle
enumeration paths.
"""

from itertools import combinations, permutations

from rainbowtri import canonical_cycle, enumerate_cycles
from rainbowtri.triangulation import cycle_edges


def subset_cycles(graph, length):
    """All cycles of one length: try every vertex subset of that size and
    collect the Hamiltonian cycles of the induced subgraph."""
    found = set()
    for subset in combinations(range(graph.n), length):
        first, rest = subset[0], subset[1:]
        for perm in permutations(rest):
            cyc = (first,) + perm
            if all(cyc[(i + 1) % length] in graph.neighbors[cyc[i]]
                   for i in range(length)):
                found.add(canonical_cycle(cyc))
    return sorted(found)


def _edge_adjacency(graph):
    incident = [[] for _ in range(graph.n)]
    for i, (u, v) in enumerate(graph.edges):
        incident[u].append(i)
        incident[v].append(i)
    return [[f for f in sorted(set(incident[u]) | set(incident[v])) if f != i]
            for i, (u, v) in enumerate(graph.edges)]


def _forbidden_cycles(graph, lengths):
    out = []
    for length in lengths:
        for cyc in enumerate_cycles(graph, length):
            out.append([graph.edge_index[e] for e in cycle_edges(cyc)])
    return out


def naive_color_verdict(graph, palette, forbidden_lengths):
    """SAT/UNSAT by enumerating every proper coloring in edge order and
    testing the rainbow constraints only on complete colorings."""
    m = graph.num_edges
    adj = _edge_adjacency(graph)
    forbidden = _forbidden_cycles(graph, forbidden_lengths)
    colors = [0] * m

    def conforms():
        for cyc in forbidden:
            cols = [colors[e] for e in cyc]
            if len(set(cols)) == len(cols):
                return False
        return True

    def rec(i):
        if i == m:
            return conforms()
        for c in range(1, palette + 1):
            if all(colors[f] != c for f in adj[i]):
                colors[i] = c
                if rec(i + 1):
                    return True
                colors[i] = 0
        return False

    return "SAT" if rec(0) else "UNSAT"


def proper_colorings_up_to_permutation(graph, max_colors):
    """Every proper edge coloring with at most ``max_colors`` colors, one
    representative per color-permutation class (colors are introduced in
    increasing order).  Yields tuples aligned with ``graph.edges``."""
    m = graph.num_edges
    adj = _edge_adjacency(graph)
    colors = [0] * m

    def rec(i, used):
        if i == m:
            yield tuple(colors)
            return
        for c in range(1, min(used + 1, max_colors) + 1):
            if all(colors[f] != c for f in adj[i]):
                colors[i] = c
                yield from rec(i + 1, max(used, c))
                colors[i] = 0

    yield from rec(0, 0)
