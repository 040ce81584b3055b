"""Pure-Python reference kernels for the two hot inner loops.

The compiled extension (``_kernel_cy``) implements the same two entry points
with identical semantics; the test suite asserts node-for-node agreement.
Keep the two files in lockstep.
"""

from __future__ import annotations

from itertools import combinations
from time import monotonic

SAT = 1
UNSAT = 0
BUDGET = -1


def find_smallest_cut(adjacency, max_size):
    """Smallest vertex subset whose removal disconnects the graph.

    Subsets are scanned in increasing size, lexicographically within a size;
    the first disconnecting subset is returned (None if there is none of size
    at most ``max_size``).  Pure enumeration, no shortcuts: this is the oracle
    side of the connectivity check.
    """
    n = len(adjacency)
    removed = [False] * n
    for size in range(1, max_size + 1):
        for combo in combinations(range(n), size):
            for v in combo:
                removed[v] = True
            if _disconnected(adjacency, removed, n - size):
                for v in combo:
                    removed[v] = False
                return list(combo)
            for v in combo:
                removed[v] = False
    return None


def _disconnected(adjacency, removed, remaining):
    if remaining <= 1:
        return False
    start = 0
    while removed[start]:
        start += 1
    seen = [False] * len(adjacency)
    seen[start] = True
    stack = [start]
    count = 1
    while stack:
        v = stack.pop()
        for u in adjacency[v]:
            if not seen[u] and not removed[u]:
                seen[u] = True
                count += 1
                stack.append(u)
    return count < remaining


def run_search(num_edges, palette, edge_adj, cycles, edge_cycles, order,
               pre_assign, budget_nodes, budget_seconds):
    """Depth-first search for a proper edge coloring avoiding rainbow cycles.

    Edges are assigned in the fixed ``order``; colors are tried ascending.
    After every assignment the forbidden cycles through the edge are examined:
    a fully colored rainbow cycle is a conflict, and a cycle with exactly one
    uncolored edge whose colored part is rainbow restricts that edge to the
    colors already used on the cycle (conflict if none survives properness,
    forced assignment if exactly one does).  Forced assignments propagate.

    Returns ``(status, colors, nodes, max_depth)`` where nodes counts color
    attempts at decision points and max_depth the deepest assignment count.
    """
    color = [0] * num_edges
    trail = []
    state = {"nodes": 0, "max_depth": 0}
    deadline = monotonic() + budget_seconds

    def assign(e, c):
        for f in edge_adj[e]:
            if color[f] == c:
                return False
        color[e] = c
        trail.append(e)
        return True

    def propagate(e0):
        queue = [e0]
        qi = 0
        while qi < len(queue):
            e = queue[qi]
            qi += 1
            for cid in edge_cycles[e]:
                cyc = cycles[cid]
                uncolored = -1
                used = []
                rainbow_so_far = True
                for f in cyc:
                    c = color[f]
                    if c == 0:
                        if uncolored >= 0:
                            uncolored = -2  # two or more open edges: no information
                            break
                        uncolored = f
                    elif c in used:
                        rainbow_so_far = False
                        break
                    else:
                        used.append(c)
                if not rainbow_so_far or uncolored == -2:
                    continue
                if uncolored == -1:
                    return False  # cycle completed rainbow
                allowed = []
                for c in used:
                    ok = True
                    for f in edge_adj[uncolored]:
                        if color[f] == c:
                            ok = False
                            break
                    if ok:
                        allowed.append(c)
                if not allowed:
                    return False
                if len(allowed) == 1:
                    color[uncolored] = allowed[0]
                    trail.append(uncolored)
                    queue.append(uncolored)
        return True

    def undo(mark):
        while len(trail) > mark:
            color[trail.pop()] = 0

    for e, c in pre_assign:
        if not (assign(e, c) and propagate(e)):
            return (UNSAT, None, 0, len(trail))

    num_order = len(order)

    def search(pos):
        while pos < num_order and color[order[pos]] != 0:
            pos += 1
        if len(trail) > state["max_depth"]:
            state["max_depth"] = len(trail)
        if pos == num_order:
            return SAT
        e = order[pos]
        for c in range(1, palette + 1):
            state["nodes"] += 1
            if state["nodes"] > budget_nodes:
                return BUDGET
            if state["nodes"] % 2048 == 0 and monotonic() > deadline:
                return BUDGET
            mark = len(trail)
            if assign(e, c) and propagate(e):
                result = search(pos + 1)
                if result != UNSAT:
                    return result
            undo(mark)
        return UNSAT

    status = search(0)
    witness = list(color) if status == SAT else None
    return (status, witness, state["nodes"], state["max_depth"])
