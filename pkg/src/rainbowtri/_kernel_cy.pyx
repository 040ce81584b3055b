# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernel_py``: same entry points, same semantics.

The search must agree with the pure-Python kernel node for node; the test
suite enforces that.  Any change here must be mirrored in ``_kernel_py.py``.
"""

from cpython cimport array
import array

from time import monotonic

SAT = 1
UNSAT = 0
BUDGET = -1

cdef int C_SAT = 1
cdef int C_UNSAT = 0
cdef int C_BUDGET = -1


# ---------------------------------------------------------------------------
# smallest vertex cut
# ---------------------------------------------------------------------------

def find_smallest_cut(adjacency, max_size):
    """Smallest disconnecting vertex subset (sizes ascending, lexicographic)."""
    cdef int n = len(adjacency)
    cdef array.array adj_start_a = array.array('i', [0] * (n + 1))
    cdef int total = 0
    cdef int i, j
    for i in range(n):
        total += len(adjacency[i])
    cdef array.array adj_flat_a = array.array('i', [0] * total)
    cdef int[:] adj_start = adj_start_a
    cdef int[:] adj_flat = adj_flat_a
    cdef int pos = 0
    for i in range(n):
        adj_start[i] = pos
        for j in adjacency[i]:
            adj_flat[pos] = j
            pos += 1
    adj_start[n] = pos

    cdef array.array removed_a = array.array('b', [0] * n)
    cdef array.array seen_a = array.array('b', [0] * n)
    cdef array.array stack_a = array.array('i', [0] * n)
    cdef array.array idx_a = array.array('i', [0] * (max_size + 1))
    cdef signed char[:] removed = removed_a
    cdef signed char[:] seen = seen_a
    cdef int[:] stack = stack_a
    cdef int[:] idx = idx_a

    cdef int size, k, v
    cdef bint found
    for size in range(1, max_size + 1):
        if size > n - 2:
            break
        for k in range(size):
            idx[k] = k
        while True:
            for k in range(size):
                removed[idx[k]] = 1
            found = _disconnected(adj_start, adj_flat, removed, seen, stack,
                                  n, n - size)
            for k in range(size):
                removed[idx[k]] = 0
            if found:
                return [idx[k] for k in range(size)]
            # next lexicographic combination
            k = size - 1
            while k >= 0 and idx[k] == n - size + k:
                k -= 1
            if k < 0:
                break
            idx[k] += 1
            for j in range(k + 1, size):
                idx[j] = idx[j - 1] + 1
    return None


cdef bint _disconnected(int[:] adj_start, int[:] adj_flat,
                        signed char[:] removed, signed char[:] seen,
                        int[:] stack, int n, int remaining):
    if remaining <= 1:
        return False
    cdef int start = 0
    while removed[start]:
        start += 1
    cdef int i
    for i in range(n):
        seen[i] = 0
    seen[start] = 1
    cdef int top = 0
    stack[top] = start
    top += 1
    cdef int count = 1
    cdef int v, u, a
    while top:
        top -= 1
        v = stack[top]
        for a in range(adj_start[v], adj_start[v + 1]):
            u = adj_flat[a]
            if not seen[u] and not removed[u]:
                seen[u] = 1
                count += 1
                stack[top] = u
                top += 1
    return count < remaining


# ---------------------------------------------------------------------------
# backtracking edge-coloring search
# ---------------------------------------------------------------------------

cdef struct SearchState:
    int num_edges
    int palette
    int num_order
    long long nodes
    long long budget_nodes
    int max_depth
    int trail_len
    double deadline


cdef int[:] _flatten(list lists, int[:] start, array.array flat_a):
    cdef int[:] flat = flat_a
    cdef int pos = 0
    cdef int i, x
    for i in range(len(lists)):
        start[i] = pos
        for x in lists[i]:
            flat[pos] = x
            pos += 1
    start[len(lists)] = pos
    return flat


def run_search(num_edges, palette, edge_adj, cycles, edge_cycles, order,
               pre_assign, budget_nodes, budget_seconds):
    """Same contract as ``_kernel_py.run_search``; see its docstring."""
    cdef int m = num_edges
    cdef int ncyc = len(cycles)

    cdef array.array adj_start_a = array.array('i', [0] * (m + 1))
    cdef array.array adj_flat_a = array.array(
        'i', [0] * sum(len(x) for x in edge_adj))
    cdef int[:] adj_start = adj_start_a
    cdef int[:] adj_flat = _flatten(edge_adj, adj_start, adj_flat_a)

    cdef array.array cyc_start_a = array.array('i', [0] * (ncyc + 1))
    cdef array.array cyc_flat_a = array.array(
        'i', [0] * sum(len(x) for x in cycles))
    cdef int[:] cyc_start = cyc_start_a
    cdef int[:] cyc_flat = _flatten(cycles, cyc_start_a, cyc_flat_a)

    cdef array.array ec_start_a = array.array('i', [0] * (m + 1))
    cdef array.array ec_flat_a = array.array(
        'i', [0] * sum(len(x) for x in edge_cycles))
    cdef int[:] ec_start = ec_start_a
    cdef int[:] ec_flat = _flatten(edge_cycles, ec_start_a, ec_flat_a)

    cdef array.array order_a = array.array('i', order)
    cdef int[:] order_v = order_a

    cdef array.array color_a = array.array('i', [0] * m)
    cdef array.array trail_a = array.array('i', [0] * m)
    cdef array.array queue_a = array.array('i', [0] * m)
    cdef int maxcyc = 0
    for cyc in cycles:
        if len(cyc) > maxcyc:
            maxcyc = len(cyc)
    cdef array.array used_a = array.array('i', [0] * max(maxcyc, 1))
    cdef int[:] color = color_a
    cdef int[:] trail = trail_a
    cdef int[:] queue = queue_a
    cdef int[:] used = used_a

    cdef SearchState st
    st.num_edges = m
    st.palette = palette
    st.num_order = len(order)
    st.nodes = 0
    st.budget_nodes = budget_nodes
    st.max_depth = 0
    st.trail_len = 0
    st.deadline = monotonic() + budget_seconds

    cdef int e, c
    for e, c in pre_assign:
        if not (_assign(&st, color, trail, adj_start, adj_flat, e, c)
                and _propagate(&st, color, trail, queue, used,
                               adj_start, adj_flat, cyc_start, cyc_flat,
                               ec_start, ec_flat, e)):
            return (UNSAT, None, 0, st.trail_len)

    cdef int status = _search(&st, color, trail, queue, used, order_v,
                              adj_start, adj_flat, cyc_start, cyc_flat,
                              ec_start, ec_flat, 0)
    witness = [color[i] for i in range(m)] if status == C_SAT else None
    return (int(status), witness, int(st.nodes), int(st.max_depth))


cdef bint _assign(SearchState *st, int[:] color, int[:] trail,
                  int[:] adj_start, int[:] adj_flat, int e, int c):
    cdef int a
    for a in range(adj_start[e], adj_start[e + 1]):
        if color[adj_flat[a]] == c:
            return False
    color[e] = c
    trail[st.trail_len] = e
    st.trail_len += 1
    return True


cdef bint _propagate(SearchState *st, int[:] color, int[:] trail, int[:] queue,
                     int[:] used, int[:] adj_start, int[:] adj_flat,
                     int[:] cyc_start, int[:] cyc_flat,
                     int[:] ec_start, int[:] ec_flat, int e0):
    cdef int qlen = 0, qi = 0
    queue[qlen] = e0
    qlen += 1
    cdef int e, k, cid, f, c, uncolored, nused, i
    cdef bint rainbow_so_far, dup, ok
    cdef int allowed_count, allowed_color
    cdef int a
    while qi < qlen:
        e = queue[qi]
        qi += 1
        for k in range(ec_start[e], ec_start[e + 1]):
            cid = ec_flat[k]
            uncolored = -1
            nused = 0
            rainbow_so_far = True
            for i in range(cyc_start[cid], cyc_start[cid + 1]):
                f = cyc_flat[i]
                c = color[f]
                if c == 0:
                    if uncolored >= 0:
                        uncolored = -2
                        break
                    uncolored = f
                else:
                    dup = False
                    for a in range(nused):
                        if used[a] == c:
                            dup = True
                            break
                    if dup:
                        rainbow_so_far = False
                        break
                    used[nused] = c
                    nused += 1
            if not rainbow_so_far or uncolored == -2:
                continue
            if uncolored == -1:
                return False
            allowed_count = 0
            allowed_color = 0
            for a in range(nused):
                c = used[a]
                ok = True
                for i in range(adj_start[uncolored], adj_start[uncolored + 1]):
                    if color[adj_flat[i]] == c:
                        ok = False
                        break
                if ok:
                    allowed_count += 1
                    if allowed_count == 1:
                        allowed_color = c
            if allowed_count == 0:
                return False
            if allowed_count == 1:
                color[uncolored] = allowed_color
                trail[st.trail_len] = uncolored
                st.trail_len += 1
                queue[qlen] = uncolored
                qlen += 1
    return True


cdef int _search(SearchState *st, int[:] color, int[:] trail, int[:] queue,
                 int[:] used, int[:] order, int[:] adj_start, int[:] adj_flat,
                 int[:] cyc_start, int[:] cyc_flat,
                 int[:] ec_start, int[:] ec_flat, int pos):
    while pos < st.num_order and color[order[pos]] != 0:
        pos += 1
    if st.trail_len > st.max_depth:
        st.max_depth = st.trail_len
    if pos == st.num_order:
        return C_SAT
    cdef int e = order[pos]
    cdef int c, mark, result
    for c in range(1, st.palette + 1):
        st.nodes += 1
        if st.nodes > st.budget_nodes:
            return C_BUDGET
        if st.nodes % 2048 == 0 and monotonic() > st.deadline:
            return C_BUDGET
        mark = st.trail_len
        if (_assign(st, color, trail, adj_start, adj_flat, e, c)
                and _propagate(st, color, trail, queue, used,
                               adj_start, adj_flat, cyc_start, cyc_flat,
                               ec_start, ec_flat, e)):
            result = _search(st, color, trail, queue, used, order,
                             adj_start, adj_flat, cyc_start, cyc_flat,
                             ec_start, ec_flat, pos + 1)
            if result != C_UNSAT:
                return result
        while st.trail_len > mark:
            st.trail_len -= 1
            color[trail[st.trail_len]] = 0
    return C_UNSAT
