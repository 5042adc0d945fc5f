# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels. Mirrors ``srdom._pure`` call for call."""
import numpy as np

cdef int INF = 1 << 29
cdef int LAB[3]
LAB[:] = [-1, 1, 2]


def exhaustive(const int[::1] offsets, const int[::1] neighbors):
    cdef Py_ssize_t n = offsets.shape[0] - 1
    cdef long long total = 1
    cdef Py_ssize_t i, v, k, u
    for i in range(n):
        total *= 3
    if n == 0:
        return 0, np.zeros(0, dtype=np.int8), 1

    digit_a = np.zeros(n, dtype=np.int32)
    lab_a = np.full(n, -1, dtype=np.int32)
    sums_a = np.zeros(n, dtype=np.int32)
    twos_a = np.zeros(n, dtype=np.int32)
    best_a = np.zeros(n, dtype=np.int8)
    cdef int[::1] digit = digit_a
    cdef int[::1] lab = lab_a
    cdef int[::1] sums = sums_a
    cdef int[::1] twos = twos_a
    cdef signed char[::1] best_lab = best_a

    cdef int weight = -<int>n
    cdef int best = INF
    cdef int old, new, delta
    cdef bint ok
    for v in range(n):
        sums[v] = -(offsets[v + 1] - offsets[v] + 1)

    while True:
        if weight < best:
            ok = True
            for v in range(n):
                if sums[v] < 1 or (lab[v] == -1 and twos[v] == 0):
                    ok = False
                    break
            if ok:
                best = weight
                for v in range(n):
                    best_lab[v] = lab[v]
        # odometer step, last vertex fastest
        v = n - 1
        while v >= 0:
            old = lab[v]
            if digit[v] < 2:
                digit[v] += 1
                new = LAB[digit[v]]
            else:
                digit[v] = 0
                new = -1
            delta = new - old
            lab[v] = new
            weight += delta
            sums[v] += delta
            for k in range(offsets[v], offsets[v + 1]):
                u = neighbors[k]
                sums[u] += delta
                if old == 2:
                    twos[u] -= 1
                if new == 2:
                    twos[u] += 1
            if digit[v] != 0:
                break
            v -= 1
        if v < 0:
            break
    if best == INF:
        return None, None, total
    return best, best_a, total


cdef inline void _assign(int v, int x, const int[::1] offsets, const int[::1] neighbors,
                         int[::1] lab, int[::1] psum, int[::1] unas, int[::1] twos) noexcept nogil:
    cdef Py_ssize_t k
    cdef int u
    lab[v] = x
    psum[v] += x
    unas[v] -= 1
    for k in range(offsets[v], offsets[v + 1]):
        u = neighbors[k]
        psum[u] += x
        unas[u] -= 1
        if x == 2:
            twos[u] += 1


cdef inline void _unassign(int v, const int[::1] offsets, const int[::1] neighbors,
                           int[::1] lab, int[::1] psum, int[::1] unas, int[::1] twos) noexcept nogil:
    cdef Py_ssize_t k
    cdef int u
    cdef int x = lab[v]
    lab[v] = 0
    psum[v] -= x
    unas[v] += 1
    for k in range(offsets[v], offsets[v + 1]):
        u = neighbors[k]
        psum[u] -= x
        unas[u] += 1
        if x == 2:
            twos[u] -= 1


cdef inline bint _ok_at(int u, int[::1] lab, int[::1] psum, int[::1] unas,
                        int[::1] twos) noexcept nogil:
    if psum[u] + 2 * unas[u] < 1:
        return False
    if lab[u] == -1 and unas[u] == 0 and twos[u] == 0:
        return False
    return True


cdef inline bint _feasible(int v, const int[::1] offsets, const int[::1] neighbors,
                           int[::1] lab, int[::1] psum, int[::1] unas,
                           int[::1] twos) noexcept nogil:
    cdef Py_ssize_t k
    if not _ok_at(v, lab, psum, unas, twos):
        return False
    for k in range(offsets[v], offsets[v + 1]):
        if not _ok_at(neighbors[k], lab, psum, unas, twos):
            return False
    return True


def branch_bound(const int[::1] offsets, const int[::1] neighbors, order, prefix,
                 int incumbent, int floor):
    cdef Py_ssize_t n = offsets.shape[0] - 1
    if n == 0:
        if incumbent > 0:
            return 0, np.zeros(0, dtype=np.int8), 0
        return incumbent, None, 0

    cdef int[::1] ord_ = np.ascontiguousarray(order, dtype=np.int32)
    pre_a = np.ascontiguousarray(prefix, dtype=np.int32)
    cdef int[::1] pre = pre_a
    lab_a = np.zeros(n, dtype=np.int32)
    psum_a = np.zeros(n, dtype=np.int32)
    unas_a = np.zeros(n, dtype=np.int32)
    twos_a = np.zeros(n, dtype=np.int32)
    choice_a = np.zeros(n + 1, dtype=np.int32)
    cdef int[::1] lab = lab_a
    cdef int[::1] psum = psum_a
    cdef int[::1] unas = unas_a
    cdef int[::1] twos = twos_a
    cdef int[::1] choice = choice_a
    best_lab = None

    cdef Py_ssize_t v, d, start = pre.shape[0]
    cdef int depth, c, x
    cdef int weight = 0
    cdef int best = incumbent
    cdef long long nodes = 0
    for v in range(n):
        unas[v] = offsets[v + 1] - offsets[v] + 1

    for d in range(start):
        v = ord_[d]
        x = pre[d]
        _assign(v, x, offsets, neighbors, lab, psum, unas, twos)
        weight += x
        nodes += 1
        if not _feasible(v, offsets, neighbors, lab, psum, unas, twos) \
                or weight - (n - d - 1) >= best:
            return best, None, nodes
    if start == n:
        if weight < best:
            return weight, lab_a.astype(np.int8), nodes
        return best, None, nodes

    depth = start
    while True:
        v = ord_[depth]
        c = choice[depth]
        if c < 3:
            x = LAB[c]
            choice[depth] = c + 1
            _assign(v, x, offsets, neighbors, lab, psum, unas, twos)
            weight += x
            nodes += 1
            if _feasible(v, offsets, neighbors, lab, psum, unas, twos) \
                    and weight - (n - depth - 1) < best:
                if depth + 1 == n:
                    best = weight
                    best_lab = lab_a.astype(np.int8)
                    _unassign(v, offsets, neighbors, lab, psum, unas, twos)
                    weight -= x
                    if best <= floor:
                        break
                    continue
                depth += 1
                choice[depth] = 0
                continue
            _unassign(v, offsets, neighbors, lab, psum, unas, twos)
            weight -= x
        else:
            if depth == start:
                break
            depth -= 1
            v = ord_[depth]
            weight -= lab[v]
            _unassign(v, offsets, neighbors, lab, psum, unas, twos)
    return best, best_lab, nodes


def sweep(succ, colw, init, final_cost, Py_ssize_t n_cols):
    cdef int[:, ::1] tr = np.ascontiguousarray(succ, dtype=np.int32)
    cdef int[::1] cw = np.ascontiguousarray(colw, dtype=np.int32)
    cdef int[::1] ini = np.ascontiguousarray(init, dtype=np.int32)
    cdef Py_ssize_t S = tr.shape[0]
    cdef Py_ssize_t steps = n_cols - 1
    suffix_a = np.full((steps + 1, S), INF, dtype=np.int32)
    cdef int[:, ::1] suffix = suffix_a
    cdef int[::1] fin = np.ascontiguousarray(final_cost, dtype=np.int32)
    cdef Py_ssize_t k, s, x, t
    cdef int best, cand, opt, remaining, state, first

    for s in range(S):
        suffix[0, s] = fin[s] if fin[s] < INF else INF
    for k in range(1, steps + 1):
        for s in range(S):
            best = INF
            for x in range(9):
                t = tr[s, x]
                if t >= 0 and suffix[k - 1, t] < INF:
                    cand = cw[x] + suffix[k - 1, t]
                    if cand < best:
                        best = cand
            suffix[k, s] = best

    opt = INF
    state = -1
    first = -1
    for x in range(9):
        s = ini[x]
        if s < 0 or suffix[steps, s] >= INF:
            continue
        cand = cw[x] + suffix[steps, s]
        if cand < opt:
            opt = cand
            state = s
            first = x
    if opt >= INF:
        return None, None

    xs_a = np.zeros(n_cols, dtype=np.int8)
    cdef signed char[::1] xs = xs_a
    xs[0] = first
    remaining = opt - cw[first]
    for k in range(steps, 0, -1):
        for x in range(9):
            t = tr[state, x]
            if t >= 0 and suffix[k - 1, t] < INF and cw[x] + suffix[k - 1, t] == remaining:
                break
        xs[steps - k + 1] = x
        remaining -= cw[x]
        state = t
    return opt, xs_a
