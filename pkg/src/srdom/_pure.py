"""Pure-Python/numpy implementations of the search kernels.

Same signatures and results as the compiled ``_ext`` module; used when the
extension is not built or ``SRDOM_PURE=1`` is set.

Graphs arrive in CSR form (``offsets``, ``neighbors``), labels are the ints
``-1, 1, 2`` and ``0`` marks an unassigned vertex inside branch-and-bound.
"""
import numpy as np

INF = 1 << 29
_LAB = (-1, 1, 2)


def _adjacency(offsets, neighbors):
    off = [int(x) for x in offsets]
    flat = [int(x) for x in neighbors]
    return [flat[off[v]:off[v + 1]] for v in range(len(off) - 1)]


def exhaustive(offsets, neighbors, chunk=1 << 16):
    """Minimum weight over all ``3**n`` labelings, lexicographically first witness.

    Returns ``(best, labels, visited)``; ``best`` is None when no labeling is
    valid.
    """
    n = len(offsets) - 1
    total = 3 ** n
    if n == 0:
        return 0, np.zeros(0, dtype=np.int8), 1
    adj = np.zeros((n, n), dtype=np.int16)
    for v, nb in enumerate(_adjacency(offsets, neighbors)):
        adj[v, nb] = 1
    closed = adj + np.eye(n, dtype=np.int16)
    pow3 = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    digit_label = np.array(_LAB, dtype=np.int16)

    best, best_row = None, None
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        labels = digit_label[(idx[:, None] // pow3) % 3]
        w = labels.sum(axis=1)
        if best is not None:
            keep = w < best
            if not keep.any():
                continue
            labels, w = labels[keep], w[keep]
        sums = labels @ closed
        twos = (labels == 2).astype(np.int16) @ adj
        ok = (sums >= 1).all(axis=1) & ((labels != -1) | (twos > 0)).all(axis=1)
        if not ok.any():
            continue
        w_ok = np.where(ok, w, INF)
        i = int(np.argmin(w_ok))
        best, best_row = int(w_ok[i]), labels[i].astype(np.int8)
    return best, best_row, total


def branch_bound(offsets, neighbors, order, prefix, incumbent, floor):
    """Depth-first branch-and-bound over vertices in ``order``.

    Labels are tried in the order -1, 1, 2. The first ``len(prefix)``
    vertices of ``order`` are fixed to ``prefix``. Only labelings strictly
    lighter than ``incumbent`` are reported; the search stops as soon as the
    best weight reaches ``floor``.

    Returns ``(best, labels, nodes)``; ``labels`` is None if nothing beat the
    incumbent.
    """
    adj = _adjacency(offsets, neighbors)
    n = len(adj)
    order = [int(v) for v in order]
    closed = [[v] + adj[v] for v in range(n)]
    lab = [0] * n
    psum = [0] * n
    unas = [len(nb) + 1 for nb in adj]
    twos = [0] * n
    weight = 0
    best, best_lab, nodes = incumbent, None, 0

    if n == 0:
        return (0, np.zeros(0, dtype=np.int8), 0) if incumbent > 0 else (incumbent, None, 0)

    def assign(v, x):
        lab[v] = x
        for u in closed[v]:
            psum[u] += x
            unas[u] -= 1
        if x == 2:
            for u in adj[v]:
                twos[u] += 1

    def unassign(v):
        x = lab[v]
        lab[v] = 0
        for u in closed[v]:
            psum[u] -= x
            unas[u] += 1
        if x == 2:
            for u in adj[v]:
                twos[u] -= 1

    def feasible(v):
        for u in closed[v]:
            left = unas[u]
            if psum[u] + 2 * left < 1:
                return False
            if lab[u] == -1 and left == 0 and twos[u] == 0:
                return False
        return True

    start = len(prefix)
    for d in range(start):
        v, x = order[d], int(prefix[d])
        assign(v, x)
        weight += x
        nodes += 1
        if not feasible(v) or weight - (n - d - 1) >= best:
            return best, None, nodes
    if start == n:
        return (weight, np.array(lab, dtype=np.int8), nodes) if weight < best else (best, None, nodes)

    choice = [0] * (n + 1)
    depth = start
    while True:
        v = order[depth]
        c = choice[depth]
        if c < 3:
            x = _LAB[c]
            choice[depth] = c + 1
            assign(v, x)
            weight += x
            nodes += 1
            if feasible(v) and weight - (n - depth - 1) < best:
                if depth + 1 == n:
                    best, best_lab = weight, np.array(lab, dtype=np.int8)
                    unassign(v)
                    weight -= x
                    if best <= floor:
                        break
                    continue
                depth += 1
                choice[depth] = 0
                continue
            unassign(v)
            weight -= x
        else:
            if depth == start:
                break
            depth -= 1
            u = order[depth]
            weight -= lab[u]
            unassign(u)
    return best, best_lab, nodes


def sweep(succ, colw, init, final_cost, n_cols):
    """Cheapest walk through a column-state automaton.

    ``succ[s, x]`` is the state reached from ``s`` by appending column label
    pair ``x`` (``-1`` if not allowed), ``colw[x]`` that column's weight,
    ``init[x]`` the state of a first column labelled ``x`` and
    ``final_cost[s]`` 0 for acceptable last states (``INF`` otherwise).

    Returns ``(opt, xs)``: the optimal total weight and the lexicographically
    smallest sequence of column label pairs attaining it, or ``(None, None)``.
    """
    succ = np.asarray(succ, dtype=np.int64)
    S = succ.shape[0]
    colw = np.asarray(colw, dtype=np.int64)
    steps = n_cols - 1
    # suffix[k, s]: cheapest way to append k more columns after state s
    suffix = np.full((steps + 1, S + 1), INF, dtype=np.int64)
    suffix[0, :S] = final_cost
    tgt = np.where(succ >= 0, succ, S)
    for k in range(1, steps + 1):
        cand = suffix[k - 1][tgt] + colw
        suffix[k, :S] = np.minimum(cand.min(axis=1), INF)

    succ_l = tgt.tolist()
    colw_l = colw.tolist()
    opt, xs, state = INF, [], -1
    for x in range(9):
        s = int(init[x])
        if s < 0:
            continue
        total = colw_l[x] + int(suffix[steps, s])
        if total < opt:
            opt, state, first = total, s, x
    if opt >= INF:
        return None, None
    xs.append(first)
    remaining = opt - colw_l[first]
    for k in range(steps, 0, -1):
        row = suffix[k - 1]
        nxt = succ_l[state]
        for x in range(9):
            t = nxt[x]
            if t < S and colw_l[x] + int(row[t]) == remaining:
                break
        xs.append(x)
        remaining -= colw_l[x]
        state = t
    return int(opt), np.array(xs, dtype=np.int8)
