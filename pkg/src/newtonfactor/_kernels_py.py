"""Pure-Python search kernels (fallback for the compiled extension).

Field elements are log-encoded: 0 is zero and ``1 + e`` stands for ``g**e``
where ``g`` generates the multiplicative group of order ``m1``.  Addition goes
through the Zech table ``zech[k] = log(1 + g**k)`` (``-1`` when that is zero).
"""

FOUND = 1
NOT_FOUND = 0
CAPPED = -1


def _mul(a, b, m1):
    if a == 0 or b == 0:
        return 0
    return (a + b - 2) % m1 + 1


def _add(a, b, m1, zech):
    if a == 0:
        return b
    if b == 0:
        return a
    z = zech[(b - a) % m1]
    if z < 0:
        return 0
    return (a - 1 + z) % m1 + 1


def _neg(a, m1, neg1):
    if a == 0:
        return 0
    return (a - 1 + neg1) % m1 + 1


def search_factor(
    m1, zech, neg1,
    nA, nB, nC,
    n_steps, step_kind, step_pos, step_vert,
    e_off, e_len, e_pos, e_anchor, c_off, c_cnt, cand,
    solve_tab, target_r, prod_tab, target_c,
    cap, out_q,
):
    """Backtracking search for Q on the A-points with Q*R equal to the target.

    Position 0 of Q is fixed to 1.  A point step tries every value at one
    position; an edge step picks a candidate edge polynomial (a monic divisor
    of the matching edge of the target) and a scale, which is forced when
    some point of the edge is already placed.  ``out_q`` receives the
    log-encoded coefficients on success.  Returns ``(status, nodes)``.
    """
    q = [0] * nA
    q[0] = 1
    r = [0] * nB
    acc = [0] * nC
    ctr = [-1] * (n_steps + 1)
    nodes = 0
    k = 0
    while True:
        if k == n_steps:
            for j in range(nB):
                v = target_r[j]
                for a in range(1, nA):
                    if q[a] == 0:
                        continue
                    t = solve_tab[a * nB + j]
                    if t >= 0 and r[t]:
                        v = _add(v, _neg(_mul(q[a], r[t], m1), m1, neg1), m1, zech)
                r[j] = v
            for c in range(nC):
                acc[c] = 0
            for a in range(nA):
                if q[a] == 0:
                    continue
                base = a * nB
                for j in range(nB):
                    if r[j]:
                        c = prod_tab[base + j]
                        acc[c] = _add(acc[c], _mul(q[a], r[j], m1), m1, zech)
            ok = True
            for c in range(nC):
                if acc[c] != target_c[c]:
                    ok = False
                    break
            if ok:
                for a in range(nA):
                    out_q[a] = q[a]
                return FOUND, nodes
            k -= 1
            if k < 0:
                return NOT_FOUND, nodes
            continue
        placed = False
        if step_kind[k] == 0:
            v = ctr[k] + 1
            if v == 0 and step_vert[k]:
                v = 1
            if v <= m1:
                ctr[k] = v
                q[step_pos[k]] = v
                placed = True
        else:
            off, ln = e_off[k], e_len[k]
            anchor = -1
            for i in range(ln):
                if e_anchor[off + i]:
                    anchor = i
                    break
            limit = c_cnt[k] if anchor >= 0 else c_cnt[k] * m1
            ci = ctr[k] + 1
            while ci < limit:
                if anchor >= 0:
                    cidx = ci
                    dv = cand[c_off[k] + cidx * ln + anchor]
                    av = q[e_pos[off + anchor]]
                    if dv == 0 or av == 0:
                        ci += 1
                        continue
                    scale = (av - dv) % m1 + 1
                else:
                    cidx = ci // m1
                    scale = ci % m1 + 1
                good = True
                for i in range(ln):
                    val = _mul(cand[c_off[k] + cidx * ln + i], scale, m1)
                    if e_anchor[off + i]:
                        if q[e_pos[off + i]] != val:
                            good = False
                            break
                if good:
                    for i in range(ln):
                        if not e_anchor[off + i]:
                            q[e_pos[off + i]] = _mul(cand[c_off[k] + cidx * ln + i], scale, m1)
                    placed = True
                    break
                ci += 1
            ctr[k] = ci
        if not placed:
            ctr[k] = -1
            k -= 1
            if k < 0:
                return NOT_FOUND, nodes
            continue
        nodes += 1
        if nodes > cap:
            return CAPPED, nodes
        k += 1
        if k < n_steps:
            ctr[k] = -1


def search_pair(m1, zech, nP, nQ, prod_tab, in_target, nS, cap, out_p, out_q):
    """Exhaustive search for P, Q with all coefficients nonzero (first ones 1)
    whose product has support exactly the flagged sum points.

    Returns ``(status, nodes)``.
    """
    n = nP + nQ
    x = [1] * n
    acc = [0] * nS
    nodes = 0
    while True:
        nodes += 1
        if nodes > cap:
            return CAPPED, nodes
        for s in range(nS):
            acc[s] = 0
        for a in range(nP):
            base = a * nQ
            for b in range(nQ):
                s = prod_tab[base + b]
                acc[s] = _add(acc[s], _mul(x[a], x[nP + b], m1), m1, zech)
        ok = True
        for s in range(nS):
            if (acc[s] != 0) != (in_target[s] != 0):
                ok = False
                break
        if ok:
            for a in range(nP):
                out_p[a] = x[a]
            for b in range(nQ):
                out_q[b] = x[nP + b]
            return FOUND, nodes
        # odometer over every coordinate except the two leading ones
        i = n - 1
        while i >= 0:
            if i == 0 or i == nP:
                i -= 1
                continue
            if x[i] < m1:
                x[i] += 1
                break
            x[i] = 1
            i -= 1
        if i < 0:
            return NOT_FOUND, nodes
