# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contract and encoding as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

cdef enum:
    C_FOUND = 1
    C_NOT_FOUND = 0
    C_CAPPED = -1

FOUND = C_FOUND
NOT_FOUND = C_NOT_FOUND
CAPPED = C_CAPPED


cdef inline long long _mod(long long a, long long m) nogil:
    a %= m
    return a + m if a < 0 else a


cdef inline long long _mul(long long a, long long b, long long m1) nogil:
    if a == 0 or b == 0:
        return 0
    return (a + b - 2) % m1 + 1


cdef inline long long _add(long long a, long long b, long long m1, const long long[:] zech) nogil:
    cdef long long z
    if a == 0:
        return b
    if b == 0:
        return a
    z = zech[_mod(b - a, m1)]
    if z < 0:
        return 0
    return (a - 1 + z) % m1 + 1


cdef inline long long _neg(long long a, long long m1, long long neg1) nogil:
    if a == 0:
        return 0
    return (a - 1 + neg1) % m1 + 1


def search_factor(
    long long m1, const long long[:] zech, long long neg1,
    int nA, int nB, int nC,
    int n_steps, const long long[:] step_kind, const long long[:] step_pos, const long long[:] step_vert,
    const long long[:] e_off, const long long[:] e_len, const long long[:] e_pos,
    const long long[:] e_anchor, const long long[:] c_off, const long long[:] c_cnt,
    const long long[:] cand,
    const long long[:] solve_tab, const long long[:] target_r,
    const long long[:] prod_tab, const long long[:] target_c,
    long long cap, long long[:] out_q,
):
    cdef long long* q = <long long*> malloc(sizeof(long long) * (nA + 1))
    cdef long long* r = <long long*> malloc(sizeof(long long) * (nB + 1))
    cdef long long* acc = <long long*> malloc(sizeof(long long) * (nC + 1))
    cdef long long* ctr = <long long*> malloc(sizeof(long long) * (n_steps + 1))
    cdef long long nodes = 0
    cdef long long v, t, cc, ci, limit, cidx, scale, dv, av, val, off
    cdef int k, a, j, c, i, base, ln, anchor
    cdef bint ok, placed, good
    cdef int status = C_NOT_FOUND
    try:
        with nogil:
            for a in range(nA):
                q[a] = 0
            q[0] = 1
            for i in range(n_steps + 1):
                ctr[i] = -1
            k = 0
            while True:
                if k == n_steps:
                    for j in range(nB):
                        v = target_r[j]
                        for a in range(1, nA):
                            if q[a] == 0:
                                continue
                            t = solve_tab[a * nB + j]
                            if t >= 0 and r[t] != 0:
                                v = _add(v, _neg(_mul(q[a], r[t], m1), m1, neg1), m1, zech)
                        r[j] = v
                    for c in range(nC):
                        acc[c] = 0
                    for a in range(nA):
                        if q[a] == 0:
                            continue
                        base = a * nB
                        for j in range(nB):
                            if r[j] != 0:
                                cc = prod_tab[base + j]
                                acc[cc] = _add(acc[cc], _mul(q[a], r[j], m1), m1, zech)
                    ok = True
                    for c in range(nC):
                        if acc[c] != target_c[c]:
                            ok = False
                            break
                    if ok:
                        for a in range(nA):
                            out_q[a] = q[a]
                        status = C_FOUND
                        break
                    k -= 1
                    if k < 0:
                        break
                    continue
                placed = False
                if step_kind[k] == 0:
                    v = ctr[k] + 1
                    if v == 0 and step_vert[k] != 0:
                        v = 1
                    if v <= m1:
                        ctr[k] = v
                        q[step_pos[k]] = v
                        placed = True
                else:
                    off = e_off[k]
                    ln = e_len[k]
                    anchor = -1
                    for i in range(ln):
                        if e_anchor[off + i] != 0:
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
                            scale = _mod(av - dv, m1) + 1
                        else:
                            cidx = ci / m1
                            scale = ci % m1 + 1
                        good = True
                        for i in range(ln):
                            if e_anchor[off + i] != 0:
                                val = _mul(cand[c_off[k] + cidx * ln + i], scale, m1)
                                if q[e_pos[off + i]] != val:
                                    good = False
                                    break
                        if good:
                            for i in range(ln):
                                if e_anchor[off + i] == 0:
                                    q[e_pos[off + i]] = _mul(cand[c_off[k] + cidx * ln + i], scale, m1)
                            placed = True
                            break
                        ci += 1
                    ctr[k] = ci
                if not placed:
                    ctr[k] = -1
                    k -= 1
                    if k < 0:
                        break
                    continue
                nodes += 1
                if nodes > cap:
                    status = C_CAPPED
                    break
                k += 1
                if k < n_steps:
                    ctr[k] = -1
    finally:
        free(q)
        free(r)
        free(acc)
        free(ctr)
    return status, nodes


def search_pair(long long m1, const long long[:] zech, int nP, int nQ,
                const long long[:] prod_tab, const long long[:] in_target, int nS,
                long long cap, long long[:] out_p, long long[:] out_q):
    cdef int n = nP + nQ
    cdef long long* x = <long long*> malloc(sizeof(long long) * (n + 1))
    cdef long long* acc = <long long*> malloc(sizeof(long long) * (nS + 1))
    cdef long long nodes = 0
    cdef int a, b, s, i, base
    cdef bint ok
    cdef int status = C_NOT_FOUND
    try:
        with nogil:
            for i in range(n):
                x[i] = 1
            while True:
                nodes += 1
                if nodes > cap:
                    status = C_CAPPED
                    break
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
                    status = C_FOUND
                    break
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
                    break
    finally:
        free(x)
        free(acc)
    return status, nodes
