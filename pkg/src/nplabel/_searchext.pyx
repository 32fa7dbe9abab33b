# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel; behavioral twin of ``_searchcore.py``."""

from libc.stdlib cimport calloc, free

STATUS_FOUND = 0
STATUS_EXHAUSTED = 1
STATUS_INCONCLUSIVE = 2


cdef inline long c_gcd(long a, long b) nogil:
    cdef long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def run_search(int n, indptr_seq, indices_seq, order_seq, long budget, bint find_all):
    """Same contract as nplabel._searchcore.run_search."""
    cdef int m = len(indices_seq)
    cdef int *indptr = <int *> calloc(n + 1, sizeof(int))
    cdef int *indices = <int *> calloc(m if m > 0 else 1, sizeof(int))
    cdef int *order = <int *> calloc(n, sizeof(int))
    cdef int *deg = <int *> calloc(n, sizeof(int))
    cdef long *g = <long *> calloc(n, sizeof(long))
    cdef int *rem = <int *> calloc(n, sizeof(int))
    cdef int *label_of = <int *> calloc(n, sizeof(int))
    cdef char *used = <char *> calloc(n + 2, sizeof(char))
    cdef int *last = <int *> calloc(n + 1, sizeof(int))
    # trail of (vertex, previous gcd) undo records; at most one entry per
    # directed edge on the assignment stack
    cdef int *trail_u = <int *> calloc(m if m > 0 else 1, sizeof(int))
    cdef long *trail_g = <long *> calloc(m if m > 0 else 1, sizeof(long))
    cdef int *tstart = <int *> calloc(n + 1, sizeof(int))

    cdef int i, v, u, d, lab, tlen, start
    cdef long nodes = 0
    cdef bint advanced, pruned
    cdef int status = STATUS_EXHAUSTED
    solutions = []

    try:
        for i in range(n + 1):
            indptr[i] = indptr_seq[i]
        for i in range(m):
            indices[i] = indices_seq[i]
        for i in range(n):
            order[i] = order_seq[i]
            deg[i] = indptr[i + 1] - indptr[i]
            rem[i] = deg[i]

        tlen = 0
        d = 0
        while d >= 0:
            if d == n:
                solutions.append([label_of[i] for i in range(n)])
                if not find_all:
                    status = STATUS_FOUND
                    break
                d -= 1
                v = order[d]
                used[label_of[v]] = 0
                label_of[v] = 0
                while tlen > tstart[d]:
                    tlen -= 1
                    g[trail_u[tlen]] = trail_g[tlen]
                    rem[trail_u[tlen]] += 1
                continue
            v = order[d]
            lab = last[d] + 1
            advanced = False
            while lab <= n:
                if not used[lab]:
                    nodes += 1
                    if budget > 0 and nodes > budget:
                        status = STATUS_INCONCLUSIVE
                        d = -1
                        break
                    # apply with rollback-on-prune
                    start = tlen
                    pruned = False
                    for i in range(indptr[v], indptr[v + 1]):
                        u = indices[i]
                        if deg[u] < 2:
                            continue
                        trail_u[tlen] = u
                        trail_g[tlen] = g[u]
                        tlen += 1
                        g[u] = c_gcd(g[u], lab)
                        rem[u] -= 1
                        if rem[u] == 0 and g[u] != 1:
                            pruned = True
                            break
                    if pruned:
                        while tlen > start:
                            tlen -= 1
                            g[trail_u[tlen]] = trail_g[tlen]
                            rem[trail_u[tlen]] += 1
                    else:
                        tstart[d] = start
                        used[lab] = 1
                        label_of[v] = lab
                        last[d] = lab
                        d += 1
                        last[d] = 0
                        advanced = True
                        break
                lab += 1
            if d == -1:
                break
            if not advanced:
                d -= 1
                if d >= 0:
                    v = order[d]
                    used[label_of[v]] = 0
                    label_of[v] = 0
                    while tlen > tstart[d]:
                        tlen -= 1
                        g[trail_u[tlen]] = trail_g[tlen]
                        rem[trail_u[tlen]] += 1
    finally:
        free(indptr)
        free(indices)
        free(order)
        free(deg)
        free(g)
        free(rem)
        free(label_of)
        free(used)
        free(last)
        free(trail_u)
        free(trail_g)
        free(tstart)

    if solutions and status != STATUS_INCONCLUSIVE:
        status = STATUS_FOUND
    return status, nodes, solutions
