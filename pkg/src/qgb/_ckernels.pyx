# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-arithmetic kernels; behavior matches _kernels_py exactly."""

BACKEND = "c"


cpdef bint exp_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] > b[i]:
            return False
    return True


cpdef tuple tuple_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


cpdef tuple tuple_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = a[i] - b[i]
    return tuple(out)


cpdef list axpy(list f, object c, tuple kshift, tuple eshift, list g):
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, nf = len(f), ng = len(g)
    cdef tuple tf, tg, kf, kg
    cdef object s
    while i < nf and j < ng:
        tf = <tuple> f[i]
        tg = <tuple> g[j]
        kf = <tuple> tf[0]
        kg = tuple_add(<tuple> tg[0], kshift)
        if kf > kg:
            out.append(tf)
            i += 1
        elif kf < kg:
            out.append((kg, tuple_add(<tuple> tg[1], eshift), c * tg[2]))
            j += 1
        else:
            s = tf[2] + c * tg[2]
            if s:
                out.append((kf, tf[1], s))
            i += 1
            j += 1
    while i < nf:
        out.append(f[i])
        i += 1
    while j < ng:
        tg = <tuple> g[j]
        out.append((tuple_add(<tuple> tg[0], kshift),
                    tuple_add(<tuple> tg[1], eshift), c * tg[2]))
        j += 1
    return out


cpdef list axpy_mod(list f, object c, tuple kshift, tuple eshift, list g, object p):
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, nf = len(f), ng = len(g)
    cdef tuple tf, tg, kf, kg
    cdef object s
    while i < nf and j < ng:
        tf = <tuple> f[i]
        tg = <tuple> g[j]
        kf = <tuple> tf[0]
        kg = tuple_add(<tuple> tg[0], kshift)
        if kf > kg:
            out.append(tf)
            i += 1
        elif kf < kg:
            s = (c * tg[2]) % p
            if s:
                out.append((kg, tuple_add(<tuple> tg[1], eshift), s))
            j += 1
        else:
            s = (tf[2] + c * tg[2]) % p
            if s:
                out.append((kf, tf[1], s))
            i += 1
            j += 1
    while i < nf:
        out.append(f[i])
        i += 1
    while j < ng:
        tg = <tuple> g[j]
        s = (c * tg[2]) % p
        if s:
            out.append((tuple_add(<tuple> tg[0], kshift),
                        tuple_add(<tuple> tg[1], eshift), s))
        j += 1
    return out


cpdef list mul(list f, list g):
    cdef dict acc = {}
    cdef tuple tf, tg, k
    cdef object prev
    for tf in f:
        for tg in g:
            k = tuple_add(<tuple> tf[0], <tuple> tg[0])
            prev = acc.get(k)
            if prev is None:
                acc[k] = (tuple_add(<tuple> tf[1], <tuple> tg[1]), tf[2] * tg[2])
            else:
                acc[k] = ((<tuple> prev)[0], (<tuple> prev)[1] + tf[2] * tg[2])
    cdef list out = []
    for k, prev in acc.items():
        if (<tuple> prev)[1]:
            out.append((k, (<tuple> prev)[0], (<tuple> prev)[1]))
    out.sort(key=_key0, reverse=True)
    return out


cpdef list mul_mod(list f, list g, object p):
    cdef dict acc = {}
    cdef tuple tf, tg, k
    cdef object prev, c
    for tf in f:
        for tg in g:
            k = tuple_add(<tuple> tf[0], <tuple> tg[0])
            prev = acc.get(k)
            if prev is None:
                acc[k] = (tuple_add(<tuple> tf[1], <tuple> tg[1]), tf[2] * tg[2])
            else:
                acc[k] = ((<tuple> prev)[0], (<tuple> prev)[1] + tf[2] * tg[2])
    cdef list out = []
    for k, prev in acc.items():
        c = (<tuple> prev)[1] % p
        if c:
            out.append((k, (<tuple> prev)[0], c))
    out.sort(key=_key0, reverse=True)
    return out


def _key0(t):
    return t[0]
