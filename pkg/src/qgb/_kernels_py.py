"""Pure-Python term-arithmetic kernels.

A term list is a list of ``(key, exps, coeff)`` triples sorted strictly
descending by ``key``, where ``key`` and ``exps`` are tuples of ints and
``coeff`` is a nonzero coefficient object (int or Fraction).  ``key`` is an
additive encoding of the monomial under the active order, so shifting a
monomial adds keys componentwise.  These functions are the inner loops of
reduction and completion; a compiled twin lives in ``_ckernels.pyx``.
"""

BACKEND = "python"


def exp_divides(a, b):
    """True if monomial a divides monomial b (componentwise <=)."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def tuple_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def tuple_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def axpy(f, c, kshift, eshift, g):
    """Merge f + c * x^shift * g over a ring whose coefficients support + and *."""
    out = []
    i, j = 0, 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        kf = f[i][0]
        kg = tuple_add(g[j][0], kshift)
        if kf > kg:
            out.append(f[i])
            i += 1
        elif kf < kg:
            out.append((kg, tuple_add(g[j][1], eshift), c * g[j][2]))
            j += 1
        else:
            s = f[i][2] + c * g[j][2]
            if s:
                out.append((kf, f[i][1], s))
            i += 1
            j += 1
    while i < nf:
        out.append(f[i])
        i += 1
    while j < ng:
        kg, eg, cg = g[j]
        out.append((tuple_add(kg, kshift), tuple_add(eg, eshift), c * cg))
        j += 1
    return out


def axpy_mod(f, c, kshift, eshift, g, p):
    """Merge f + c * x^shift * g with coefficients reduced into [0, p)."""
    out = []
    i, j = 0, 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        kf = f[i][0]
        kg = tuple_add(g[j][0], kshift)
        if kf > kg:
            out.append(f[i])
            i += 1
        elif kf < kg:
            cg = (c * g[j][2]) % p
            if cg:
                out.append((kg, tuple_add(g[j][1], eshift), cg))
            j += 1
        else:
            s = (f[i][2] + c * g[j][2]) % p
            if s:
                out.append((kf, f[i][1], s))
            i += 1
            j += 1
    while i < nf:
        out.append(f[i])
        i += 1
    while j < ng:
        kg, eg, cg = g[j]
        cg = (c * cg) % p
        if cg:
            out.append((tuple_add(kg, kshift), tuple_add(eg, eshift), cg))
        j += 1
    return out


def mul(f, g):
    """Full product of two term lists, dict-accumulated, returned sorted descending."""
    acc = {}
    for kf, ef, cf in f:
        for kg, eg, cg in g:
            k = tuple_add(kf, kg)
            prev = acc.get(k)
            if prev is None:
                acc[k] = (tuple_add(ef, eg), cf * cg)
            else:
                acc[k] = (prev[0], prev[1] + cf * cg)
    out = [(k, e, c) for k, (e, c) in acc.items() if c]
    out.sort(key=lambda t: t[0], reverse=True)
    return out


def mul_mod(f, g, p):
    """Full product with coefficients reduced into [0, p)."""
    acc = {}
    for kf, ef, cf in f:
        for kg, eg, cg in g:
            k = tuple_add(kf, kg)
            prev = acc.get(k)
            if prev is None:
                acc[k] = (tuple_add(ef, eg), cf * cg)
            else:
                acc[k] = (prev[0], prev[1] + cf * cg)
    out = []
    for k, (e, c) in acc.items():
        c %= p
        if c:
            out.append((k, e, c))
    out.sort(key=lambda t: t[0], reverse=True)
    return out
