"""Independent oracles for the test suite.

Everything here is deliberately separate from the package's own algorithms:
integer lattice membership and kernels via a transform-tracking Hermite
normal form, rational linear algebra via Gaussian elimination, and
brute-force monomial enumeration.  Each kernel/solve double-checks its own
output, so a wrong oracle fails loudly rather than silently agreeing.
"""

from fractions import Fraction


def hnf_rows(mat):
    """Row-style Hermite normal form over the integers (no transform)."""
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            while m[i][c]:
                q = m[r][c] // m[i][c]
                m[r] = [a - q * b for a, b in zip(m[r], m[i])]
                m[r], m[i] = m[i], m[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return [row for row in m[:r] if any(row)]


def lattice_member(target, rows):
    """Is target an integer combination of the rows?"""
    H = hnf_rows(rows)
    t = list(target)
    for row in H:
        lead = next(i for i, a in enumerate(row) if a)
        if t[lead] % row[lead] == 0:
            q = t[lead] // row[lead]
            t = [a - q * b for a, b in zip(t, row)]
    return not any(t)


def int_kernel(rows):
    """Z-basis of {v : A v = 0} for the integer matrix A given as rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    neq = len(rows)
    M = [[rows[r][c] for r in range(neq)] for c in range(ncols)]
    U = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    r = 0
    for c in range(neq):
        piv = None
        for i in range(r, ncols):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        U[r], U[piv] = U[piv], U[r]
        for i in range(r + 1, ncols):
            while M[i][c]:
                q = M[r][c] // M[i][c]
                M[r] = [a - q * b for a, b in zip(M[r], M[i])]
                U[r] = [a - q * b for a, b in zip(U[r], U[i])]
                M[r], M[i] = M[i], M[r]
                U[r], U[i] = U[i], U[r]
        r += 1
        if r == ncols:
            break
    kern = [U[i] for i in range(ncols) if not any(M[i])]
    for k in kern:
        for row in rows:
            assert sum(a * b for a, b in zip(row, k)) == 0, "oracle kernel is wrong"
    return kern


def rational_solvable(cols, target):
    """Is target in the rational column span of cols (list of columns)?"""
    if not any(target):
        return True
    if not cols:
        return False
    nrows = len(target)
    A = [[Fraction(cols[c][r]) for c in range(len(cols))] + [Fraction(target[r])]
         for r in range(nrows)]
    ncols = len(cols)
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [a * inv for a in A[r]]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == nrows:
            break
    for i in range(nrows):
        if A[i][-1] and not any(A[i][:-1]):
            return False
    return True


def monomials_upto(nvars, cap):
    """All exponent vectors with total degree at most cap, sorted."""
    out = []

    def rec(prefix, rest):
        if len(prefix) == nvars:
            out.append(tuple(prefix))
            return
        for e in range(rest + 1):
            rec(prefix + [e], rest - e)

    rec([], cap)
    return sorted(out)


def univariate_member_oracle(f_coeffs, gens_coeffs, m, deg_cap=10):
    """f in <gens, m> over Z_m[x], deciding via the lattice of all cofactor
    combinations with cofactor degree <= deg_cap."""
    width = deg_cap + max((len(g) for g in gens_coeffs), default=1) + 1
    rows = []
    for g in gens_coeffs:
        for shift in range(deg_cap + 1):
            row = [0] * width
            for d, c in enumerate(g):
                row[d + shift] = c
            rows.append(row)
    for i in range(width):
        row = [0] * width
        row[i] = m
        rows.append(row)
    target = [0] * width
    for d, c in enumerate(f_coeffs):
        target[d] = c
    return lattice_member(target, rows)
