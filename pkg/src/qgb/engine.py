"""Basis completion engines.

Over a field: classical Buchberger with the coprimality criterion.  Over
the integers: completion with both lcm-based S-polynomials and gcd-based
G-polynomials under single-divisor (strong) reduction, which yields strong
bases certified by the verifiers below.  Both engines can track cofactor
matrices relating output to input and emit homogeneous generators of the
leading-term relation module, which the syzygy machinery consumes.
"""

import heapq
import random
from math import gcd as _gcd
from typing import NamedTuple

from qgb import _kernels as K
from qgb.domains import ext_gcd
from qgb.poly import Polynomial
from qgb.reduction import divide, strong_reduce


class ResourceLimitExceeded(Exception):
    """Raised when completion exceeds an explicit basis/pair budget."""


class Caps(NamedTuple):
    max_basis: int | None = None
    max_pairs: int | None = None


NO_CAPS = Caps()


class TrackedBasis(NamedTuple):
    """Completion output with provenance.

    basis[i] = sum_j m_rows[i][j] * inputs[j]; inputs[i] = sum_j n_rows[i][j]
    * basis[j]; each h in lt_syzygies pairs to zero against the leading
    terms of basis, all nonzero products sharing one monomial.
    """

    inputs: list
    basis: list
    m_rows: list
    n_rows: list
    lt_syzygies: list


def _exp_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def s_polynomial(f, g):
    """The symmetric leading-term cancellation of f and g."""
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("s-polynomial of the zero polynomial")
    (cf, ws) = _s_pair_weights(f, g)
    gamma = _exp_lcm(f.lm(), g.lm())
    return (f.mul_monomial(K.tuple_sub(gamma, f.lm()), ws[0])
            + g.mul_monomial(K.tuple_sub(gamma, g.lm()), ws[1]))


def _s_pair_weights(f, g):
    """lcm coefficient and the two cancellation weights of the S-pair."""
    dom = f.ring.domain
    a, b = f.lc(), g.lc()
    if dom.is_field:
        return dom.one, (dom.inv(a), dom.neg(dom.inv(b)))
    c = abs(a * b) // _gcd(a, b)
    return c, (c // a, -(c // b))


def g_polynomial(f, g):
    """Bezout combination giving gcd(LC f, LC g) at the monomial lcm(LM f, LM g).

    Only defined over the integers, when neither leading coefficient divides
    the other.
    """
    a, b = f.lc(), g.lc()
    if b % a == 0 or a % b == 0:
        raise ValueError("one leading coefficient divides the other; no G-polynomial")
    _, u, v = ext_gcd(a, b)
    gamma = _exp_lcm(f.lm(), g.lm())
    return (f.mul_monomial(K.tuple_sub(gamma, f.lm()), u)
            + g.mul_monomial(K.tuple_sub(gamma, g.lm()), v))


def _unit_scale(f, row=None):
    """Scale f so its leading coefficient is canonical (positive / monic)."""
    u = f.ring.domain.unit_factor(f.lc())
    if u == f.ring.domain.one:
        return f, row
    f = f.scale(u)
    if row is not None:
        row = [p.scale(u) for p in row]
    return f, row


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _completion(F, *, strong, track, caps=NO_CAPS):
    """Shared completion loop; returns (basis, m_rows or None).

    strong selects the integer engine: S- and G-pairs with single-divisor
    reduction.  Otherwise classical Buchberger with multi-divisor division
    (equivalent to single-divisor over a field).
    """
    nonzero = [(i, f) for i, f in enumerate(F) if not f.is_zero()]
    if not nonzero:
        return [], ([] if track else None)
    ring = nonzero[0][1].ring
    dom = ring.domain
    G = []
    M = []
    for i, f in nonzero:
        row = None
        if track:
            row = [ring.zero] * len(F)
            row[i] = ring.one
        g, row = _unit_scale(f, row)
        G.append(g)
        M.append(row)

    heap = []

    def push_pairs(j):
        for i in range(j):
            gamma = _exp_lcm(G[i].lm(), G[j].lm())
            key = ring.order.key(gamma)
            heapq.heappush(heap, (key, i, j, 0))
            if strong:
                a, b = G[i].lc(), G[j].lc()
                if a % b and b % a:
                    heapq.heappush(heap, (key, i, j, 1))

    for j in range(len(G)):
        push_pairs(j)

    treated = 0
    while heap:
        _, i, j, kind = heapq.heappop(heap)
        treated += 1
        if caps.max_pairs is not None and treated > caps.max_pairs:
            raise ResourceLimitExceeded(f"pair budget {caps.max_pairs} exceeded")
        gi, gj = G[i], G[j]
        gamma = _exp_lcm(gi.lm(), gj.lm())
        if kind == 0:
            if not strong and _coprime(gi.lm(), gj.lm()):
                continue
            _, (wi, wj) = _s_pair_weights(gi, gj)
        else:
            a, b = gi.lc(), gj.lc()
            if b % a == 0 or a % b == 0:
                continue
            _, wi, wj = ext_gcd(a, b)
        sh_i = K.tuple_sub(gamma, gi.lm())
        sh_j = K.tuple_sub(gamma, gj.lm())
        spoly = gi.mul_monomial(sh_i, wi) + gj.mul_monomial(sh_j, wj)
        if spoly.is_zero():
            continue
        if strong:
            cof, r = strong_reduce(spoly, G, full=False)
        else:
            cof, r = divide(spoly, G, full=False)
        if r.is_zero():
            continue
        row = None
        if track:
            row = _row_combine(
                M, {i: ring.monomial(sh_i, wi), j: ring.monomial(sh_j, wj)}, cof)
        r, row = _unit_scale(r, row)
        G.append(r)
        M.append(row)
        if caps.max_basis is not None and len(G) > caps.max_basis:
            raise ResourceLimitExceeded(f"basis budget {caps.max_basis} exceeded")
        push_pairs(len(G) - 1)
    return G, (M if track else None)


def _row_combine(M, weights, cofactors):
    """Row vector for a pair combination minus its division cofactors."""
    width = len(M[0])
    ring = M[0][0].ring
    out = [ring.zero] * width
    for k, w in weights.items():
        for c in range(width):
            if M[k][c].terms:
                out[c] = out[c] + w * M[k][c]
    for k, h in enumerate(cofactors):
        if h.terms:
            for c in range(width):
                if M[k][c].terms:
                    out[c] = out[c] - h * M[k][c]
    return out


def _lm_sort_key(g):
    return (g.terms[0][0], len(g.terms), str(g))


def interreduce(G, *, strong=False, m_rows=None):
    """Remove and shrink redundant elements until none is reducible by the rest.

    Keeps the generated ideal.  With strong=True uses single-divisor
    reduction (preserves strong bases over the integers); the default is the
    multi-divisor sense.  m_rows, when given, is kept consistent.
    """
    track = m_rows is not None
    work = [(g, (list(r) if track else None)) for g, r in
            zip(G, m_rows if track else [None] * len(G)) if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            g, row = work[i]
            others = [h for k, (h, _) in enumerate(work) if k != i]
            if not others:
                continue
            if strong:
                cof, r = strong_reduce(g, others)
            else:
                cof, r = divide(g, others)
            if r == g:
                continue
            changed = True
            if track:
                other_rows = [rr for k, (_, rr) in enumerate(work) if k != i]
                new_row = list(row)
                for h, rr in zip(cof, other_rows):
                    if h.terms:
                        for c in range(len(new_row)):
                            if rr[c].terms:
                                new_row[c] = new_row[c] - h * rr[c]
            if r.is_zero():
                del work[i]
            else:
                r, new_row2 = _unit_scale(r, new_row if track else None)
                work[i] = (r, new_row2 if track else None)
            break
    work.sort(key=lambda t: _lm_sort_key(t[0]))
    basis = [g for g, _ in work]
    if track:
        return basis, [r for _, r in work]
    return basis


def buchberger_field(F, *, caps=NO_CAPS):
    """Groebner basis over a field: interreduced, monic, sorted by leading monomial."""
    G, _ = _completion(F, strong=False, track=False, caps=caps)
    return interreduce(G)


def strong_gb_integer(F, *, caps=NO_CAPS):
    """Strong Groebner basis over the integers, leading coefficients positive."""
    G, _ = _completion(F, strong=True, track=False, caps=caps)
    return interreduce(G, strong=True)


def gb_basis(F, *, caps=NO_CAPS):
    """Basis by the engine matching the base domain of F."""
    dom = F[0].ring.domain
    if dom.is_field:
        return buchberger_field(F, caps=caps)
    return strong_gb_integer(F, caps=caps)


def pair_lt_syzygy(G, i, j):
    """Homogeneous relation of LT(G[i]), LT(G[j]) as a vector over the ring."""
    ring = G[0].ring
    gi, gj = G[i], G[j]
    gamma = _exp_lcm(gi.lm(), gj.lm())
    _, (wi, wj) = _s_pair_weights(gi, gj)
    row = [ring.zero] * len(G)
    row[i] = ring.monomial(K.tuple_sub(gamma, gi.lm()), wi)
    row[j] = ring.monomial(K.tuple_sub(gamma, gj.lm()), wj)
    return row


def gb_with_syzygies(F, *, caps=NO_CAPS):
    """Completion with provenance: basis, both cofactor matrices, and
    homogeneous generators of the relations among the basis leading terms."""
    nonzero = [f for f in F if not f.is_zero()]
    if not nonzero:
        return TrackedBasis(list(F), [], [], [[] for _ in F], [])
    dom = nonzero[0].ring.domain
    strong = not dom.is_field
    G, M = _completion(F, strong=strong, track=True, caps=caps)
    G, M = interreduce(G, strong=strong, m_rows=M)
    n_rows = []
    for f in F:
        cof, r = divide(f, G) if G else ([], f)
        if not r.is_zero():
            raise AssertionError("input does not reduce to zero by its own basis")
        n_rows.append(cof)
    H = [pair_lt_syzygy(G, i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    return TrackedBasis(list(F), G, M, n_rows, H)


def verify_groebner(G, *, caps=NO_CAPS):
    """Check that every S- (and over the integers G-) polynomial divides to zero."""
    if not G:
        return True
    dom = G[0].ring.domain
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if not divide(s_polynomial(G[i], G[j]), G).remainder.is_zero():
                return False
            if not dom.is_field:
                a, b = G[i].lc(), G[j].lc()
                if a % b and b % a:
                    if not divide(g_polynomial(G[i], G[j]), G).remainder.is_zero():
                        return False
    return True


def verify_strong(G, *, samples=20, max_degree=3, seed=0):
    """Certify the single-divisor property: every pair combination and a batch
    of random ideal members must strong-reduce to zero."""
    if not G:
        return True
    ring = G[0].ring
    dom = ring.domain
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            s = s_polynomial(G[i], G[j])
            if not s.is_zero() and not strong_reduce(s, G)[1].is_zero():
                return False
            if not dom.is_field:
                a, b = G[i].lc(), G[j].lc()
                if a % b and b % a:
                    if not strong_reduce(g_polynomial(G[i], G[j]), G)[1].is_zero():
                        return False
    rng = random.Random(seed)
    for _ in range(samples):
        member = ring.zero
        for g in G:
            member = member + _random_poly(ring, rng, max_degree) * g
        if not strong_reduce(member, G)[1].is_zero():
            return False
    return True


def _random_poly(ring, rng, max_degree):
    n = ring.varset.nvars
    terms = {}
    for _ in range(rng.randint(0, 3)):
        exps = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(n)] += 1
        terms[tuple(exps)] = rng.randint(-5, 5)
    return ring.from_terms(terms.items())
