"""Polynomial reduction: multi-divisor division, strong reduction, and
canonical normal forms.

Three regimes:

* ``divide`` — division over any base domain: a term is reducible when its
  coefficient is an ideal combination of the leading coefficients of every
  divisor whose leading monomial divides the term's monomial.
* ``strong_reduce`` — one divisor per step, requiring exact coefficient
  divisibility; the reduction notion certified for strong bases.
* ``canonical_normal_form`` — strong reduction plus residue normalization
  of the surviving coefficients, giving unique coset representatives over
  integer-based towers.
"""

from typing import NamedTuple

from qgb import _kernels as K
from qgb.poly import Polynomial


class DivisionOutcome(NamedTuple):
    """f = sum(cofactors[i] * divisors[i]) + remainder, exactly."""

    cofactors: list
    remainder: Polynomial


def _divisor_data(F):
    return [(g.lm(), g.lc(), g.terms[0][0]) for g in F]


def reduce_step(f, F, *, strong=False):
    """One reduction step of f modulo F, or None if f is minimal.

    The default step cancels the whole leading term through a coefficient
    membership solve over all applicable divisors; with strong=True a single
    divisor with exact coefficient divisibility is used instead.
    """
    if f.is_zero():
        raise ZeroDivisionError("cannot reduce the zero polynomial")
    ring = f.ring
    dom = ring.domain
    c, e = f.lt()
    k = f.terms[0][0]
    data = _divisor_data(F)
    if strong:
        for j, (lmj, lcj, kj) in enumerate(data):
            if K.exp_divides(lmj, e) and dom.divides(lcj, c):
                w = dom.exact_div(c, lcj)
                return f._axpy(dom.neg(w), K.tuple_sub(k, kj), K.tuple_sub(e, lmj), F[j])
        return None
    idxs = [j for j, (lmj, _, _) in enumerate(data) if K.exp_divides(lmj, e)]
    if not idxs:
        return None
    ws = dom.solve_membership(c, [data[j][1] for j in idxs])
    if ws is None:
        return None
    out = f
    for j, w in zip(idxs, ws):
        if w == dom.zero:
            continue
        lmj, _, kj = data[j]
        out = out._axpy(dom.neg(w), K.tuple_sub(k, kj), K.tuple_sub(e, lmj), F[j])
    return out


def divide(f, F, *, full=True):
    """Divide f by the list F; returns cofactors and a remainder.

    With full=True no term of the remainder is reducible by F; with
    full=False only the leading term is reduced (completion-loop mode) and
    the remainder may carry reducible lower terms.
    """
    ring = f.ring
    dom = ring.domain
    cof = [ring.zero for _ in F]
    data = _divisor_data(F)
    rem = []
    work = f
    while work.terms:
        c, e = work.lt()
        k = work.terms[0][0]
        idxs = [j for j, (lmj, _, _) in enumerate(data) if K.exp_divides(lmj, e)]
        ws = dom.solve_membership(c, [data[j][1] for j in idxs]) if idxs else None
        if ws is None:
            if not full:
                rem.extend(work.terms)
                break
            rem.append(work.terms[0])
            work = work.tail()
            continue
        for j, w in zip(idxs, ws):
            if w == dom.zero:
                continue
            lmj, _, kj = data[j]
            sh_e = K.tuple_sub(e, lmj)
            work = work._axpy(dom.neg(w), K.tuple_sub(k, kj), sh_e, F[j])
            cof[j] = cof[j] + ring.monomial(sh_e, w)
    return DivisionOutcome(cof, Polynomial(ring, rem))


def strong_reduce(f, G, *, full=True):
    """Reduce f using one divisor per step with exact coefficient divisibility.

    Ties between applicable divisors go to the lowest index in G.  Returns
    (cofactors, remainder); if G is a strong basis the remainder is 0
    exactly when f lies in the ideal of G.
    """
    ring = f.ring
    dom = ring.domain
    cof = [ring.zero for _ in G]
    data = _divisor_data(G)
    rem = []
    work = f
    while work.terms:
        c, e = work.lt()
        k = work.terms[0][0]
        hit = None
        for j, (lmj, lcj, kj) in enumerate(data):
            if K.exp_divides(lmj, e) and dom.divides(lcj, c):
                hit = j
                break
        if hit is None:
            if not full:
                rem.extend(work.terms)
                break
            rem.append(work.terms[0])
            work = work.tail()
            continue
        lmj, lcj, kj = data[hit]
        w = dom.exact_div(c, lcj)
        sh_e = K.tuple_sub(e, lmj)
        work = work._axpy(dom.neg(w), K.tuple_sub(k, kj), sh_e, G[hit])
        cof[hit] = cof[hit] + ring.monomial(sh_e, w)
    return cof, Polynomial(ring, rem)


def canonical_normal_form(f, G, *, strong=True):
    """Unique coset representative of f modulo a strong basis G.

    Every term is first reduced as far as single-divisor reduction allows;
    a surviving coefficient at a monomial divisible by some leading monomial
    of G is then replaced by its least nonnegative residue modulo the gcd of
    the applicable leading coefficients.
    """
    if not strong:
        raise ValueError("canonical normal forms require a strong basis")
    return canonical_nf_with_cofactors(f, G)[1]


def canonical_nf_with_cofactors(f, G):
    ring = f.ring
    dom = ring.domain
    cof = [ring.zero for _ in G]
    data = _divisor_data(G)
    rem = []
    work = f
    while work.terms:
        c, e = work.lt()
        k = work.terms[0][0]
        idxs = [j for j, (lmj, _, _) in enumerate(data) if K.exp_divides(lmj, e)]
        if not idxs:
            rem.append(work.terms[0])
            work = work.tail()
            continue
        lcs = [data[j][1] for j in idxs]
        if dom.is_field:
            target, keep = c, dom.zero
        else:
            d = 0
            for lc in lcs:
                d = _int_gcd(d, lc)
            keep = c % d
            target = c - keep
        if target != dom.zero:
            ws = dom.solve_membership(target, lcs)
            for j, w in zip(idxs, ws):
                if w == dom.zero:
                    continue
                lmj, _, kj = data[j]
                sh_e = K.tuple_sub(e, lmj)
                work = work._axpy(dom.neg(w), K.tuple_sub(k, kj), sh_e, G[j])
                cof[j] = cof[j] + ring.monomial(sh_e, w)
        if keep != dom.zero:
            rem.append(work.terms[0])
            work = work.tail()
    return cof, Polynomial(ring, rem)


def _int_gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a
