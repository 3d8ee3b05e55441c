"""Ideal operations over quotient towers.

All of these run at the lifted level: build an auxiliary ideal upstairs
(with a tag variable, reordered blocks, or difference generators), complete
it under a suitable elimination order, contract, and project.  The syzygy
computation threads the tracked completion through the coordinate-dropping
projection of the relation entries.
"""

from typing import NamedTuple

from qgb.engine import (NO_CAPS, buchberger_field, gb_with_syzygies,
                        strong_gb_integer)
from qgb.poly import MonomialOrder, PolyRing, VariableSet, transport
from qgb.reduction import divide
from qgb.tower import PullbackGB, QuotientPoly, RingTower

_TAG = "#w"  # reserved: the grammar cannot produce this identifier


def _complete_in(ring, polys, caps):
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return []
    if ring.domain.is_field:
        return buchberger_field(polys, caps=caps)
    return strong_gb_integer(polys, caps=caps)


def _sub_tower(tower, mains):
    sub = RingTower(tower.base, mains, tower.varset.relations,
                    order_kind=tower.order_kind)
    rels = [transport(r, sub.t_ring) for r in tower.relations]
    return sub.finalize(rels, galois_params=tower.galois_params)


def _contract(basis, indices):
    """Basis elements free of the given variables (an elimination contraction)."""
    return [g for g in basis if all(e[i] == 0 for i in indices for _, e, _ in g.terms)]


def eliminate(gens, tower, remove, *, caps=NO_CAPS):
    """Basis of the ideal's contraction to the main variables outside remove.

    Completion runs under the block order removed > kept > relations, so the
    kept elements form a basis of the contraction.
    """
    remove = tuple(remove)
    for v in remove:
        if v not in tower.varset.mains:
            raise ValueError(f"{v} is not a main variable of the tower")
    if not remove:
        return tower.groebner_basis(gens, caps=caps)
    order = MonomialOrder.for_varset(tower.varset, main_kind=tower.order_kind,
                                     first=remove)
    work = tower.t_ring.with_order(order)
    polys = [transport(tower.lift(g), work) for g in gens]
    polys += [transport(r, work) for r in tower.relation_basis]
    basis = _complete_in(work, polys, caps)
    removed_idx = [tower.varset.index[v] for v in remove]
    kept = _contract(basis, removed_idx)
    sub = _sub_tower(tower, tuple(n for n in tower.varset.mains if n not in remove))
    return _package(sub, kept)


def _package(tower, t_polys):
    t_basis = sorted((transport(g, tower.t_ring) for g in t_polys),
                     key=lambda g: (g.terms[0][0], str(g)))
    projected, proj_index = tower._project_basis(t_basis)
    return PullbackGB(tower, t_basis, projected, proj_index,
                      strong=tower._projected_strong())


def intersect(gens1, gens2, tower, *, caps=NO_CAPS):
    """Basis of the intersection of the two spanned ideals (tag-variable method)."""
    lifts1 = [f for f in (tower.lift(g) for g in gens1) if not f.is_zero()]
    lifts2 = [f for f in (tower.lift(g) for g in gens2) if not f.is_zero()]
    if not lifts1 or not lifts2:
        return tower.groebner_basis([], caps=caps)
    varset = VariableSet(tower.varset.mains, tower.varset.relations, tag=_TAG)
    order = MonomialOrder.for_varset(varset, main_kind=tower.order_kind)
    work = PolyRing(tower.base, varset, order)
    w = work.var(_TAG)
    one = work.one
    polys = [w * transport(f, work) for f in lifts1]
    polys += [(one - w) * transport(f, work) for f in lifts2]
    polys += [transport(r, work) for r in tower.relation_basis]
    basis = _complete_in(work, polys, caps)
    kept = _contract(basis, [varset.index[_TAG]])
    return _package(tower, kept)


def ideal_quotient(gens1, gens2, tower, *, caps=NO_CAPS):
    """Basis of J1 : J2 = {f : f*J2 in J1}, via syzygy first components
    intersected over the generators of J2."""
    hs = [h for h in (tower.project(tower.lift(g)) for g in gens2) if not h.is_zero()]
    if not hs:
        raise ValueError("ideal quotient by the zero ideal")
    result = None
    for h in hs:
        syz = syzygies([h] + list(gens1), tower, caps=caps)
        part = [v[0] for v in syz.generators if not v[0].is_zero()]
        part_gb = tower.groebner_basis(part, caps=caps)
        if result is None:
            result = part_gb
        else:
            result = intersect(result.projected, part_gb.projected, tower, caps=caps)
    return result


class AlgebraMap(NamedTuple):
    """source polynomial ring (over the same tower base) -> tower, by images."""

    source_vars: tuple
    tower: RingTower
    images: tuple

    def apply(self, p):
        """Image of a source polynomial under the map, as a tower element."""
        tower = self.tower
        rep = p.rep if isinstance(p, QuotientPoly) else p
        src = rep.ring.varset
        out = tower.t_ring.zero
        pos = {n: i for i, n in enumerate(self.source_vars)}
        for _, e, c in rep.terms:
            term = tower.t_ring.const(c)
            for i, name in enumerate(src.names):
                if not e[i]:
                    continue
                if name in pos:
                    term = term * self.images[pos[name]].rep ** e[i]
                else:
                    term = term * tower.t_ring.var(name, e[i])
            out = out + term
        return tower.project(out)


def kernel(amap, *, caps=NO_CAPS):
    """Basis of the kernel of the algebra map, in the source variables over
    the same coefficient tower."""
    tower = amap.tower
    src = tuple(amap.source_vars)
    if len(src) != len(amap.images):
        raise ValueError("one image per source variable required")
    for v in src:
        if v in tower.varset.names:
            raise ValueError(f"source variable {v} collides with the target ring")
    mains = tower.varset.mains + src
    varset = VariableSet(mains, tower.varset.relations)
    order = MonomialOrder.for_varset(varset, main_kind=tower.order_kind,
                                     first=tower.varset.mains)
    work = PolyRing(tower.base, varset, order)
    polys = [work.var(u) - transport(amap.images[i].rep, work)
             for i, u in enumerate(src)]
    polys += [transport(r, work) for r in tower.relation_basis]
    basis = _complete_in(work, polys, caps)
    target_idx = [varset.index[v] for v in tower.varset.mains]
    kept = _contract(basis, target_idx)
    sub = _sub_tower(tower, src)
    out = _package(sub, kept)
    for p in out.projected:
        if not amap.apply(transport(p.rep, sub.t_ring)).is_zero():
            raise AssertionError("kernel element does not map to zero")
    return out


class SyzygyBasis(NamedTuple):
    """Generators of the relation module of the given tower elements."""

    generators: list


def syzygies(gens, tower, *, caps=NO_CAPS):
    """Generators of {(s_1..s_t) : sum s_i * gens_i = 0} over the tower.

    Runs the tracked completion on the lifts plus the relations; full
    relations of the completed basis are assembled from the leading-term
    relations minus their division cofactors, pushed back to input
    coordinates, and the relation-generator coordinates are then dropped.
    """
    lifts = [tower.lift(g) for g in gens]
    if any(f.is_zero() for f in lifts):
        raise ValueError("syzygies of a zero generator are not defined; drop zeros first")
    if not lifts:
        return SyzygyBasis([])
    t = len(lifts)
    f_full = lifts + list(tower.relation_basis)
    tb = gb_with_syzygies(f_full, caps=caps)
    ring = tower.t_ring
    rows = []
    for i, f in enumerate(f_full):
        row = [ring.zero] * len(f_full)
        row[i] = ring.one
        for j, nij in enumerate(tb.n_rows[i]):
            if nij.is_zero():
                continue
            for c in range(len(f_full)):
                if tb.m_rows[j][c].terms:
                    row[c] = row[c] - nij * tb.m_rows[j][c]
        rows.append(row)
    for h in tb.lt_syzygies:
        combo = ring.zero
        for k, hk in enumerate(h):
            if hk.terms:
                combo = combo + hk * tb.basis[k]
        cof, r = divide(combo, tb.basis) if tb.basis else ([], combo)
        if not r.is_zero():
            raise AssertionError("leading-term relation combination did not reduce to zero")
        row = [ring.zero] * len(f_full)
        for k in range(len(tb.basis)):
            s_k = h[k] - cof[k]
            if s_k.terms:
                for c in range(len(f_full)):
                    if tb.m_rows[k][c].terms:
                        row[c] = row[c] + s_k * tb.m_rows[k][c]
        rows.append(row)
    out = []
    seen = set()
    for row in rows:
        head = tuple(tower.project(p) for p in row[:t])
        if all(q.is_zero() for q in head):
            continue
        fingerprint = tuple(str(q) for q in head)
        if fingerprint in seen:
            continue
        seen.add(fingerprint)
        dot = tower.t_ring.zero
        for q, f in zip(head, lifts):
            dot = dot + q.rep * f
        if not tower.project(dot).is_zero():
            raise AssertionError("produced tuple is not a relation of the generators")
        out.append(head)
    return SyzygyBasis(out)


def leading_coeff_ideal(gb):
    """Leading main-variable coefficients of the lifted basis: a basis of the
    contraction of those coefficients in the relation subring."""
    if not gb.tower.varset.relations:
        raise ValueError("tower has no relation variables")
    out = []
    for g in gb.t_basis:
        h, _ = g.leading_data_x()
        out.append(h)
    return out
