"""Acceptance criteria, one test per criterion, each printing a verdict line.

Everything here is exact arithmetic: no tolerances anywhere, only equality
and cardinality checks at the stated desk scales.
"""

import itertools
import random
import time

from qgb.cli import run_text
from qgb.domains import ZZ
from qgb.engine import strong_gb_integer
from qgb.ideal_ops import AlgebraMap, ideal_quotient, intersect, kernel, syzygies
from qgb.poly import MonomialOrder, PolyRing, VariableSet
from qgb.reduction import divide, strong_reduce
from qgb.tower import RingTower

from oracles import univariate_member_oracle
from test_cli import CORPUS
from test_ideal_ops import _syzygy_complete


def _report(n, ok, desc):
    print(f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {desc}")
    assert ok, f"criterion {n} failed: {desc}"


def _rand_zz_poly(ring, rng, deg=3, nterms=3, cmax=10):
    terms = {}
    n = ring.varset.nvars
    for _ in range(rng.randint(1, nterms)):
        e = [0] * n
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(n)] += 1
        terms[tuple(e)] = rng.randint(-cmax, cmax)
    return ring.from_terms(terms.items())


def test_criterion_1_strong_basis_certificate():
    """50 random integer ideals; 20 random combinations each strong-reduce
    to zero by the computed basis; all within 30 seconds."""
    rng = random.Random(101)
    start = time.perf_counter()
    checked = 0
    while checked < 50:
        nvars = rng.randint(1, 2)
        ring = PolyRing(ZZ, VariableSet(tuple(f"x{i}" for i in range(nvars))),
                        MonomialOrder.simple("grevlex", nvars))
        F = [f for f in (_rand_zz_poly(ring, rng) for _ in range(rng.randint(1, 3)))
             if not f.is_zero()]
        if not F:
            continue
        G = strong_gb_integer(F)
        for _ in range(20):
            member = ring.zero
            for f in F:
                member = member + _rand_zz_poly(ring, rng, 2, 2, 5) * f
            cof, r = strong_reduce(member, G)
            assert r.is_zero(), ([str(f) for f in F], [str(g) for g in G], str(member))
        checked += 1
    elapsed = time.perf_counter() - start
    _report(1, elapsed < 30.0,
            f"50 ideals x 20 strong reductions to zero in {elapsed:.2f}s (< 30s)")


def test_criterion_2_exhaustive_membership_agreement():
    """Z2, Z3, Z4, Z6 (one variable): member() agrees with the brute-force
    cofactor-combination oracle on every polynomial of degree <= 3."""
    rng = random.Random(102)
    disagreements = 0
    total = 0
    for m in (2, 3, 4, 6):
        tower = RingTower.modular(m, ("x",))
        ideals = 0
        while ideals < 10:
            gens_c = []
            for _ in range(rng.randint(1, 3)):
                deg = rng.randint(0, 3)
                coeffs = [rng.randrange(m) for _ in range(deg + 1)]
                gens_c.append(coeffs)
            gens = [tower.project(tower.t_ring.from_dict(
                {(d,): c for d, c in enumerate(cs)})) for cs in gens_c]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            ideals += 1
            gb = tower.groebner_basis(gens)
            lift_cs = []
            for g in gens:
                cs = [0, 0, 0, 0]
                for _, e, c in g.rep.terms:
                    cs[e[0]] = c
                lift_cs.append(cs)
            for cand in itertools.product(range(m), repeat=4):
                fbar = tower.project(tower.t_ring.from_dict(
                    {(d,): c for d, c in enumerate(cand)}))
                total += 1
                if gb.member(fbar) != univariate_member_oracle(list(cand), lift_cs, m):
                    disagreements += 1
    _report(2, disagreements == 0,
            f"{total} membership decisions across Z2/Z3/Z4/Z6, {disagreements} disagreements")


def test_criterion_3_projection_structure():
    """On every quotient-basis run: leading monomials survive projection
    (asserted inside the pipeline), and the projected basis reduces 100
    random ideal members to zero."""
    rng = random.Random(103)
    checked_members = 0
    towers = [RingTower.modular(4, ("x",)),
              RingTower.modular(6, ("x", "z")),
              RingTower.galois(2, 2, [1, 1, 1], ("x",))]
    from qgb.domains import QQ
    kq = RingTower(QQ, ("x",), ("y",))
    kq = kq.finalize([kq.t_ring.var("y") ** 2])
    towers.append(kq)
    for tower in towers:
        ring = tower.t_ring
        gens = []
        for _ in range(2):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                e = tuple(rng.randint(0, 2) for _ in range(ring.varset.nvars))
                terms[e] = rng.randint(1, 5)
            gens.append(tower.project(ring.from_terms(terms.items())))
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb = tower.groebner_basis(gens)  # raises internally if LM is not preserved
        for _ in range(25):
            member = tower.zero()
            for g in gens:
                terms = {}
                for _ in range(rng.randint(0, 2)):
                    e = tuple(rng.randint(0, 2) for _ in range(ring.varset.nvars))
                    terms[e] = rng.randint(0, 5)
                member = member + tower.project(ring.from_terms(terms.items())) * g
            assert gb.member(member)
            checked_members += 1
    _report(3, checked_members >= 100,
            f"leading monomials preserved on all runs; {checked_members} members reduced to zero")


def test_criterion_4_worked_identities():
    """The seven exact worked identities, each with two-sided membership."""
    ok = True
    notes = []

    z4 = RingTower.modular(4, ("x",))
    x4 = z4.t_ring.var("x")
    gb = z4.groebner_basis([z4.project(2 * x4)])
    ok &= [str(q) for q in gb.projected] == ["2*x"]
    notes.append("Z4 <2x> = {2x}")

    z6 = RingTower.modular(6, ("x",))
    x6 = z6.t_ring.var("x")
    gb6 = z6.groebner_basis([z6.project(3 * x6 + 3), z6.project(2 * x6)])
    ok &= [str(q) for q in gb6.projected] == ["x+3"]
    notes.append("Z6 <3x+3,2x> = {x+3}")

    ring = PolyRing(ZZ, VariableSet(("x",)), MonomialOrder.simple("lex", 1))
    ok &= [str(g) for g in strong_gb_integer([ring.const(4), ring.const(6)])] == ["2"]
    notes.append("ZZ <4,6> = {2}")

    from qgb.domains import QQ
    qx = RingTower.rationals(("x",))
    X = qx.t_ring.var("x")
    amap = AlgebraMap(("u", "v"), qx, (qx.project(X ** 2), qx.project(X ** 3)))
    ker = kernel(amap)
    sub = ker.tower
    u, v = sub.t_ring.var("u"), sub.t_ring.var("v")
    expect = sub.groebner_basis([sub.project(u ** 3 - v ** 2)])
    ok &= all(expect.member(q) for q in ker.projected)
    ok &= all(ker.member(q) for q in expect.projected)
    notes.append("kernel(u->x^2, v->x^3) = <u^3-v^2>")

    inter = intersect([qx.project(X)], [qx.project(X - 1)], qx)
    expect2 = qx.groebner_basis([qx.project(X ** 2 - X)])
    ok &= all(expect2.member(q) for q in inter.projected)
    ok &= all(inter.member(q) for q in expect2.projected)
    notes.append("QQ <x> cap <x-1> = <x^2-x>")

    z6b = RingTower.modular(6, ("x",))
    i0 = intersect([z6b.project(z6b.t_ring.const(2))],
                   [z6b.project(z6b.t_ring.const(3))], z6b)
    ok &= i0.projected == []
    notes.append("Z6 <2> cap <3> = 0")

    z4b = RingTower.modular(4, ("x",))
    xb = z4b.t_ring.var("x")
    quot = ideal_quotient([z4b.project(2 * xb)], [z4b.project(z4b.t_ring.const(2))], z4b)
    expect3 = z4b.groebner_basis([z4b.project(xb), z4b.project(z4b.t_ring.const(2))])
    ok &= all(expect3.member(q) for q in quot.projected)
    ok &= all(quot.member(q) for q in expect3.projected)
    notes.append("Z4 <2x>:<2> = <x,2>")

    _report(4, ok, "; ".join(notes))


def test_criterion_5_residue_counts():
    z4 = RingTower.modular(4, ("x",))
    x = z4.t_ring.var("x")
    gb = z4.groebner_basis([z4.project(2 * x), z4.project(x * x)])
    res4 = gb.enumerate_residues()
    # oracle: distinct canonical forms over the 256-candidate space
    forms = set()
    for cand in itertools.product(range(4), repeat=4):
        fbar = z4.project(z4.t_ring.from_dict({(d,): c for d, c in enumerate(cand)}))
        forms.add(str(gb.normal_form(fbar)))
    ok4 = len(res4) == 8 and forms == {str(r) for r in res4}

    gr = RingTower.galois(2, 2, [1, 1, 1], ("x",))
    xg, yg = gr.t_ring.var("x"), gr.t_ring.var("y")
    gbg = gr.groebner_basis([gr.project(2 * xg), gr.project(xg * xg)])
    res64 = gbg.enumerate_residues()
    formsg = set()
    for a in range(4):
        for b in range(4):
            for c in range(4):
                for d in range(4):
                    f = gr.t_ring.from_terms(
                        [((0, 0), a), ((0, 1), b), ((1, 0), c), ((1, 1), d)])
                    formsg.add(str(gbg.normal_form(gr.project(f))))
    ok64 = len(res64) == 64 and formsg == {str(r) for r in res64}
    _report(5, ok4 and ok64,
            f"Z4[x]/<2x,x^2>: {len(res4)} residues (oracle {len(forms)}); "
            f"GR(4,2)[x]/<2x,x^2>: {len(res64)} residues (oracle {len(formsg)})")


def test_criterion_6_syzygy_suite():
    """Exact zero dot products plus bounded-degree completeness on five
    instances spanning QQ, ZZ, Z4 (soundness asserted inside the helper)."""
    from qgb.domains import QQ
    qx = RingTower.rationals(("x",))
    X = qx.t_ring.var("x")
    q2 = RingTower.rationals(("x1", "x2"))
    a, b = q2.t_ring.var("x1"), q2.t_ring.var("x2")
    zz = RingTower.integers(("x",))
    Xz = zz.t_ring.var("x")
    z4 = RingTower.modular(4, ("x",))
    x4 = z4.t_ring.var("x")
    dims = [
        _syzygy_complete(qx, [qx.project(X), qx.project(X + 1)]),
        _syzygy_complete(q2, [q2.project(a), q2.project(b)]),
        _syzygy_complete(zz, [zz.project(2 * Xz), zz.project(Xz ** 2 + 3)]),
        _syzygy_complete(z4, [z4.project(2 * x4), z4.project(z4.t_ring.const(2))]),
        _syzygy_complete(z4, [z4.project(2 * x4 + 2), z4.project(x4 ** 2)]),
    ]
    _report(6, all(d >= 1 for d in dims),
            f"5 instances complete at multidegree cap 2 (oracle kernel dims {dims})")


def test_criterion_7_cli_determinism():
    stable = True
    for name, script in CORPUS.items():
        outs = {run_text(script) for _ in range(3)}
        stable &= len(outs) == 1
    _report(7, stable, f"{len(CORPUS)} corpus scripts byte-identical across 3 runs")


def test_criterion_8_division_contract():
    """200 random (f, F) instances per base domain: exact representation
    identity and the leading-monomial bound."""
    from qgb.domains import GF, QQ
    rng = random.Random(108)
    checked = 0
    for dom in (ZZ, QQ, GF(5)):
        ring = PolyRing(dom, VariableSet(("x", "y", "z")),
                        MonomialOrder.simple("grevlex", 3))
        def rand():
            terms = {}
            for _ in range(rng.randint(0, 4)):
                e = [0, 0, 0]
                for _ in range(rng.randint(0, 4)):
                    e[rng.randrange(3)] += 1
                terms[tuple(e)] = rng.randint(-8, 8)
            return ring.from_terms(terms.items())
        done = 0
        while done < 200:
            F = [f for f in (rand() for _ in range(rng.randint(1, 3))) if not f.is_zero()]
            if not F:
                continue
            f = rand()
            cof, r = divide(f, F)
            total = r
            for h, g in zip(cof, F):
                total = total + h * g
            assert total == f
            if not f.is_zero():
                for h, g in zip(cof, F):
                    if not h.is_zero():
                        prod_lm = tuple(p + q for p, q in zip(h.lm(), g.lm()))
                        assert ring.order.compare(prod_lm, f.lm()) <= 0
            done += 1
            checked += 1
    _report(8, checked == 600, f"{checked} division instances: exact identity and LM bound")
