"""Completion engines: pair polynomials, bases, tracking, verification."""

import random

import pytest

from qgb.domains import QQ, ZZ
from qgb.engine import (Caps, ResourceLimitExceeded, buchberger_field,
                        g_polynomial, gb_with_syzygies, interreduce,
                        s_polynomial, strong_gb_integer, verify_groebner,
                        verify_strong)
from qgb.poly import MonomialOrder, PolyRing, VariableSet
from qgb.reduction import divide


def _ring(dom, names, kind="lex"):
    vs = VariableSet(tuple(names))
    return PolyRing(dom, vs, MonomialOrder.simple(kind, len(names)))


def _zx():
    ring = _ring(ZZ, ("x",))
    return ring, ring.var("x")


def test_s_polynomial_examples():
    zr, x = _zx()
    assert str(s_polynomial(2 * x + 1, 3 * x + 1)) == "1"
    f = 2 * x + 1
    assert s_polynomial(f, f) == zr.zero
    qr = _ring(QQ, ("x", "y"))
    X, Y = qr.var("x"), qr.var("y")
    assert s_polynomial(X * X + Y, X * Y + 1) == Y * Y - X


def test_s_polynomial_zero_rejected():
    zr, x = _zx()
    with pytest.raises(ZeroDivisionError):
        s_polynomial(zr.zero, x)


def test_s_polynomial_drops_below_lcm():
    rng = random.Random(30)
    zr = _ring(ZZ, ("x", "y"), kind="grevlex")
    for _ in range(100):
        terms = lambda: zr.from_terms(
            {(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-6, 6)
             for _ in range(rng.randint(1, 4))}.items())
        f, g = terms(), terms()
        if f.is_zero() or g.is_zero():
            continue
        s = s_polynomial(f, g)
        gamma = tuple(max(a, b) for a, b in zip(f.lm(), g.lm()))
        if not s.is_zero():
            assert zr.order.compare(s.lm(), gamma) < 0


def test_g_polynomial_examples():
    zr, x = _zx()
    assert str(g_polynomial(3 * x + 3, 2 * x)) == "x+3"
    g = g_polynomial(4 * x, 6 * x)
    assert g.lc() in (2, -2) and g.lm() == (1,)
    with pytest.raises(ValueError):
        g_polynomial(2 * x, 4 * x)  # 2 divides 4: no pair


def test_g_polynomial_leading_term():
    rng = random.Random(31)
    from math import gcd
    zr = _ring(ZZ, ("x", "y"), kind="grevlex")
    for _ in range(200):
        a, b = rng.randint(2, 30), rng.randint(2, 30)
        if a % b == 0 or b % a == 0:
            continue
        e1 = (rng.randint(0, 3), rng.randint(0, 3))
        e2 = (rng.randint(0, 3), rng.randint(0, 3))
        f = zr.monomial(e1, a) + _noise(zr, rng, e1)
        g = zr.monomial(e2, b) + _noise(zr, rng, e2)
        gp = g_polynomial(f, g)
        gamma = tuple(max(p, q) for p, q in zip(e1, e2))
        assert gp.lm() == gamma
        assert abs(gp.lc()) == gcd(a, b)


def _noise(ring, rng, below):
    if not any(below) or rng.random() < 0.4:
        return ring.zero
    e = list(below)
    for i in range(len(e)):
        if e[i]:
            e[i] -= 1
            break
    return ring.monomial(tuple(e), rng.randint(-5, 5))


def test_buchberger_field_examples():
    qr = _ring(QQ, ("x", "y"))
    X, Y = qr.var("x"), qr.var("y")
    assert [str(g) for g in buchberger_field([X + Y, X - Y])] == ["y", "x"]
    assert [str(g) for g in buchberger_field([X])] == ["x"]
    vs = VariableSet(("x", "u", "v"))
    order = MonomialOrder.for_varset(vs, main_kind="lex", first=("x",))
    tc = PolyRing(QQ, vs, order)
    x, u, v = tc.var("x"), tc.var("u"), tc.var("v")
    basis = buchberger_field([u - x ** 2, v - x ** 3])
    target = u ** 3 - v ** 2
    assert any(g == target for g in basis)
    assert divide(target, basis).remainder.is_zero()


def test_strong_gb_integer_examples():
    zr, x = _zx()
    assert [str(g) for g in strong_gb_integer([zr.const(4), zr.const(6)])] == ["2"]
    assert [str(g) for g in strong_gb_integer([2 * x, zr.const(4)])] == ["4", "2*x"]
    assert [str(g) for g in
            strong_gb_integer([3 * x + 3, 2 * x, zr.const(6)])] == ["6", "x+3"]


def test_verify_examples():
    zr, x = _zx()
    assert verify_groebner([zr.const(2)])
    assert not verify_strong([3 * x + 3, 2 * x, zr.const(6)])
    assert verify_strong([x + 3, zr.const(6)])


def test_interreduce_examples():
    qr = _ring(QQ, ("x", "y"))
    X, Y = qr.var("x"), qr.var("y")
    assert [str(g) for g in interreduce([X, X + Y])] == ["y", "x"]
    zr, x = _zx()
    assert [str(g) for g in interreduce([zr.const(2), 4 * x])] == ["2"]
    already = [zr.const(5), x ** 2 + 1]
    assert [str(g) for g in interreduce(already)] == ["5", "x^2+1"]


def test_completion_ideal_preservation_and_criterion():
    rng = random.Random(32)
    for trial in range(25):
        nv = rng.randint(1, 2)
        ring = _ring(ZZ, tuple(f"x{i}" for i in range(nv)), kind="grevlex")
        F = []
        for _ in range(rng.randint(1, 3)):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                e = [0] * nv
                for _ in range(rng.randint(0, 3)):
                    e[rng.randrange(nv)] += 1
                terms[tuple(e)] = rng.randint(-10, 10)
            F.append(ring.from_terms(terms.items()))
        F = [f for f in F if not f.is_zero()]
        if not F:
            continue
        G = strong_gb_integer(F)
        for f in F:
            assert divide(f, G).remainder.is_zero()
        assert verify_groebner(G)
        assert verify_strong(G, samples=5, seed=trial)


def test_tracked_basis_identities():
    zr, x = _zx()
    F = [zr.const(4), zr.const(6)]
    tb = gb_with_syzygies(F)
    assert [str(g) for g in tb.basis] == ["2"]
    assert [[str(p) for p in row] for row in tb.m_rows] == [["-1", "1"]]
    assert [[str(p) for p in row] for row in tb.n_rows] == [["2"], ["3"]]
    assert tb.lt_syzygies == []

    F2 = [2 * x, zr.const(4)]
    tb2 = gb_with_syzygies(F2)
    # the single leading-term relation pairs the two elements: exact zero dot
    assert len(tb2.lt_syzygies) == 1
    _assert_tracked(tb2)

    qr = _ring(QQ, ("x",))
    X = qr.var("x")
    tb3 = gb_with_syzygies([X])
    assert [str(g) for g in tb3.basis] == ["x"]
    assert [[str(p) for p in row] for row in tb3.m_rows] == [["1"]]
    assert [[str(p) for p in row] for row in tb3.n_rows] == [["1"]]
    assert tb3.lt_syzygies == []


def _assert_tracked(tb):
    ring = tb.basis[0].ring if tb.basis else tb.inputs[0].ring
    for g, row in zip(tb.basis, tb.m_rows):
        total = ring.zero
        for h, f in zip(row, tb.inputs):
            total = total + h * f
        assert total == g
    for f, row in zip(tb.inputs, tb.n_rows):
        total = ring.zero
        for h, g in zip(row, tb.basis):
            total = total + h * g
        assert total == f
    for h in tb.lt_syzygies:
        total = ring.zero
        monos = set()
        for hk, g in zip(h, tb.basis):
            if hk.terms:
                prod = hk * g.lt_poly()
                if prod.terms:
                    monos.add(prod.lm())
                total = total + prod
        assert total == ring.zero
        assert len(monos) <= 1  # homogeneous: one shared monomial


def test_tracked_identities_random():
    rng = random.Random(33)
    for dom in (ZZ, QQ):
        for trial in range(12):
            ring = _ring(dom, ("x", "y"), kind="grevlex")
            F = []
            for _ in range(rng.randint(1, 3)):
                terms = {}
                for _ in range(rng.randint(1, 3)):
                    e = (rng.randint(0, 2), rng.randint(0, 2))
                    terms[e] = rng.randint(-6, 6)
                F.append(ring.from_terms(terms.items()))
            F = [f for f in F if not f.is_zero()]
            if not F:
                continue
            tb = gb_with_syzygies(F)
            _assert_tracked(tb)


def test_resource_caps():
    qr = _ring(QQ, ("x", "y", "z"), kind="grevlex")
    x, y, z = qr.var("x"), qr.var("y"), qr.var("z")
    F = [x ** 3 - 2 * x * y, x ** 2 * y - 2 * y ** 2 + x, z * x - y ** 2]
    with pytest.raises(ResourceLimitExceeded):
        buchberger_field(F, caps=Caps(max_basis=2, max_pairs=None))
    with pytest.raises(ResourceLimitExceeded):
        buchberger_field(F, caps=Caps(max_basis=None, max_pairs=1))
    assert buchberger_field(F)  # no caps: terminates fine
