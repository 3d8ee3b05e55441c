"""Compiled and pure-Python kernels must agree exactly."""

import random
from fractions import Fraction

import pytest

from qgb import _kernels_py as pyk

try:
    from qgb import _ckernels as ck
except ImportError:
    ck = None

needs_c = pytest.mark.skipif(ck is None, reason="compiled kernels not built")


def _rand_terms(rng, nvars, coeff):
    seen = {}
    for _ in range(rng.randint(0, 8)):
        e = tuple(rng.randint(0, 6) for _ in range(nvars))
        k = (sum(e),) + tuple(-x for x in reversed(e))
        c = coeff(rng)
        if c:
            seen[k] = (e, c)
    terms = [(k, e, c) for k, (e, c) in seen.items()]
    terms.sort(key=lambda t: t[0], reverse=True)
    return terms


def _int_coeff(rng):
    return rng.randint(-9, 9)


def _frac_coeff(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


@needs_c
def test_axpy_matches():
    rng = random.Random(60)
    for coeff in (_int_coeff, _frac_coeff):
        for _ in range(300):
            nv = rng.randint(1, 3)
            f = _rand_terms(rng, nv, coeff)
            g = _rand_terms(rng, nv, coeff)
            c = coeff(rng)
            se = tuple(rng.randint(0, 3) for _ in range(nv))
            sk = (sum(se),) + tuple(-x for x in reversed(se))
            assert ck.axpy(f, c, sk, se, g) == pyk.axpy(f, c, sk, se, g)


@needs_c
def test_axpy_mod_matches():
    rng = random.Random(61)
    for p in (2, 5, 7):
        for _ in range(200):
            nv = rng.randint(1, 3)
            f = [(k, e, c % p) for k, e, c in _rand_terms(rng, nv, _int_coeff) if c % p]
            g = [(k, e, c % p) for k, e, c in _rand_terms(rng, nv, _int_coeff) if c % p]
            c = rng.randrange(1, p)
            se = tuple(rng.randint(0, 3) for _ in range(nv))
            sk = (sum(se),) + tuple(-x for x in reversed(se))
            assert ck.axpy_mod(f, c, sk, se, g, p) == pyk.axpy_mod(f, c, sk, se, g, p)


@needs_c
def test_mul_matches():
    rng = random.Random(62)
    for _ in range(200):
        nv = rng.randint(1, 3)
        f = _rand_terms(rng, nv, _int_coeff)
        g = _rand_terms(rng, nv, _int_coeff)
        assert ck.mul(f, g) == pyk.mul(f, g)
        p = rng.choice((2, 5, 11))
        fm = [(k, e, c % p) for k, e, c in f if c % p]
        gm = [(k, e, c % p) for k, e, c in g if c % p]
        assert ck.mul_mod(fm, gm, p) == pyk.mul_mod(fm, gm, p)


@needs_c
def test_exp_divides_matches():
    rng = random.Random(63)
    for _ in range(500):
        nv = rng.randint(1, 4)
        a = tuple(rng.randint(0, 4) for _ in range(nv))
        b = tuple(rng.randint(0, 4) for _ in range(nv))
        assert ck.exp_divides(a, b) == pyk.exp_divides(a, b)
        assert ck.tuple_add(a, b) == pyk.tuple_add(a, b)
        assert ck.tuple_sub(a, b) == pyk.tuple_sub(a, b)


def test_pure_backend_forced_by_env(tmp_path):
    import subprocess
    import sys
    code = ("import qgb; print(qgb.kernel_backend)")
    env_pure = {"QGB_PURE_PYTHON": "1", "PATH": "/usr/bin:/bin"}
    out = subprocess.run([sys.executable, "-c", code], capture_output=True,
                         text=True, env=env_pure)
    assert out.stdout.strip() == "python"


def test_same_results_both_backends_end_to_end():
    """A full basis computation must not depend on the backend."""
    import subprocess
    import sys
    script = (
        "from qgb.cli import run_text\n"
        "out, err, code = run_text('ring R = ZZ mod 6; vars x, z;"
        " ideal J = [3*x+3, 2*x z, 4*z^2]; gb J; syz J;')\n"
        "print(repr(out)); print(code)\n")
    runs = []
    for env in ({"PATH": "/usr/bin:/bin"}, {"PATH": "/usr/bin:/bin", "QGB_PURE_PYTHON": "1"}):
        proc = subprocess.run([sys.executable, "-c", script],
                              capture_output=True, text=True, env=env)
        assert proc.returncode == 0, proc.stderr
        runs.append(proc.stdout)
    assert runs[0] == runs[1]
