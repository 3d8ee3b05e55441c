"""Compare the compiled term kernels against the pure-Python fallback.

Runs the same basis workloads in two subprocesses (one with
QGB_PURE_PYTHON=1) and reports wall time per workload.  Usage:

    python3 benchmarks/bench_backends.py [repeat]
"""

import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import qgb
from qgb.domains import QQ, ZZ
from qgb.engine import buchberger_field, strong_gb_integer
from qgb.poly import MonomialOrder, PolyRing, VariableSet
from qgb.tower import RingTower
from qgb.ideal_ops import syzygies

def ring(dom, names, kind="grevlex"):
    vs = VariableSet(tuple(names))
    return PolyRing(dom, vs, MonomialOrder.simple(kind, len(names)))

def cyclic4(r):
    a, b, c, d = (r.var(n) for n in ("a", "b", "c", "d"))
    return [a + b + c + d,
            a*b + b*c + c*d + d*a,
            a*b*c + b*c*d + c*d*a + d*a*b,
            a*b*c*d - 1]

def katsura4(r):
    u0, u1, u2, u3 = (r.var(n) for n in ("u0", "u1", "u2", "u3"))
    return [u0 + 2*u1 + 2*u2 + 2*u3 - 1,
            u0*u0 + 2*u1*u1 + 2*u2*u2 + 2*u3*u3 - u0,
            2*u0*u1 + 2*u1*u2 + 2*u2*u3 - u1,
            u1*u1 + 2*u0*u2 + 2*u1*u3 - u2]

def run():
    results = {}
    t = time.perf_counter()
    buchberger_field(cyclic4(ring(QQ, ("a", "b", "c", "d"))))
    results["cyclic4_QQ"] = time.perf_counter() - t

    t = time.perf_counter()
    buchberger_field(katsura4(ring(QQ, ("u0", "u1", "u2", "u3"))))
    results["katsura4_QQ"] = time.perf_counter() - t

    t = time.perf_counter()
    r = ring(ZZ, ("x", "y"))
    x, y = r.var("x"), r.var("y")
    strong_gb_integer([6*x*x + y*y, 10*x*y - 3*y, 15*y*y*y - x - 7])
    results["strong_ZZ"] = time.perf_counter() - t

    t = time.perf_counter()
    gr = RingTower.galois(2, 3, [1, 1, 0, 1], ("x", "z"))
    xg, zg, yg = gr.t_ring.var("x"), gr.t_ring.var("z"), gr.t_ring.var("y")
    gr.groebner_basis([gr.project(2*xg + yg*zg), gr.project(xg*zg + 3),
                       gr.project(4*zg*zg + yg)])
    results["galois_GR8"] = time.perf_counter() - t

    t = time.perf_counter()
    z4 = RingTower.modular(4, ("x", "z"))
    x4, z4v = z4.t_ring.var("x"), z4.t_ring.var("z")
    syzygies([z4.project(2*x4), z4.project(x4*z4v + 2), z4.project(z4v*z4v)], z4)
    results["syzygy_Z4"] = time.perf_counter() - t

    print(json.dumps({"backend": qgb.kernel_backend, "times": results}))

run()
"""


def run_backend(pure, repeat):
    env = dict(os.environ)
    env.pop("QGB_PURE_PYTHON", None)
    if pure:
        env["QGB_PURE_PYTHON"] = "1"
    best = {}
    backend = None
    for _ in range(repeat):
        proc = subprocess.run([sys.executable, "-c", WORKLOAD],
                              capture_output=True, text=True, env=env, check=True)
        data = json.loads(proc.stdout)
        backend = data["backend"]
        for k, v in data["times"].items():
            best[k] = min(best.get(k, v), v)
    return backend, best


def main():
    repeat = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    c_backend, c_times = run_backend(pure=False, repeat=repeat)
    p_backend, p_times = run_backend(pure=True, repeat=repeat)
    print(f"backends: {c_backend} vs {p_backend} (best of {repeat})")
    print(f"{'workload':<14} {c_backend:>10} {p_backend:>10} {'speedup':>9}")
    for k in c_times:
        a, b = c_times[k], p_times[k]
        print(f"{k:<14} {a:>9.4f}s {b:>9.4f}s {b / a:>8.2f}x")


if __name__ == "__main__":
    main()
