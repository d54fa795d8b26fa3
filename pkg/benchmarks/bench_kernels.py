"""Compare the compiled kernels with the pure-Python fallback.

Runs two workloads in fresh interpreters, one per backend:

* ``kernels``: echelon / reduce / truncated product on random sparse input;
* ``pipeline``: the full check suite for gl_2, lambda = (2, 1).

Usage: python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, random, time
from fractions import Fraction
from heckeo import BACKEND, _backend as K

def kernels():
    rng = random.Random(0)
    rows = [{c: Fraction(rng.randint(-9, 9), rng.randint(1, 3))
             for c in range(60) if rng.random() < 0.3} for _ in range(80)]
    piv = K.echelon(rows)
    for r in rows:
        K.reduce_vector(piv, r)
    a = {(i, j, k): Fraction(i + j - k + 1, 2) for i in range(4) for j in range(4) for k in range(4)}
    for _ in range(20):
        K.mul_truncated(a, a, 6)

def pipeline():
    from heckeo.functor import FunctorContext, verify_all
    assert verify_all(FunctorContext(2, (2, 1), N=2)).ok

out = {"backend": BACKEND}
for name, fn in (("kernels", kernels), ("pipeline", pipeline)):
    best = None
    for _ in range(REPEAT):
        t = time.perf_counter()
        fn()
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    out[name] = best
print(json.dumps(out))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env["HECKEO_PURE_PYTHON"] = "1" if pure else "0"
    proc = subprocess.run(
        [sys.executable, "-c", WORKLOAD.replace("REPEAT", str(repeat))],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = run(True, args.repeat)
    c = run(False, args.repeat)
    if c["backend"] != "cython":
        print("compiled kernels are not built; only the fallback was measured")
    print(f"{'workload':<10} {'python [s]':>11} {c['backend'] + ' [s]':>11} {'speedup':>8}")
    for name in ("kernels", "pipeline"):
        print(f"{name:<10} {py[name]:>11.3f} {c[name]:>11.3f} {py[name] / c[name]:>7.2f}x")


if __name__ == "__main__":
    main()
