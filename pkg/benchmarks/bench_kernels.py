#!/usr/bin/env python3
"""Compare the compiled and pure-Python polynomial kernels.

Runs the same exact workloads under both kernels (BRISK_PURE=1 forces the
fallback in a subprocess) and prints a timing table.  Results are equal
by construction; the parity test suite asserts that separately.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
from brisk import kernel
from brisk.polyring import PolyRing
from brisk.groebner import Ideal, Budget, buchberger
from brisk.certificate import MembershipInstance, minimal_degree
from brisk.resolution import minimal_resolution, regularity

out = {"kernel": kernel.KERNEL_NAME}

def timed(name, fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    out[name] = best

repeat = REPEAT

R5 = PolyRing(("a", "b", "c", "d", "e"))
a, b, c, d, e = R5.gens()
cyclic5 = Ideal(R5, [
    a + b + c + d + e,
    a*b + b*c + c*d + d*e + e*a,
    a*b*c + b*c*d + c*d*e + d*e*a + e*a*b,
    a*b*c*d + b*c*d*e + c*d*e*a + d*e*a*b + e*a*b*c,
    a*b*c*d*e - 1,
])
timed("groebner_cyclic5", lambda: buchberger(cyclic5, budget=Budget(max_pairs=500_000)), repeat)

R2 = PolyRing(("z1", "z2"))
z1, z2 = R2.gens()
kollar3 = MembershipInstance(R2, Ideal(R2, []), (z1**3, z1*z2**2 - 1), R2.one())
timed("certificate_kollar_d3", lambda: minimal_degree(kollar3, 27), repeat)

P3 = PolyRing(("z0", "z1", "z2", "z3"))
w, x, y, z = P3.gens()
skew = Ideal(P3, [w*y, w*z, x*y, x*z])
timed("resolution_skew_lines", lambda: regularity(minimal_resolution(skew)), repeat)

big = (z1 + z2 + 1)**9
timed("poly_mul_dense", lambda: big * big, repeat)

print(json.dumps(out))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env["BRISK_PURE"] = "1" if pure else "0"
    code = WORKLOAD.replace("REPEAT", str(repeat))
    proc = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    if proc.returncode != 0:
        raise SystemExit(f"workload failed:\n{proc.stderr}")
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = ap.parse_args()
    compiled = run(pure=False, repeat=args.repeat)
    pure = run(pure=True, repeat=args.repeat)
    if compiled["kernel"] == pure["kernel"]:
        print("note: compiled kernel unavailable; both runs used the pure kernel")
    names = [k for k in compiled if k != "kernel"]
    width = max(len(n) for n in names)
    print(f"{'workload':<{width}}  {compiled['kernel']:>10}  {pure['kernel']:>10}  speedup")
    for n in names:
        ratio = pure[n] / compiled[n] if compiled[n] else float("inf")
        print(f"{n:<{width}}  {compiled[n]:>9.4f}s  {pure[n]:>9.4f}s  {ratio:>6.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
