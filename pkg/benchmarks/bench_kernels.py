#!/usr/bin/env python3
"""Benchmark the pure-Python kernel against the compiled one.

Runs a few representative exact workloads end to end under each available
backend and reports median wall times:

    python3 benchmarks/bench_kernels.py --repeat 5
"""

from __future__ import annotations

import argparse
import statistics
import time

from segrenum import Ideal, Ring, colength, implicitize, kernel, segre_at, tangent_cone


def gb_image_threefold():
    P = Ring(["t1", "t2", "t3"])
    R = Ring(["z1", "z2", "z3", "z4", "z5", "z6"])
    comps = ["t1", "t2", "t3*t1", "t3*t2", "t3^2", "t3^3"]
    ideal = implicitize(comps, P, R)
    return len(ideal.groebner())


def segre_scaled_plane():
    T = Ring(["t1", "t2", "t3"])
    res = segre_at(["t3*t1", "t3*t2", "t3^2"], Ideal(T, ()), trials=4)
    return res.values


def local_cone_and_colength():
    R = Ring(["x", "y"])
    cone = tangent_cone(Ideal(R, ["x^2 - y^3", "x*y"]))
    RZ = Ring(["z1", "z2"])
    tangent_cone(Ideal(RZ, ["z1^5 - z2^7"]))
    return len(cone.gens) + colength(Ideal(R, ["x^4", "x*y^2", "y^5"]))


WORKLOADS = [
    ("implicitize + grevlex basis (6 vars)", gb_image_threefold),
    ("segre numbers, 4 trials (3 vars)", segre_scaled_plane),
    ("local standard bases + colength", local_cone_and_colength),
]


def bench(repeat: int) -> None:
    backends = kernel.available_backends()
    results: dict[tuple[str, str], float] = {}
    checks: dict[str, object] = {}
    for backend in backends:
        kernel.use_backend(backend)
        for label, fn in WORKLOADS:
            times = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                out = fn()
                times.append(time.perf_counter() - t0)
            results[(label, backend)] = statistics.median(times)
            prev = checks.setdefault(label, out)
            if prev != out:
                raise AssertionError(f"backends disagree on {label!r}: {prev} != {out}")

    width = max(len(label) for label, _ in WORKLOADS)
    header = f"{'workload'.ljust(width)}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, _ in WORKLOADS:
        row = label.ljust(width) + "  "
        row += "  ".join(f"{results[(label, b)] * 1000:>8.1f}ms" for b in backends)
        if len(backends) == 2:
            pure, fast = results[(label, "pure")], results[(label, "compiled")]
            row += f"  {pure / fast:>7.2f}x"
        print(row)
    print(f"\n(median of {repeat} runs; identical outputs verified per workload)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5, help="runs per workload")
    args = ap.parse_args()
    bench(args.repeat)


if __name__ == "__main__":
    main()
