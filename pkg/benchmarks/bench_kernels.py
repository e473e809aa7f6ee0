#!/usr/bin/env python3
"""Numpy vs numba kernel timings.

Usage: python benchmarks/bench_kernels.py [--n 12] [--repeat 3]

Times each kernel on both backends (best of --repeat, after one warmup call
that also pays the JIT compile) and checks the outputs agree.
"""
import argparse
import time

import numpy as np

from ncpart import kernels


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    found = kernels.backends()
    if "numba" not in found:
        print("numba is not installed; only the numpy backend is available")
    n = args.n
    nc = found["numpy"].nc_rgs(n)
    allp = found["numpy"].all_rgs(min(n, 10))
    jobs = {
        f"nc_rgs({n})": lambda b: b.nc_rgs(n),
        f"all_rgs({min(n, 10)})": lambda b: b.all_rgs(min(n, 10)),
        f"transform_codes nc({n}) reflect": lambda b: b.transform_codes(nc, 3, True),
        f"orbit_min_codes nc({n}) rotation": lambda b: b.orbit_min_codes(nc, False),
        f"orbit_min_codes nc({n}) dihedral": lambda b: b.orbit_min_codes(nc, True),
        f"orbit_min_codes all({min(n, 10)}) rotation": lambda b: b.orbit_min_codes(allp, False),
    }

    names = sorted(found)
    print(f"{'kernel':<36}" + "".join(f"{name + ' (s)':>12}" for name in names) + f"{'speedup':>9}  agree")
    print("-" * (36 + 12 * len(names) + 16))
    for label, job in jobs.items():
        results = {name: best_of(lambda: job(found[name]), args.repeat) for name in names}
        outs = [out for _, out in results.values()]
        agree = all(np.array_equal(outs[0], o) for o in outs[1:])
        row = f"{label:<36}" + "".join(f"{results[name][0]:>12.4f}" for name in names)
        if "numba" in results:
            row += f"{results['numpy'][0] / results['numba'][0]:>8.1f}x"
        else:
            row += f"{'-':>9}"
        print(row + f"  {'ok' if agree else 'MISMATCH'}")


if __name__ == "__main__":
    main()
