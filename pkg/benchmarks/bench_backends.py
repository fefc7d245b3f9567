#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

Runs the hot workloads once per available backend and prints a table:

    python benchmarks/bench_backends.py [--repeat 3]
"""

import argparse
import time

from zdt import _kernels_py as kpy

try:
    from zdt import _ckernels as kc
except ImportError:
    kc = None


def _down_rows(n, up):
    down = [0] * n
    for i in range(n):
        r = up[i]
        while r:
            lsb = r & -r
            r ^= lsb
            down[lsb.bit_length() - 1] |= 1 << i
    return tuple(down)


def bench_enumerate(kernel):
    return len(kernel.enumerate_labeled_orders(5))


def bench_canonical(kernel, orders):
    seen = set()
    for rows in orders:
        seen.add(kernel.canonical_key(5, rows))
    return len(seen)


def bench_members(kernel, boolean4):
    n, up, down = boolean4
    total = 0
    for sys_id in range(5):
        total += len(kernel.z_member_masks(sys_id, n, up, down))
    return total


def bench_family_filter(kernel, boolean4):
    n, up, down = boolean4
    ideals = kernel.order_ideals(n, up, down)
    constraints = []
    for d in ideals:
        if not d:
            continue
        ub = (1 << n) - 1
        t = d
        while t:
            lsb = t & -t
            t ^= lsb
            ub &= up[lsb.bit_length() - 1]
        cut = (1 << n) - 1
        t = ub
        while t:
            lsb = t & -t
            t ^= lsb
            cut &= down[lsb.bit_length() - 1]
        if cut & ~d:
            constraints.append((d, cut))
    return len(kernel.absorbing_ideals(ideals, constraints))


def boolean_lattice(k):
    """The inclusion order on all subsets of a k-set (2^k elements)."""
    n = 1 << k
    up = []
    for a in range(n):
        row = 0
        for b in range(n):
            if a & ~b == 0:
                row |= 1 << b
        up.append(row)
    return n, tuple(up), _down_rows(n, tuple(up))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    orders5 = kpy.enumerate_labeled_orders(5)
    b4 = boolean_lattice(4)
    workloads = [
        ("enumerate labeled n=5", bench_enumerate, ()),
        ("canonical keys for 4231 posets", bench_canonical, (orders5,)),
        ("system members on the 16-point lattice", bench_members, (b4,)),
        ("closed-family filter on the 16-point lattice", bench_family_filter, (b4,)),
    ]
    backends = [("python", kpy)] + ([("cython", kc)] if kc is not None else [])
    if kc is None:
        print("compiled kernels not built; benchmarking the pure backend only")

    width = max(len(w[0]) for w in workloads)
    header = f"{'workload':<{width}}  " + "  ".join(f"{name:>10}" for name, _ in backends)
    print(header)
    print("-" * len(header))
    for label, fn, extra in workloads:
        cells = []
        reference = None
        for _, kernel in backends:
            best = min(
                _timed(fn, kernel, extra) for _ in range(args.repeat)
            )
            if reference is None:
                reference = best
                cells.append(f"{best * 1e3:8.1f}ms")
            else:
                cells.append(f"{best * 1e3:8.1f}ms" + (f" ({reference / best:4.1f}x)" if best else ""))
        print(f"{label:<{width}}  " + "  ".join(cells))


def _timed(fn, kernel, extra):
    t0 = time.perf_counter()
    fn(kernel, *extra)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
