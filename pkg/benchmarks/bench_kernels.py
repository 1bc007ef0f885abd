"""Time the compiled and pure-Python kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from funcdeg import Group, bounds
from funcdeg._kernels import available_backends, get_backend
from funcdeg.verify import all_tables


def fdeg_sweep(k):
    # every map Z_2 x Z_3 -> Z_3, as flat tables
    a, b = Group((2, 3)), Group((3,))
    cap = bounds.max_degree_general(a, b).cap
    tables = [[v for y in f.values for v in y] for f in all_tables(a, b)]
    return lambda: [k.max_nonzero_order(t, a.moduli, b.moduli, cap) for t in tables]


def fdeg_large(k):
    rng = random.Random(1)
    shape, cmod = (4, 4, 4), (8,)
    tables = [[rng.randrange(8) for _ in range(64)] for _ in range(20)]
    return lambda: [k.max_nonzero_order(t, shape, cmod, 40) for t in tables]


def convolution(k):
    rng = random.Random(2)
    shape, m = (4, 4, 8), 27
    a = [rng.randrange(m) for _ in range(128)]
    b = [rng.randrange(m) for _ in range(128)]
    return lambda: k.convolve(a, b, shape, m)


def cyclic(k):
    rng = random.Random(3)
    m = 3**5
    a = [rng.randrange(m) for _ in range(243)]
    b = [rng.randrange(m) for _ in range(243)]
    return lambda: k.cyclic_mul(a, b, m)


WORKLOADS = {
    "fdeg, all maps Z2xZ3->Z3": fdeg_sweep,
    "fdeg, 20 random Z4^3->Z8": fdeg_large,
    "convolve in Z27[Z4xZ4xZ8]": convolution,
    "cyclic_mul in Z243[x]/(x^243-1)": cyclic,
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = available_backends()
    print(f"{'workload':36}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, make in WORKLOADS.items():
        times = []
        results = []
        for b in backends:
            fn = make(get_backend(b))
            results.append(fn())
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        if len(results) > 1 and results[0] != results[1]:
            raise SystemExit(f"backends disagree on {name}")
        row = f"{name:36}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[1] / times[0]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
