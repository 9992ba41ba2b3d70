"""Compare the compiled and pure-numpy kernel backends.

Times the three batch kernels over a range of batch sizes and prints a
table with the speedup of the compiled extension.  Run from anywhere:

    python benchmarks/bench_backends.py [--sizes 1000,100000,1000000]
"""
import argparse
import time

import numpy as np

from spinorlab.backend import available_backends


def make_inputs(n, seed=0):
    rng = np.random.default_rng(seed)
    psis = rng.uniform(-1, 1, size=(n, 4)) + 1j * rng.uniform(-1, 1, size=(n, 4))
    m = np.exp(rng.uniform(np.log(0.1), np.log(10), size=n))
    pmag = m * np.exp(rng.uniform(np.log(1e-3), np.log(1e3), size=n))
    theta = np.arccos(rng.uniform(-1, 1, size=n))
    phi = rng.uniform(0, 2 * np.pi, size=n)
    e = np.hypot(m, pmag)
    px = pmag * np.sin(theta) * np.cos(phi)
    py = pmag * np.sin(theta) * np.sin(phi)
    pz = pmag * np.cos(theta)
    return dict(
        psis=psis, e=e, m=m, px=px, py=py, pz=pz, shift=m,
        ct=np.cos(theta), sre=np.sin(theta) * np.cos(phi),
        sim=np.sin(theta) * np.sin(phi),
    )


def best_of(fn, repeats=5):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


KERNELS = {
    "bilinears": lambda mod, d: mod.bilinears(d["psis"]),
    "dirac_apply_shift": lambda mod, d: mod.dirac_apply_shift(
        d["psis"], d["e"], d["m"], d["px"], d["py"], d["pz"], d["shift"]
    ),
    "helicity_residuals": lambda mod, d: mod.helicity_residuals(
        d["psis"], d["ct"], d["sre"], d["sim"]
    ),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="1000,100000,1000000",
                        help="comma-separated batch sizes")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; timing the pure backend only")

    header = f"{'kernel':<20} {'n':>9}"
    for name in backends:
        header += f" {name + ' [ms]':>14}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))

    for n in sizes:
        data = make_inputs(n)
        for kernel, call in KERNELS.items():
            row = f"{kernel:<20} {n:>9}"
            timings = {}
            for name, mod in backends.items():
                timings[name] = best_of(lambda: call(mod, data), args.repeats)
                row += f" {timings[name] * 1e3:>14.3f}"
            if len(timings) == 2:
                row += f" {timings['pure'] / timings['compiled']:>8.1f}x"
            print(row)

    if len(backends) == 2:
        data = make_inputs(10_000)
        for kernel, call in KERNELS.items():
            pure_out = call(backends["pure"], data)
            comp_out = call(backends["compiled"], data)
            if not isinstance(pure_out, tuple):
                pure_out, comp_out = (pure_out,), (comp_out,)
            for a, b in zip(pure_out, comp_out):
                assert np.array_equal(a, b), f"{kernel}: backend outputs differ"
        print("\noutputs bit-identical across backends")


if __name__ == "__main__":
    main()
