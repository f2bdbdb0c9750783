"""Compiled vs pure-Python kernel throughput.

    python3 benchmarks/bench_kernel.py [--n 20000] [--repeat 5]

Times the array entry points of both backends on the same inputs and
reports the best-of-repeat wall time, throughput and speedup. Also checks
that the two backends agree on the benchmark inputs.
"""

import argparse
import importlib
import timeit

import numpy as np

from stokes_spectra import _kernel_py


def load_compiled():
    try:
        return importlib.import_module("stokes_spectra._kernel")
    except ImportError:
        return None


def best_time(fn, arg, repeat):
    return min(timeit.repeat(lambda: fn(arg), number=1, repeat=repeat))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=20000)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    # mix of series, rational and continued-fraction regions
    z = rng.uniform(-12, 12, args.n) + 1j * rng.uniform(1e-6, 12, args.n)
    mu = rng.uniform(0, 12, args.n)
    cases = [("lambda0_upper_array", z), ("lambda0_real_array", mu)]

    compiled = load_compiled()
    if compiled is None:
        print("compiled extension not built; timing the Python backend only")

    print(f"{'kernel':<22}{'backend':<9}{'time [ms]':>11}{'Mpts/s':>9}{'speedup':>9}")
    for name, arg in cases:
        t_py = best_time(getattr(_kernel_py, name), arg, args.repeat)
        print(f"{name:<22}{'python':<9}{1e3 * t_py:>11.2f}{args.n / t_py / 1e6:>9.3f}{'1.0':>9}")
        if compiled is not None:
            fn = getattr(compiled, name)
            t_c = best_time(fn, arg, args.repeat)
            print(f"{'':<22}{'cython':<9}{1e3 * t_c:>11.2f}{args.n / t_c / 1e6:>9.3f}{t_py / t_c:>9.1f}")
            diff = np.max(np.abs(fn(arg) - getattr(_kernel_py, name)(arg)))
            print(f"{'':<22}max |cython - python| = {diff:.1e}")


if __name__ == "__main__":
    main()
