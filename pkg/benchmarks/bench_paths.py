"""Timing comparison of the compiled and pure-Python path kernels.

Runs the same closed-walk enumerations through both kernels, checks the
sums agree bit for bit, and prints a speedup table.  Invoke directly:

    python3 benchmarks/bench_paths.py
"""

import time

from bandedzeros.mop import mop_scheme
from bandedzeros.paths import Constraint, kernel_name, lattice_sum
from bandedzeros.recurrence import classical_scheme

CASES = [
    ("gue", classical_scheme("gue"), 32, 6, Constraint.NONE),
    ("gue", classical_scheme("gue"), 32, 6, Constraint.STAY_BELOW),
    ("gue", classical_scheme("gue"), 24, 4, Constraint.MIDPOINT_AT_OR_ABOVE),
    ("wishart(1)", classical_scheme("wishart", alpha=1.0), 32, 6, Constraint.NONE),
    (
        "mult-hermite r=2",
        mop_scheme("multiple-hermite", a=(1.0, -1.0), q=(0.5, 0.5)),
        24,
        6,
        Constraint.NONE,
    ),
    (
        "mult-laguerre r=2",
        mop_scheme("multiple-laguerre", a=(1.0, 2.0), q=(0.5, 0.5), alpha=1.0),
        24,
        5,
        Constraint.STAY_BELOW,
    ),
]


def _time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    print(f"active kernel: {kernel_name()}")
    if kernel_name() != "compiled":
        print("compiled kernel unavailable; timing the fallback against itself")
    header = f"{'case':<22}{'N':>4}{'ell':>4} {'constraint':<22}{'python':>10}{'compiled':>10}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, scheme, n, ell, constraint in CASES:
        val_py = lattice_sum(scheme, n, ell, constraint, force_python=True)
        val_c = lattice_sum(scheme, n, ell, constraint)
        assert val_py == val_c, (label, val_py, val_c)
        t_py = _time(lambda: lattice_sum(scheme, n, ell, constraint, force_python=True))
        t_c = _time(lambda: lattice_sum(scheme, n, ell, constraint))
        print(
            f"{label:<22}{n:>4}{ell:>4} {constraint.name:<22}"
            f"{t_py * 1e3:>8.1f}ms{t_c * 1e3:>8.1f}ms{t_py / t_c:>8.1f}x"
        )


if __name__ == "__main__":
    main()
