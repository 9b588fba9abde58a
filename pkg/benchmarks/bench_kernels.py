"""Compare the compiled and pure-Python power-sum collision kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from ptealg import kernels

CASES = [(3, 2, -10, 10), (4, 3, -12, 12), (5, 4, -8, 8), (3, 3, -40, 40)]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.compiled is None:
        print("compiled extension not available; build with pip install --no-build-isolation -e .")
    print(f"{'case':<22}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for case in CASES:
        run = lambda b: kernels.equal_power_sum_classes(*case, backend=b)
        t_py = min(timeit.repeat(lambda: run("python"), number=1, repeat=args.repeat))
        if kernels.compiled is None:
            print(f"{str(case):<22}{t_py:>12.4f}{'-':>12}{'-':>10}")
            continue
        assert run("python") == run("compiled")
        t_c = min(timeit.repeat(lambda: run("compiled"), number=1, repeat=args.repeat))
        print(f"{str(case):<22}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
