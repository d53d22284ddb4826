"""Time the compiled and pure-Python elimination kernels, and closed-form
inversion against generic fraction-free inversion.

    python benchmarks/bench_kernels.py --sizes 8 16 24 32 --repeat 5
"""
import argparse
import timeit

from filbert import _bareiss_py, linalg
from filbert.fib_hankel import filbert_matrix, inverse_matrix
from filbert.hilbert import hilbert_inverse_matrix, hilbert_matrix

try:
    from filbert import _bareiss_core
except ImportError:
    _bareiss_core = None


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 24, 32])
    parser.add_argument("--alpha", type=int, default=2)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    kernels = [("python", _bareiss_py)]
    if _bareiss_core is not None:
        kernels.append(("cython", _bareiss_core))
    else:
        print("compiled kernel not built; timing the fallback only")

    header = ["family", "order"] + [f"bareiss[{k}]" for k, _ in kernels] + ["closed form"]
    if len(kernels) == 2:
        header.append("speedup")
    print("  ".join(f"{h:>15}" for h in header))
    for family, build, closed in (
        ("filbert", filbert_matrix, inverse_matrix),
        ("hilbert", hilbert_matrix, hilbert_inverse_matrix),
    ):
        for size in args.sizes:
            m = build(args.alpha, size - 1)
            times = [best(lambda k=k: linalg.invert(m, kernel=k), args.repeat) for _, k in kernels]
            t_closed = best(lambda: closed(args.alpha, size - 1), args.repeat)
            row = [family, str(size)] + [f"{t * 1e3:.2f} ms" for t in times] + [f"{t_closed * 1e3:.2f} ms"]
            if len(times) == 2:
                row.append(f"{times[0] / times[1]:.2f}x")
            print("  ".join(f"{c:>15}" for c in row))


if __name__ == "__main__":
    main()
