"""Time the compiled and pure-Python enumeration kernels on the same sizes.

    python benchmarks/bench_kernels.py --max-size 7 --repeat 3
"""

import argparse
import time

from effectlogic.enumeration import available, canonical_codes


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-size", type=int, default=7)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    kernels = sorted(available())
    print(f"kernels: {', '.join(kernels)}")
    if "compiled" not in kernels:
        print("compiled kernel not built; run `python setup.py build_ext --inplace`")
    print(f"{'n':>3} {'classes':>8} " + " ".join(f"{k:>12}" for k in kernels) + (" speedup" if len(kernels) > 1 else ""))
    for n in range(2, args.max_size + 1):
        row, codes = {}, {}
        for k in kernels:
            row[k], codes[k] = best_of(lambda: canonical_codes(n, kernel=k, cap=args.max_size), args.repeat)
        if len({tuple(c) for c in codes.values()}) != 1:
            raise SystemExit(f"kernels disagree at n={n}")
        line = f"{n:>3} {len(codes[kernels[0]]):>8} " + " ".join(f"{row[k]:>11.4f}s" for k in kernels)
        if len(kernels) > 1:
            line += f" {row['python'] / max(row['compiled'], 1e-9):>6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
