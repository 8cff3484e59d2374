"""Time the numba and numpy box-search backends on the same inputs.

    python3 benchmarks/bench_box_search.py [--repeat 3]
"""

import argparse
import sys
import time
from pathlib import Path

from quivercox._kernels import box_search, use_numba
from quivercox.cartan import cartan_of
from quivercox.forms import euler_form
from quivercox.quiver import parse_spec

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

CASES = [
    ("a3", 1, 4),
    ("d4", 1, 4),
    ("ex01_2rep_infinite", 0, 3),
    ("exam_2rep_finite", 0, 2),
    ("exam_2rep_finite", 0, 3),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not use_numba():
        print("numba unavailable or disabled; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'fixture':<22}{'target':>7}{'bound':>6}{'box':>12}{'hits':>6}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, target, bound in CASES:
        spec = parse_spec((FIXTURES / f"{name}.quiver").read_text())
        e = euler_form(cartan_of(spec)).matrix
        box_search(e, target, 1, backend="numba")  # compile outside the timing
        t_nb, r_nb = best_of(lambda: box_search(e, target, bound, backend="numba"), args.repeat)
        t_np, r_np = best_of(lambda: box_search(e, target, bound, backend="numpy"), args.repeat)
        assert r_nb == r_np, name
        size = (2 * bound + 1) ** len(e)
        print(f"{name:<22}{target:>7}{bound:>6}{size:>12}{len(r_nb):>6}{t_nb:>10.3f}{t_np:>10.3f}{t_np / t_nb:>9.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
