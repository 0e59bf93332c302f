"""Benchmark the compiled kernels against the pure-Python fallback.

The two hot kernels are the Bruhat domination mask (one byte per group
element, comparing flattened rank tables) and the tangent count (per
candidate, how many transposition neighbours stay under the mask).  Both
backends are exercised on the same inputs and must agree exactly; timings
are medians over several repeats.

Run:  python3 benchmarks/bench_backends.py [--n 6] [--repeats 3]
"""

from __future__ import annotations

import argparse
import statistics
import time

from schubsing._kernels_py import count_in_mask as py_count
from schubsing._kernels_py import dominated_mask as py_mask
from schubsing.symgroup import symmetric_group

try:
    from schubsing._kernels import count_in_mask as cy_count
    from schubsing._kernels import dominated_mask as cy_mask

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover - depends on the build
    HAVE_COMPILED = False


def _mask_workload(group, mask_fn):
    """All domination masks for the longest fifth of the group."""
    count = len(group.perms)
    heavy = sorted(range(count), key=lambda i: group.lengths[i])[-count // 5 :]
    out = bytearray(count)
    total = 0
    for wi in heavy:
        mask_fn(group.tables, group.tlen, count, wi, out)
        total += sum(out)
    return total


def _count_workload(group, mask_fn, count_fn):
    """Tangent counts below the longest element for every candidate."""
    count = len(group.perms)
    wi = count - 1  # lexicographically last = longest element
    mask = bytearray(count)
    mask_fn(group.tables, group.tlen, count, wi, mask)
    from array import array

    cands = array("i", range(count))
    out = array("i", bytes(array("i").itemsize * count))
    ntrans = len(group.transpositions)
    count_fn(bytes(mask), group.tprod, ntrans, cands, out)
    return sum(out)


def _time(fn, repeats: int) -> tuple[float, int]:
    times = []
    result = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=6, help="group size (default 6)")
    parser.add_argument(
        "--repeats", type=int, default=3, help="repeats per timing (default 3)"
    )
    args = parser.parse_args()

    group = symmetric_group(args.n)
    print(f"S_{args.n}: {len(group.perms)} elements, table length {group.tlen}")
    print(f"{'workload':<22}{'python':>12}{'cython':>12}{'speedup':>10}")

    py_time, py_result = _time(lambda: _mask_workload(group, py_mask), args.repeats)
    if HAVE_COMPILED:
        cy_time, cy_result = _time(
            lambda: _mask_workload(group, cy_mask), args.repeats
        )
        assert py_result == cy_result, "backends disagree on domination masks"
        print(
            f"{'domination masks':<22}{py_time:>11.4f}s{cy_time:>11.4f}s"
            f"{py_time / cy_time:>9.1f}x"
        )
    else:
        print(f"{'domination masks':<22}{py_time:>11.4f}s{'n/a':>12}{'':>10}")

    py_time, py_result = _time(
        lambda: _count_workload(group, py_mask, py_count), args.repeats
    )
    if HAVE_COMPILED:
        cy_time, cy_result = _time(
            lambda: _count_workload(group, cy_mask, cy_count), args.repeats
        )
        assert py_result == cy_result, "backends disagree on tangent counts"
        print(
            f"{'tangent counts':<22}{py_time:>11.4f}s{cy_time:>11.4f}s"
            f"{py_time / cy_time:>9.1f}x"
        )
    else:
        print(f"{'tangent counts':<22}{py_time:>11.4f}s{'n/a':>12}{'':>10}")

    if not HAVE_COMPILED:
        print("compiled backend not available; showing pure-Python timings only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
