"""Differential check: the O(n log n) sweep against the exhaustive oracle
that evaluates one direction inside every angular interval."""

from ruledpoly import (
    brute_force_complexity,
    build_event_partition,
    parallel_reeb_complexity,
    random_simple_polygon,
)

agree = 0
total = 25
for seed in range(1, total + 1):
    n = 8 + (seed * 5) % 13
    P = random_simple_polygon(n, seed)
    fast = parallel_reeb_complexity(P)
    slow = brute_force_complexity(P)
    part = build_event_partition(P)
    mark = "ok " if fast.min_leaves == slow.min_leaves else "BAD"
    agree += fast.min_leaves == slow.min_leaves
    print(f"seed {seed:>3} n={P.n:>2} k={fast.k:>2} "
          f"intervals={len(part.intervals):>3} "
          f"sweep={fast.min_leaves} oracle={slow.min_leaves} {mark}")

print(f"\n{agree}/{total} agree")
assert agree == total
