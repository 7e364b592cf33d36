"""The star-like family whose complexity grows linearly: tabulate the
computed minimum against the n - 4 floor and the ceiling bound."""

import time

from ruledpoly import FamilyParams, lower_bound_polygon, parallel_reeb_complexity

print(f"{'n':>6} {'vertices':>9} {'min_leaves':>11} {'floor n-4':>10} "
      f"{'ceil n/2+1':>11} {'ms':>8}")
for n in (7, 9, 11, 15, 21, 31, 101, 501, 2001):
    P = lower_bound_polygon(FamilyParams(n))
    t0 = time.perf_counter()
    r = parallel_reeb_complexity(P)
    dt = 1000 * (time.perf_counter() - t0)
    assert r.min_leaves >= n - 4
    assert r.min_leaves <= P.n // 2 + 1
    print(f"{n:>6} {P.n:>9} {r.min_leaves:>11} {n - 4:>10} "
          f"{P.n // 2 + 1:>11} {dt:>8.1f}")

print("\nevery row sits between its floor and ceiling")
