"""Run the built-in verification suites and summarize the outcome.

Equivalent to `gaussfock verify --suite all`, but invoked through the library
so the results can be post-processed. Every check compares two independent
routes to the same quantity; residuals should sit many orders below their
tolerances.
"""

import time
from collections import defaultdict

from gaussfock import verify as ver

t0 = time.perf_counter()
results = ver.run_suites(sorted(ver.SUITES), seed=42, trials=40, tol=1e-9)
elapsed = time.perf_counter() - t0

by_suite = defaultdict(list)
for r in results:
    by_suite[r.suite].append(r)

for suite, checks in by_suite.items():
    worst = max(checks, key=lambda c: c.residual / c.tol)
    status = "ok " if all(c.passed for c in checks) else "FAIL"
    print(f"[{status}] {suite:<15} {len(checks):2d} checks, worst "
          f"{worst.residual:.2e} vs tol {worst.tol:.0e}  ({worst.name})")

n_pass = sum(r.passed for r in results)
print(f"\n{n_pass}/{len(results)} checks passed in {elapsed:.1f} s")
raise SystemExit(0 if n_pass == len(results) else 1)
