"""A one-parameter subgroup conjugated from a diagonal free evolution.

The diagonal unitaries e^{-imt} form a free evolution with spectrum m. Any
group element R1 conjugates them into a subgroup R2(t) = R1 (e^{-imt}, 0)
R1^{-1} whose U and V blocks are computed here in closed form rather than by
three matrix products. The demo checks the closed form against the composed
route and the group law R2(s) R2(t) = R2(s + t).
"""

import numpy as np

from gaussfock import symplectic as sp
from gaussfock.linalg import hs_norm

rng = np.random.default_rng(47)

d = 3
r1 = sp.random_element(d, rng)
m = rng.uniform(0.2, 2.5, size=d)
print(f"spectrum m = {np.array2string(m, precision=4)}")

for t in (0.0, 0.5, 1.3):
    direct = sp.conjugated_free_field(r1, m, t)
    free = sp.from_unitary(np.diag(np.exp(-1j * m * t)))
    routed = sp.compose(r1, sp.compose(free, sp.inverse(r1)))
    res = max(hs_norm(direct.U - routed.U), hs_norm(direct.V - routed.V))
    print(f"t = {t:4.1f}: closed form vs composed route, residual {res:.3e}")

s, t = 0.7, 0.4
ab = sp.compose(sp.conjugated_free_field(r1, m, s),
                sp.conjugated_free_field(r1, m, t))
merged = sp.conjugated_free_field(r1, m, s + t)
res = max(hs_norm(ab.U - merged.U), hs_norm(ab.V - merged.V))
print(f"\ngroup law R2({s}) R2({t}) = R2({s + t}): residual {res:.3e}")

zero = sp.conjugated_free_field(r1, m, 0.0)
res = max(hs_norm(zero.U - np.eye(d)), hs_norm(zero.V))
print(f"R2(0) = identity: residual {res:.3e}")

# the V block oscillates with t; its norm is a conjugation invariant profile
print("\n||V(t)|| over one sweep:")
for t in np.linspace(0.0, 3.0, 7):
    r2 = sp.conjugated_free_field(r1, m, float(t))
    print(f"  t = {t:4.2f}   ||V|| = {hs_norm(r2.V):8.5f}")
