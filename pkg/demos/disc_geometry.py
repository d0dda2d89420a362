"""Moebius geometry of the parameter disc.

The group acts on symmetric contractions by fractional-linear maps. This
walks one orbit: transport the origin to a chosen point, verify the cocycle
property under composition, and watch strong squeezing push a point toward
the boundary of the disc without ever crossing it.
"""

import numpy as np

from gaussfock import siegel, symplectic as sp
from gaussfock.linalg import hs_norm, operator_norm

rng = np.random.default_rng(11)

d = 3
p = siegel.random_point(d, rng, max_norm=0.7)
print(f"point Z with ||Z|| = {operator_norm(p.Z):.6f}")

# the positive transport element reaches Z from the origin in one step
t = siegel.transport_from_origin(p)
back = siegel.moebius(t, siegel.origin(d))
print(f"transport residual  = {hs_norm(back.Z - p.Z):.3e}")

# cocycle: acting twice equals acting by the product
r1 = sp.random_element(d, rng)
r2 = sp.random_element(d, rng)
two = siegel.moebius(r2, siegel.moebius(r1, p))
one = siegel.moebius(sp.compose(r2, r1), p)
print(f"cocycle residual    = {hs_norm(two.Z - one.Z):.3e}")

# unitaries act by congruence K Z K^T
K = np.linalg.qr(rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)))[0]
u = siegel.moebius(sp.from_unitary(K), p)
print(f"congruence residual = {hs_norm(u.Z - K @ p.Z @ K.T):.3e}")

# repeated squeezing: the orbit approaches the boundary, never reaches it
print("\nsqueeze orbit from the origin:")
s = sp.squeeze(0.4 * np.eye(d))
q = siegel.origin(d)
for k in range(1, 9):
    q = siegel.moebius(s, q)
    print(f"  after {k} steps ||Z|| = {operator_norm(q.Z):.9f}"
          f"   (tanh({0.4 * k:.1f}) = {np.tanh(0.4 * k):.9f})")
