"""The unitary ray representation of the symplectic group.

T(R) acts on Gaussian states in closed form. Composition holds only up to a
unimodular multiplier chi(R2, R1) - the hallmark of a ray representation.
This prints the multiplier along a loop of group elements and verifies that
the action composed with chi closes exactly.
"""

import numpy as np

from gaussfock import representation as rep, states, symplectic as sp

rng = np.random.default_rng(23)

d = 2
r1 = sp.random_element(d, rng)
r2 = sp.random_element(d, rng)
x = states.random_state(d, rng)

# unitarity: overlaps of transformed exponentials are preserved
f = rng.normal(size=d) + 1j * rng.normal(size=d)
g = rng.normal(size=d) + 1j * rng.normal(size=d)
lhs = states.overlap(rep.act_on_exponential(r1, f),
                     rep.act_on_exponential(r1, g))
print(f"(T exp f | T exp g) = {lhs:.10f}")
print(f"exp (f|g)           = {np.exp(np.vdot(f, g)):.10f}")

# composition needs the multiplier
chi = rep.multiplier(r2, r1)
print(f"\nchi(R2, R1) = {chi:.12f}   |chi| = {abs(chi):.12f}")
print(f"composition residual with chi: "
      f"{rep.check_composition(r2, r1, x):.3e}")

without = states.state_residual(
    rep.act(r2, rep.act(r1, x)), rep.act(sp.compose(r2, r1), x))
print(f"composition residual without chi: {without:.3e}")

# squeezed vacuum: the T(R) image of the vacuum lands at tanh of the squeeze
r = sp.squeeze(np.array([[0.5]]))
y = rep.act(r, states.vacuum(1))
print(f"\nsqueezed vacuum: Z = {y.Z.Z[0, 0].real:.12f}"
      f"  (tanh 0.5 = {np.tanh(0.5):.12f})")
print(f"amplitude = {np.exp(y.log_amp).real:.12f}"
      f"  (cosh(0.5)^(-1/2) = {np.cosh(0.5) ** -0.5:.12f})")
print(f"norm      = {states.norm(y):.12f}")
