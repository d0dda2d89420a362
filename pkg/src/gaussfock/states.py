"""Gaussian (ultracoherent) vectors on bosonic Fock space, in closed form.

A state is amp * Phi(Z, f) where Phi(Z, f) = exp Omega(Z) v exp f is the
symmetric-tensor exponential attached to a Siegel disc point Z and a
one-particle vector f, and amp is kept as log_amp. The vacuum is Phi(0, 0),
and coherent vectors are e^{-|f|^2/2} Phi(0, f).

Two pairings appear throughout and are kept strictly apart:

    bilinear_pairing(u, v)  = sum_i u_i v_i          (<u|v>, no conjugation)
    hermitian_inner(u, v)   = sum_i conj(u_i) v_i    ((u|v), Fock inner)

The inner product of two states is the determinant-kernel formula

    (x|y) = conj(amp_x) amp_y det(I - A+B)^{-1/2}
            exp( 1/2<f*|C f*> + <f*|(I - BA+)^{-1} g> + 1/2<g|D g> )

with A = Z_x, B = Z_y, C = B(I - A+B)^{-1}, D = A+(I - BA+)^{-1}. Weyl
displacement operators act in closed form and never leave the family.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, InternalInconsistencyError
from .linalg import (
    as_matrix,
    as_vector,
    hs_norm,
    involution,
    log_sqrt_det_inv,
    mat_adjoint,
    operator_norm,
)
from .siegel import SiegelPoint, make_point, random_point, transport_from_origin
from .symplectic import SymplecticElement

__all__ = [
    "UltracoherentState",
    "OverlapKernel",
    "make_state",
    "vacuum",
    "coherent",
    "bilinear_pairing",
    "hermitian_inner",
    "overlap_kernel",
    "overlap",
    "norm",
    "norm_squared_direct",
    "bargmann_eval",
    "weyl_apply",
    "weyl_phase",
    "displacement_to_origin",
    "factor_displaced_squeezed",
    "scaled",
    "state_residual",
    "random_state",
]


def bilinear_pairing(u, v) -> complex:
    """<u|v> = sum u_i v_i, linear in both arguments."""
    u = as_vector(u)
    v = as_vector(v, u.shape[0])
    return complex(u @ v)


def hermitian_inner(u, v) -> complex:
    """(u|v) = sum conj(u_i) v_i, conjugate-linear in the first argument."""
    u = as_vector(u)
    v = as_vector(v, u.shape[0])
    return complex(np.vdot(u, v))


@dataclass(frozen=True, eq=False)
class UltracoherentState:
    """exp(log_amp) * Phi(Z, f). Construct via make_state."""

    Z: SiegelPoint
    f: np.ndarray
    log_amp: complex

    @property
    def dim(self) -> int:
        return self.Z.dim


def make_state(Z, f, log_amp: complex = 0.0) -> UltracoherentState:
    """Build a state from a disc point (or raw symmetric matrix), vector, amp."""
    point = Z if isinstance(Z, SiegelPoint) else make_point(Z)
    f = as_vector(f, point.dim)
    log_amp = complex(log_amp)
    if not np.isfinite(f).all():
        raise InternalInconsistencyError("displacement vector must be finite")
    if not np.isfinite([log_amp.real, log_amp.imag]).all():
        raise InternalInconsistencyError("log amplitude must be finite")
    f = f.copy()
    f.flags.writeable = False
    return UltracoherentState(point, f, log_amp)


def vacuum(dim: int) -> UltracoherentState:
    return make_state(np.zeros((dim, dim)), np.zeros(dim), 0.0)


def coherent(f) -> UltracoherentState:
    """Unit-norm coherent vector e^{-|f|^2/2} Phi(0, f)."""
    f = as_vector(f)
    d = f.shape[0]
    return make_state(np.zeros((d, d)), f, -0.5 * np.vdot(f, f).real)


@dataclass(frozen=True, eq=False)
class OverlapKernel:
    """Operators entering the two-state inner product for (A, B) = (Z_x, Z_y)."""

    C: np.ndarray
    D: np.ndarray
    cross_op: np.ndarray
    log_det_factor: complex


def overlap_kernel(A, B, check_tol: float = 1e-12) -> OverlapKernel:
    """Kernel of the determinant-overlap formula.

    C = B (I - A+B)^{-1} and D = A+ (I - BA+)^{-1} are each evaluated in two
    algebraically equal forms (push-through identity) and must agree within
    check_tol times (1 + norm); cross_op = (I - BA+)^{-1}.
    """
    A = as_matrix(A)
    B = as_matrix(B, A.shape[0])
    d = A.shape[0]
    eye = np.eye(d)
    Aad = mat_adjoint(A)
    M = eye - Aad @ B          # I - A+B
    Mt = eye - B @ Aad         # I - BA+
    cross = np.linalg.inv(Mt)
    C = np.linalg.solve(M.T, B.T).T     # B (I - A+B)^{-1}
    C2 = cross @ B
    D = np.linalg.solve(Mt.T, Aad.T).T  # A+ (I - BA+)^{-1}
    D2 = np.linalg.solve(M, Aad)
    devC = hs_norm(C - C2) / (1.0 + hs_norm(C))
    devD = hs_norm(D - D2) / (1.0 + hs_norm(D))
    if max(devC, devD) > check_tol:
        raise InternalInconsistencyError(
            f"overlap kernel dual forms disagree by {max(devC, devD):.3e}")
    return OverlapKernel(C, D, cross, log_sqrt_det_inv(M))


def overlap(x: UltracoherentState, y: UltracoherentState) -> complex:
    """(x|y), conjugate-linear in x."""
    if x.dim != y.dim:
        raise DimensionMismatchError(
            f"cannot overlap states of dims {x.dim} and {y.dim}")
    ker = overlap_kernel(x.Z.Z, y.Z.Z)
    fs = involution(x.f)
    g = y.f
    expo = (np.conj(x.log_amp) + y.log_amp + ker.log_det_factor
            + 0.5 * bilinear_pairing(fs, ker.C @ fs)
            + bilinear_pairing(fs, ker.cross_op @ g)
            + 0.5 * bilinear_pairing(g, ker.D @ g))
    return complex(np.exp(expo))


def norm(x: UltracoherentState) -> float:
    """Fock norm, via the self-overlap; its imaginary part must vanish."""
    val = overlap(x, x)
    if abs(val.imag) > 1e-10 * max(val.real, 1e-300):
        raise InternalInconsistencyError(
            f"self-overlap has spurious imaginary part {val.imag:.3e}")
    return float(np.sqrt(val.real))


def norm_squared_direct(x: UltracoherentState) -> float:
    """||x||^2 from the explicit one-state expression.

    ||Phi(A, f)||^2 = det(I - A+A)^{-1/2} exp( Re<f*|A (I-A+A)^{-1} f*>
        + (f|(I-AA+)^{-1} f) + Re<f|A+ (I-AA+)^{-1} f> ), independent route
    used to cross-check overlap(x, x).
    """
    A = x.Z.Z
    f = x.f
    d = x.dim
    eye = np.eye(d)
    Aad = mat_adjoint(A)
    Mi = np.linalg.inv(eye - Aad @ A)
    Gi = np.linalg.inv(eye - A @ Aad)
    fs = involution(f)
    val = (log_sqrt_det_inv(eye - Aad @ A)
           + 0.5 * bilinear_pairing(fs, A @ Mi @ fs)
           + hermitian_inner(f, Gi @ f)
           + 0.5 * bilinear_pairing(f, Aad @ Gi @ f))
    if abs(val.imag) > 1e-9 * (1.0 + abs(val.real)):
        raise InternalInconsistencyError(
            f"norm expression has spurious imaginary part {val.imag:.3e}")
    return float(np.exp(2.0 * x.log_amp.real + val.real))


def bargmann_eval(x: UltracoherentState, z) -> complex:
    """(coherent-kernel evaluation) amp * exp(1/2<z*|Z z*> + <z*|f>)."""
    z = as_vector(z, x.dim)
    zs = involution(z)
    return complex(np.exp(x.log_amp
                          + 0.5 * bilinear_pairing(zs, x.Z.Z @ zs)
                          + bilinear_pairing(zs, x.f)))


def weyl_apply(h, x: UltracoherentState) -> UltracoherentState:
    """Displacement W(h) x in closed form: Z fixed, f -> f + h - Z h*."""
    h = as_vector(h, x.dim)
    hs = involution(h)
    Z = x.Z.Z
    new_f = x.f + h - Z @ hs
    new_log = (x.log_amp - 0.5 * np.vdot(h, h).real
               + 0.5 * bilinear_pairing(hs, Z @ hs - 2.0 * x.f))
    return UltracoherentState(x.Z, new_f, complex(new_log))


def weyl_phase(f, g) -> complex:
    """W(f) W(g) = weyl_phase(f, g) W(f + g); equals e^{-i Im(f|g)}."""
    f = as_vector(f)
    g = as_vector(g, f.shape[0])
    return complex(np.exp(-1j * np.vdot(f, g).imag))


def displacement_to_origin(x: UltracoherentState) -> np.ndarray:
    """The h with h - Z h* = f, so W(-h) removes the displacement of x.

    h = (I - AA+)^{-1} f + A (I - A+A)^{-1} f*; the defining equation is
    re-checked to 1e-10.
    """
    A = x.Z.Z
    f = x.f
    d = x.dim
    eye = np.eye(d)
    Aad = mat_adjoint(A)
    h = (np.linalg.solve(eye - A @ Aad, f)
         + A @ np.linalg.solve(eye - Aad @ A, involution(f)))
    defect = np.linalg.norm(h - A @ involution(h) - f)
    if defect > 1e-10 * (1.0 + np.linalg.norm(f)):
        raise InternalInconsistencyError(
            f"displacement equation residual {defect:.3e}")
    return h


def factor_displaced_squeezed(x: UltracoherentState
                              ) -> tuple[np.ndarray, SymplecticElement, complex]:
    """Write x = residual_amp * W(h) T(R) vacuum.

    R is the origin transport for Z, h solves h - Z h* = f, and residual_amp
    collects the scalar mismatch. Reconstructing through the representation
    recovers x up to machine precision.
    """
    Z = x.Z.Z
    h = displacement_to_origin(x)
    r = transport_from_origin(x.Z)
    w = np.linalg.eigvalsh(np.eye(x.dim) - Z @ mat_adjoint(Z))
    # log det|U_R| = -1/2 sum log w; the factor enters with power +1/2
    log_resid = (x.log_amp - 0.25 * np.sum(np.log(w))
                 + 0.5 * np.vdot(h, h).real
                 - 0.5 * bilinear_pairing(involution(h), Z @ involution(h)))
    return h, r, complex(np.exp(log_resid))


def scaled(x: UltracoherentState, factor: complex) -> UltracoherentState:
    """Multiply the amplitude by a nonzero complex factor."""
    factor = complex(factor)
    if factor == 0:
        raise InternalInconsistencyError("amplitude factor must be nonzero")
    return UltracoherentState(x.Z, x.f, x.log_amp + complex(np.log(factor)))


def state_residual(x: UltracoherentState, y: UltracoherentState) -> float:
    """max deviation over (Z, f, amplitude), the equality gauge for states."""
    if x.dim != y.dim:
        raise DimensionMismatchError("states have different dimensions")
    ax, ay = np.exp(x.log_amp), np.exp(y.log_amp)
    amp_scale = max(abs(ax), abs(ay), 1e-300)
    return float(max(hs_norm(x.Z.Z - y.Z.Z),
                     np.linalg.norm(x.f - y.f),
                     abs(ax - ay) / amp_scale))


def random_state(dim: int, rng: np.random.Generator, max_z: float = 0.6,
                 max_f: float = 1.0) -> UltracoherentState:
    """Random state with ||Z|| < max_z, ||f|| < max_f, modest amplitude."""
    p = random_point(dim, rng, max_norm=max_z)
    f = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    fn = np.linalg.norm(f)
    if fn > 0:
        f *= max_f * rng.uniform(0.0, 1.0) / fn
    log_amp = rng.uniform(-0.2, 0.2) + 1j * rng.uniform(-1.5, 1.5)
    return make_state(p, f, log_amp)
