"""The Siegel disc of symmetric contractions and its Moebius action.

Points are complex symmetric d x d matrices Z with operator norm below 1.
A Bogoliubov pair (U, V) acts by the fractional-linear map

    Z -> (U Z + V)(U~ + V~ Z)^{-1} = (U+ + Z V+)^{-1}(V^T + Z U^T),

which preserves the disc; both expressions are evaluated and compared on
every call. The stabilizer of the origin is the unitary subgroup, acting by
Z -> K Z K^T, and (I - ZZ+)^{-1/2} paired with its Z-multiple transports the
origin to Z.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    InternalInconsistencyError,
    NotInDiscError,
    NotSymmetricError,
)
from .linalg import as_matrix, hs_norm, mat_adjoint, mat_conj, operator_norm
from .symplectic import SymplecticElement, make_symplectic

__all__ = [
    "SiegelPoint",
    "make_point",
    "origin",
    "moebius",
    "transport_from_origin",
    "random_point",
]

DISC_MARGIN = 1e-9


@dataclass(frozen=True, eq=False)
class SiegelPoint:
    """Validated disc point. Construct via make_point."""

    Z: np.ndarray
    op_norm: float

    @property
    def dim(self) -> int:
        return self.Z.shape[0]


def make_point(Z, tol: float = 1e-10, margin: float = DISC_MARGIN) -> SiegelPoint:
    """Validate symmetry and strict disc membership.

    Raises:
        NotSymmetricError: if ||Z - Z^T|| > tol * (1 + ||Z||).
        NotInDiscError: if ||Z|| >= 1 - margin.
    """
    Z = as_matrix(Z)
    norm = operator_norm(Z)
    if hs_norm(Z - Z.T) > tol * (1.0 + norm):
        raise NotSymmetricError("disc point must be a symmetric matrix")
    if norm >= 1.0 - margin:
        raise NotInDiscError(
            f"operator norm {norm:.12f} is not below 1 - {margin:g}", norm)
    Z = Z.copy()
    Z.flags.writeable = False
    return SiegelPoint(Z, norm)


def origin(dim: int) -> SiegelPoint:
    return make_point(np.zeros((dim, dim)))


def moebius(r: SymplecticElement, p: SiegelPoint,
            tol: float = 1e-10) -> SiegelPoint:
    """Fractional-linear action of r on p, cross-checked in both forms."""
    Z = p.Z
    U, V = r.U, r.V
    left = np.linalg.solve(
        (mat_conj(U) + mat_conj(V) @ Z).T, (U @ Z + V).T).T
    right = np.linalg.solve(mat_adjoint(U) + Z @ mat_adjoint(V),
                            V.T + Z @ U.T)
    dev = hs_norm(left - right)
    if dev > tol * (1.0 + operator_norm(right)):
        raise InternalInconsistencyError(
            f"the two Moebius expressions disagree by {dev:.3e}")
    return make_point(right, tol=max(tol, 1e-10))


def transport_from_origin(p: SiegelPoint) -> SymplecticElement:
    """The positive element (U, UZ) with U = (I - ZZ+)^{-1/2} mapping 0 to Z.

    U is computed through the eigendecomposition of the Hermitian matrix
    I - ZZ+, whose spectrum is positive for any disc point.
    """
    Z = p.Z
    d = p.dim
    w, E = np.linalg.eigh(np.eye(d) - Z @ mat_adjoint(Z))
    U = (E / np.sqrt(w)) @ mat_adjoint(E)
    return make_symplectic(U, U @ Z)


def random_point(dim: int, rng: np.random.Generator,
                 max_norm: float = 0.6) -> SiegelPoint:
    """Random symmetric point with operator norm uniform in (0, max_norm)."""
    G = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    Z = (G + G.T) / 2.0
    norm = operator_norm(Z)
    if norm > 0:
        Z *= max_norm * rng.uniform(0.05, 1.0) / norm
    return make_point(Z)
