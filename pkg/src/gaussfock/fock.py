"""Truncated Fock space oracle: brute-force symmetric tensor algebra.

Everything here is computed from first principles on a dense occupation-number
grid, independently of the closed-form layer, so the two can cross-check each
other. A FockTensor stores the coefficients c_m of sum_m c_m E_m where
E_m = e_1^{m_1} v ... v e_d^{m_d} and ||E_m||^2 = m! = prod(m_mu!); the grid
has shape (cutoff+1,)^dim and entries of total degree beyond the cutoff are
identically zero.

Products are exact convolutions. FFT convolution is deliberately avoided:
it leaves absolute noise ~1e-16 in high-degree entries, and the m! weights
(up to ~1e150 at the cutoffs used here) turn that into garbage inner
products. Instead symmetric_product dispatches between a shift-add over the
sparser factor and a lower-triangular Toeplitz matmul along a single axis,
both of which keep per-entry relative error at machine level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np
import scipy.linalg

from .errors import (
    DimensionMismatchError,
    GaussFockError,
    InvalidAlphaError,
    NotInDiscError,
    NotSymmetricError,
)
from .linalg import as_matrix, as_vector, hs_norm, involution, operator_norm
from .states import UltracoherentState

__all__ = [
    "FockTensor",
    "FockOperator",
    "make_tensor",
    "vacuum_tensor",
    "basis_indices",
    "symmetric_product",
    "inner",
    "tensor_norm",
    "degree_norms",
    "tensor_residual",
    "exp_vector",
    "omega_tensor",
    "exp_omega",
    "represent_state",
    "create",
    "annihilate",
    "gamma",
    "weyl",
    "apply_operator",
    "alpha_norm",
    "tail_bound",
]

MAX_GRID_ENTRIES = 20_000_000
MAX_CUTOFF = 170          # 171! overflows float64 basis weights
SPARSE_NNZ_LIMIT = 64


@dataclass(frozen=True, eq=False)
class FockTensor:
    """Coefficients of a truncated symmetric-Fock vector on the dense grid."""

    dim: int
    cutoff: int
    coeffs: np.ndarray


@dataclass(frozen=True, eq=False)
class FockOperator:
    """Dense matrix in the ordered occupation basis of basis_indices."""

    dim: int
    cutoff: int
    matrix: np.ndarray


def _check_size(dim: int, cutoff: int) -> None:
    if dim < 1:
        raise DimensionMismatchError("dimension must be at least 1")
    if cutoff < 0:
        raise GaussFockError("cutoff must be nonnegative")
    if cutoff > MAX_CUTOFF:
        raise GaussFockError(
            f"cutoff {cutoff} exceeds {MAX_CUTOFF}, the largest degree whose "
            "factorial weight fits in float64")
    if (cutoff + 1) ** dim > MAX_GRID_ENTRIES:
        raise GaussFockError(
            f"grid of shape ({cutoff + 1},)^{dim} exceeds the size guard")


@lru_cache(maxsize=32)
def _degree_grid(dim: int, cutoff: int) -> np.ndarray:
    deg = np.indices((cutoff + 1,) * dim).sum(axis=0)
    deg.flags.writeable = False
    return deg


@lru_cache(maxsize=32)
def _weight_grid(dim: int, cutoff: int) -> np.ndarray:
    """prod(m_mu!) on the grid, as float64 (exact to ~1e-14 up to 170!).

    Grid corners beyond the total-degree cutoff would overflow float64 at
    large cutoffs; they carry zero coefficients by invariant, so their
    weights are set to zero instead.
    """
    fac = np.cumprod(np.concatenate([[1.0], np.arange(1.0, cutoff + 1)]))
    W = fac
    with np.errstate(over="ignore"):
        for _ in range(dim - 1):
            W = np.multiply.outer(W, fac)
    W = np.ascontiguousarray(W)
    W[_degree_grid(dim, cutoff) > cutoff] = 0.0
    W.flags.writeable = False
    return W


@lru_cache(maxsize=32)
def basis_indices(dim: int, cutoff: int) -> tuple[tuple[int, ...], ...]:
    """Occupation multi-indices ordered by (total degree, lexicographic)."""
    _check_size(dim, cutoff)
    out = []
    for n in range(cutoff + 1):
        level = set()
        for combo in combinations_with_replacement(range(dim), n):
            m = [0] * dim
            for mu in combo:
                m[mu] += 1
            level.add(tuple(m))
        out.extend(sorted(level))
    return tuple(out)


def make_tensor(dim: int, cutoff: int, coeffs) -> FockTensor:
    """Validate shape and the vanishing of entries beyond the cutoff."""
    _check_size(dim, cutoff)
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.shape != (cutoff + 1,) * dim:
        raise DimensionMismatchError(
            f"expected coefficient grid of shape {(cutoff + 1,) * dim}, "
            f"got {coeffs.shape}")
    bad = coeffs[_degree_grid(dim, cutoff) > cutoff]
    if bad.size and np.max(np.abs(bad)) > 0.0:
        raise GaussFockError(
            "coefficients with total degree beyond the cutoff must vanish")
    coeffs = coeffs.copy()
    coeffs.flags.writeable = False
    return FockTensor(dim, cutoff, coeffs)


def vacuum_tensor(dim: int, cutoff: int) -> FockTensor:
    _check_size(dim, cutoff)
    c = np.zeros((cutoff + 1,) * dim, dtype=complex)
    c[(0,) * dim] = 1.0
    return FockTensor(dim, cutoff, c)


def _common(F: FockTensor, G: FockTensor) -> tuple[int, int]:
    if F.dim != G.dim or F.cutoff != G.cutoff:
        raise DimensionMismatchError(
            "tensors must share dimension and cutoff")
    return F.dim, F.cutoff


def _shift_add(A: np.ndarray, B: np.ndarray, cutoff: int,
               deg: np.ndarray) -> np.ndarray:
    out = np.zeros_like(B)
    for m in np.argwhere(A):
        c = A[tuple(m)]
        src = tuple(slice(0, cutoff + 1 - k) for k in m)
        dst = tuple(slice(k, cutoff + 1) for k in m)
        out[dst] += c * B[src]
    out[deg > cutoff] = 0.0
    return out


def _axis_profile(X: np.ndarray) -> list[int]:
    """Axes along which X has support beyond index 0."""
    nz = X != 0
    active = []
    for axis in range(X.ndim):
        others = tuple(i for i in range(X.ndim) if i != axis)
        line = nz.any(axis=others) if others else nz
        if line[1:].any():
            active.append(axis)
    return active


def _line_product(v: np.ndarray, B: np.ndarray, axis: int, cutoff: int,
                  deg: np.ndarray) -> np.ndarray:
    """Product with a factor supported on one axis: Toeplitz matmul."""
    n = cutoff + 1
    T = np.zeros((n, n), dtype=complex)
    for i in range(n):
        T[i:, i] = v[: n - i]
    Bm = np.moveaxis(B, axis, 0)
    out = (T @ Bm.reshape(n, -1)).reshape(Bm.shape)
    out = np.moveaxis(out, 0, axis)
    out[deg > cutoff] = 0.0
    return out


def symmetric_product(F: FockTensor, G: FockTensor) -> FockTensor:
    """F v G: plain coefficient convolution truncated at the cutoff.

    E_m v E_n = E_{m+n}, so the product of coefficient arrays is their
    discrete convolution. Dispatch: shift-add over the sparser factor when it
    has few nonzeros, Toeplitz matmul when one factor lives on a single axis
    line, shift-add otherwise.
    """
    d, N = _common(F, G)
    deg = _degree_grid(d, N)
    A, B = F.coeffs, G.coeffs
    nzA, nzB = int(np.count_nonzero(A)), int(np.count_nonzero(B))
    if nzA == 0 or nzB == 0:
        return FockTensor(d, N, np.zeros_like(A))
    if min(nzA, nzB) <= SPARSE_NNZ_LIMIT:
        small, big = (A, B) if nzA <= nzB else (B, A)
        return FockTensor(d, N, _shift_add(small, big, N, deg))
    for X, Y in ((A, B), (B, A)):
        active = _axis_profile(X)
        if len(active) <= 1:
            axis = active[0] if active else 0
            sel = tuple(slice(None) if i == axis else 0 for i in range(d))
            return FockTensor(d, N, _line_product(X[sel], Y, axis, N, deg))
    small, big = (A, B) if nzA <= nzB else (B, A)
    return FockTensor(d, N, _shift_add(small, big, N, deg))


def inner(F: FockTensor, G: FockTensor) -> complex:
    """(F|G) = sum_m m! conj(c_m) d_m, conjugate-linear in F."""
    d, N = _common(F, G)
    W = _weight_grid(d, N)
    return complex(np.sum(W * np.conj(F.coeffs) * G.coeffs))


def tensor_norm(F: FockTensor) -> float:
    W = _weight_grid(F.dim, F.cutoff)
    return float(np.sqrt(np.sum(W * np.abs(F.coeffs) ** 2)))


def degree_norms(F: FockTensor) -> np.ndarray:
    """Fock norms of the homogeneous components, indexed by degree."""
    deg = _degree_grid(F.dim, F.cutoff)
    W = _weight_grid(F.dim, F.cutoff)
    mass = W * np.abs(F.coeffs) ** 2
    # grid corners reach degree dim*cutoff; those entries are zero by invariant
    out = np.zeros(F.dim * F.cutoff + 1)
    np.add.at(out, deg.ravel(), mass.ravel())
    return np.sqrt(out[:F.cutoff + 1])


def tensor_residual(F: FockTensor, G: FockTensor) -> float:
    """Fock norm of the difference."""
    d, N = _common(F, G)
    W = _weight_grid(d, N)
    return float(np.sqrt(np.sum(W * np.abs(F.coeffs - G.coeffs) ** 2)))


def exp_vector(f, cutoff: int) -> FockTensor:
    """exp f = sum_n f^{vn}/n!, coefficients prod f_mu^{m_mu}/m_mu!."""
    f = as_vector(f)
    d = f.shape[0]
    _check_size(d, cutoff)
    pows = np.arange(cutoff + 1)
    fac = np.cumprod(np.concatenate([[1.0], np.arange(1.0, cutoff + 1)]))
    out = None
    for z in f:
        line = np.power(z, pows) / fac
        out = line if out is None else np.multiply.outer(out, line)
    out = np.asarray(out, dtype=complex)
    deg = _degree_grid(d, cutoff)
    out[deg > cutoff] = 0.0
    return FockTensor(d, cutoff, out)


def omega_tensor(A, cutoff: int) -> FockTensor:
    """Omega(A) = 1/2 sum_{mu,nu} A_{mu,nu} e_mu v e_nu for symmetric A."""
    A = as_matrix(A)
    d = A.shape[0]
    _check_size(d, cutoff)
    if hs_norm(A - A.T) > 1e-10 * (1.0 + operator_norm(A)):
        raise NotSymmetricError("quadratic tensor parameter must be symmetric")
    out = np.zeros((cutoff + 1,) * d, dtype=complex)
    if cutoff >= 2:
        for mu in range(d):
            for nu in range(mu, d):
                m = [0] * d
                m[mu] += 1
                m[nu] += 1
                out[tuple(m)] = A[mu, nu] if mu != nu else 0.5 * A[mu, mu]
    return FockTensor(d, cutoff, out)


def exp_omega(A, cutoff: int) -> FockTensor:
    """exp Omega(A) = sum_{n <= cutoff/2} Omega(A)^{vn} / n!.

    Requires ||A|| < 1 so the series has summable Fock norm. The n-th term
    is homogeneous of degree 2n, so the running product only needs the grid
    block of per-axis extent 2n+1; the series is accumulated on those
    growing blocks.
    """
    A = as_matrix(A)
    nA = operator_norm(A)
    if nA >= 1.0:
        raise NotInDiscError(
            f"exp Omega requires operator norm below 1, got {nA:.6f}", nA)
    d = A.shape[0]
    om = omega_tensor(A, cutoff)
    out = np.zeros((cutoff + 1,) * d, dtype=complex)
    out[(0,) * d] = 1.0
    if not np.any(om.coeffs):
        return FockTensor(d, cutoff, out)
    nz = [(tuple(int(v) for v in m), om.coeffs[tuple(m)])
          for m in np.argwhere(om.coeffs)]
    term = np.zeros((cutoff + 1,) * d, dtype=complex)
    term[(0,) * d] = 1.0
    ext = 1
    for n in range(1, cutoff // 2 + 1):
        new = np.zeros_like(term)
        src = term[(slice(0, ext),) * d]
        for m, c in nz:
            new[tuple(slice(mj, mj + ext) for mj in m)] += (c / n) * src
        term = new
        ext += 2
        blk = (slice(0, ext),) * d
        out[blk] += term[blk]
    return FockTensor(d, cutoff, out)


def represent_state(x: UltracoherentState, cutoff: int) -> FockTensor:
    """Truncated coefficients of exp(log_amp) (exp Omega(Z) v exp f).

    The displacement factor is multiplied in mode by mode
    (exp f = prod_mu exp(f_mu e_mu)), keeping each product on the exact
    single-axis path.
    """
    d = x.dim
    _check_size(d, cutoff)
    out = exp_omega(x.Z.Z, cutoff)
    deg = _degree_grid(d, cutoff)
    fac = np.cumprod(np.concatenate([[1.0], np.arange(1.0, cutoff + 1)]))
    pows = np.arange(cutoff + 1)
    coeffs = out.coeffs
    for mu in range(d):
        if x.f[mu] == 0:
            continue
        line = np.power(x.f[mu], pows) / fac
        coeffs = _line_product(line.astype(complex), coeffs, mu, cutoff, deg)
    return FockTensor(d, cutoff, np.exp(x.log_amp) * coeffs)


def _flatten(F: FockTensor) -> np.ndarray:
    idx = np.array(basis_indices(F.dim, F.cutoff))
    return F.coeffs[tuple(idx.T)]


def _unflatten(dim: int, cutoff: int, vec: np.ndarray) -> FockTensor:
    idx = np.array(basis_indices(dim, cutoff))
    c = np.zeros((cutoff + 1,) * dim, dtype=complex)
    c[tuple(idx.T)] = vec
    return FockTensor(dim, cutoff, c)


def apply_operator(op: FockOperator, F: FockTensor) -> FockTensor:
    if op.dim != F.dim or op.cutoff != F.cutoff:
        raise DimensionMismatchError(
            "operator and tensor must share dimension and cutoff")
    return _unflatten(F.dim, F.cutoff, op.matrix @ _flatten(F))


def create(f, cutoff: int) -> FockOperator:
    """Creation operator a+(f): E_m -> sum_mu f_mu E_{m + e_mu}."""
    f = as_vector(f)
    d = f.shape[0]
    basis = basis_indices(d, cutoff)
    pos = {m: i for i, m in enumerate(basis)}
    M = np.zeros((len(basis), len(basis)), dtype=complex)
    for j, m in enumerate(basis):
        if sum(m) >= cutoff:
            continue
        for mu in range(d):
            if f[mu] == 0:
                continue
            up = list(m)
            up[mu] += 1
            M[pos[tuple(up)], j] += f[mu]
    return FockOperator(d, cutoff, M)


def annihilate(f, cutoff: int) -> FockOperator:
    """Annihilation a(f): E_m -> sum_mu f_mu m_mu E_{m - e_mu}.

    Linear (not conjugate-linear) in f; the adjoint of create(f) is
    annihilate(f*).
    """
    f = as_vector(f)
    d = f.shape[0]
    basis = basis_indices(d, cutoff)
    pos = {m: i for i, m in enumerate(basis)}
    M = np.zeros((len(basis), len(basis)), dtype=complex)
    for j, m in enumerate(basis):
        for mu in range(d):
            if m[mu] == 0 or f[mu] == 0:
                continue
            down = list(m)
            down[mu] -= 1
            M[pos[tuple(down)], j] += f[mu] * m[mu]
    return FockOperator(d, cutoff, M)


def gamma(B, cutoff: int) -> FockOperator:
    """Second quantization: Gamma(B) E_m = prod_mu (B e_mu)^{v m_mu}."""
    B = as_matrix(B)
    d = B.shape[0]
    basis = basis_indices(d, cutoff)
    deg = _degree_grid(d, cutoff)
    cols = []
    for m in basis:
        acc = vacuum_tensor(d, cutoff).coeffs
        for mu in range(d):
            col = np.zeros((cutoff + 1,) * d, dtype=complex)
            for nu in range(d):
                e = [0] * d
                e[nu] = 1
                col[tuple(e)] = B[nu, mu]
            for _ in range(m[mu]):
                acc = _shift_add(col, acc, cutoff, deg)
        cols.append(acc)
    idx = np.array(basis)
    M = np.stack([c[tuple(idx.T)] for c in cols], axis=1)
    return FockOperator(d, cutoff, M)


def weyl(h, cutoff: int) -> FockOperator:
    """Displacement W(h) = exp(a+(h) - a(h*)) via the matrix exponential."""
    h = as_vector(h)
    gen = create(h, cutoff).matrix - annihilate(involution(h), cutoff).matrix
    return FockOperator(h.shape[0], cutoff, scipy.linalg.expm(gen))


def alpha_norm(F: FockTensor, alpha: float) -> float:
    """Weighted norm sqrt(sum_n alpha^{-2n} ||F_n||^2)."""
    if not (alpha > 0):
        raise InvalidAlphaError("alpha must be strictly positive")
    dn = degree_norms(F)
    scale = np.power(float(alpha), -np.arange(F.cutoff + 1))
    return float(np.linalg.norm(scale * dn))


def _closed_form_norm(Z: np.ndarray, f: np.ndarray) -> float:
    """||Phi(Z, f)|| from determinants; used only to pick cutoffs.

    Kept local so the oracle's measured quantities stay independent of the
    closed-form layer; an error here would shrink or inflate cutoffs and make
    comparisons fail loudly, never agree silently.
    """
    d = Z.shape[0]
    eye = np.eye(d)
    Zad = np.conj(Z).T
    Mi = np.linalg.inv(eye - Zad @ Z)
    Gi = np.linalg.inv(eye - Z @ Zad)
    fs = np.conj(f)
    val = (-0.5 * np.sum(np.log(np.linalg.eigvalsh(eye - Zad @ Z)))
           + 0.5 * (fs @ (Z @ Mi @ fs)).real
           + np.vdot(f, Gi @ f).real
           + 0.5 * (f @ (Zad @ Gi @ f)).real)
    if val > 1400.0:
        return np.inf
    return float(np.exp(0.5 * val))


def tail_bound(x: UltracoherentState, cutoff: int) -> float:
    """Upper bound on the Fock norm of the degrees dropped beyond the cutoff.

    Uses the scaling identity that the degree-n component of Phi(Z, f) times
    g^{-n} is the degree-n component of Phi(Z/g^2, f/g), so the dropped mass
    is at most the geometric tail g^{cutoff+1} (1-g^2)^{-1/2} ||Phi(Z/g^2, f/g)||
    for any g in (sqrt||Z||, 1); the bound is minimized over a grid of g.
    Zero for the vacuum.
    """
    Z = x.Z.Z
    f = x.f
    s = operator_norm(Z)
    amp = float(np.exp(x.log_amp.real))
    if s == 0.0 and not np.any(f):
        return 0.0
    lo = np.sqrt(s) + 1e-4 if s > 0 else 1e-4
    best = np.inf
    for g in np.linspace(lo, 1.0 - 1e-4, 96):
        if g * g <= s or g >= 1.0:
            continue
        val = (g ** (cutoff + 1) / np.sqrt(1.0 - g * g)
               * _closed_form_norm(Z / (g * g), f / g))
        if val < best:
            best = val
    if not np.isfinite(best):
        raise NotInDiscError(
            f"no valid scaling parameter for ||Z|| = {s:.6f}", s)
    return amp * float(best)
