"""Closed-form calculus of Gaussian vectors on bosonic Fock space.

Layers, bottom up: linalg (Takagi and branch-stable determinant logs),
symplectic (the restricted group of (U, V) pairs), siegel (the disc the group
acts on), states (Gaussian vectors and their overlap kernel), representation
(the unitary ray representation), fock (dense truncated-space oracle),
circuits (a small gate DSL), serialization and cli (plumbing).
"""

from .errors import (
    CircuitSyntaxError,
    ConstraintViolationError,
    DimensionMismatchError,
    FactorizationFailureError,
    GaussFockError,
    InternalInconsistencyError,
    InvalidAlphaError,
    ModeOutOfRangeError,
    NotInDiscError,
    NotRealSymmetricError,
    NotSymmetricError,
    NotUnitaryError,
    SingularMatrixError,
)
from .linalg import eig_log_det, hs_norm, involution, operator_norm, takagi
from .symplectic import (
    SymplecticElement,
    apply,
    compose,
    conjugated_free_field,
    from_unitary,
    identity,
    inverse,
    make_symplectic,
    polar_factorize,
    random_element,
    squeeze,
    symplectic_form,
)
from .siegel import (
    SiegelPoint,
    make_point,
    moebius,
    origin,
    random_point,
    transport_from_origin,
)
from .states import (
    UltracoherentState,
    coherent,
    displacement_to_origin,
    factor_displaced_squeezed,
    make_state,
    norm,
    overlap,
    random_state,
    scaled,
    state_residual,
    vacuum,
    weyl_apply,
    weyl_phase,
)
from .representation import (
    act,
    act_on_exponential,
    adjoint_act,
    log_det_abs_u,
    multiplier,
)
from .fock import (
    FockOperator,
    FockTensor,
    alpha_norm,
    annihilate,
    apply_operator,
    basis_indices,
    create,
    exp_omega,
    exp_vector,
    gamma,
    inner,
    make_tensor,
    omega_tensor,
    represent_state,
    symmetric_product,
    tail_bound,
    tensor_norm,
    weyl,
)
from .circuits import CompiledCircuit, Gate, compile_circuit, parse, pretty, run

__version__ = "0.1.0"

__all__ = [
    "CircuitSyntaxError",
    "CompiledCircuit",
    "ConstraintViolationError",
    "DimensionMismatchError",
    "FactorizationFailureError",
    "FockOperator",
    "FockTensor",
    "GaussFockError",
    "Gate",
    "InternalInconsistencyError",
    "InvalidAlphaError",
    "ModeOutOfRangeError",
    "NotInDiscError",
    "NotRealSymmetricError",
    "NotSymmetricError",
    "NotUnitaryError",
    "SiegelPoint",
    "SingularMatrixError",
    "SymplecticElement",
    "UltracoherentState",
    "act",
    "act_on_exponential",
    "adjoint_act",
    "alpha_norm",
    "annihilate",
    "apply",
    "apply_operator",
    "basis_indices",
    "coherent",
    "compile_circuit",
    "compose",
    "conjugated_free_field",
    "create",
    "displacement_to_origin",
    "eig_log_det",
    "exp_omega",
    "exp_vector",
    "factor_displaced_squeezed",
    "from_unitary",
    "gamma",
    "hs_norm",
    "identity",
    "inner",
    "inverse",
    "involution",
    "log_det_abs_u",
    "make_point",
    "make_state",
    "make_symplectic",
    "make_tensor",
    "moebius",
    "multiplier",
    "norm",
    "omega_tensor",
    "operator_norm",
    "origin",
    "overlap",
    "parse",
    "polar_factorize",
    "pretty",
    "random_element",
    "random_point",
    "random_state",
    "represent_state",
    "run",
    "scaled",
    "squeeze",
    "state_residual",
    "symmetric_product",
    "symplectic_form",
    "tail_bound",
    "takagi",
    "tensor_norm",
    "transport_from_origin",
    "vacuum",
    "weyl",
    "weyl_apply",
    "weyl_phase",
    "__version__",
]
