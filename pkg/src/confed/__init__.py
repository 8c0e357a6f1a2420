"""Confederate linearizations with structured backward-error injection and audits."""

from ._backend import NUMBA_ENABLED
from .basis import (
    BasisKind,
    BasisSpec,
    basis_from_tag,
    eval_phi,
    eval_poly,
    jacobi_scaling_closed_form,
    make_basis,
    phi_ascending,
    phi_matrix,
    scaling_vector,
)
from .bounds import (
    BOUND_REPORT_COLUMNS,
    BoundReport,
    CoincidentNodeError,
    JacobiConstants,
    cheb_coefficient_bound,
    bound_monomial,
    bound_report_rows,
    bound_structured,
    gamma_pointwise,
    jacobi_constants,
    lagrange_matrix,
    monomial_s_closed_form,
    ms_constants,
    node_sets,
    save_bound_report,
)
from .ddouble import DD, ComplexDD
from .eig import EigNonConvergence, EigResult, golub_welsch, hessenberg_qr, roots_of_poly
from .linearize import (
    ConfederateParts,
    adjugate,
    assemble_dense,
    build_companion_unitary,
    build_confederate,
    symmetrize,
)
from .perturb import (
    Perturbation,
    apply_perturbation,
    random_perturbation,
    random_unbalanced_poly,
    trial_rng,
)
from .recover import (
    DeltaP,
    ExactSingularityError,
    SingularSystemError,
    backward_error,
    char_value,
    delta_p_at,
    delta_p_values,
    recover_monomial,
    recover_orthogonal,
)

__version__ = "0.1.0"

__all__ = [
    "NUMBA_ENABLED",
    "BasisKind",
    "BasisSpec",
    "basis_from_tag",
    "eval_phi",
    "eval_poly",
    "jacobi_scaling_closed_form",
    "make_basis",
    "phi_ascending",
    "phi_matrix",
    "scaling_vector",
    "BOUND_REPORT_COLUMNS",
    "BoundReport",
    "CoincidentNodeError",
    "JacobiConstants",
    "cheb_coefficient_bound",
    "bound_monomial",
    "bound_report_rows",
    "bound_structured",
    "save_bound_report",
    "gamma_pointwise",
    "jacobi_constants",
    "lagrange_matrix",
    "monomial_s_closed_form",
    "ms_constants",
    "node_sets",
    "DD",
    "ComplexDD",
    "EigNonConvergence",
    "EigResult",
    "golub_welsch",
    "hessenberg_qr",
    "roots_of_poly",
    "ConfederateParts",
    "adjugate",
    "assemble_dense",
    "build_companion_unitary",
    "build_confederate",
    "symmetrize",
    "Perturbation",
    "apply_perturbation",
    "random_perturbation",
    "random_unbalanced_poly",
    "trial_rng",
    "DeltaP",
    "ExactSingularityError",
    "SingularSystemError",
    "backward_error",
    "char_value",
    "delta_p_at",
    "delta_p_values",
    "recover_monomial",
    "recover_orthogonal",
    "__version__",
]
