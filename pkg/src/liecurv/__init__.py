"""Scalar curvature of invariant metrics on compact Lie groups and
homogeneous spaces, with numerical rigidity certificates for bi-invariant
reference metrics."""

from .lie_core import (
    LieAlgebra,
    KillingData,
    MatrixBasis,
    abelian,
    algebra_from_dict,
    algebra_from_file,
    algebra_to_dict,
    build_so,
    build_su,
    direct_sum,
    from_matrix_basis,
    jacobi_defect,
    killing,
    pauli_basis,
    resolve_algebra,
)
from .binorm import (
    BiInvariantMetric,
    DiagonalMetric,
    OrthonormalModel,
    antisymmetry_defect,
    binormalize,
    diagonalize_metric,
    killing_metric,
    metric_invariance_defect,
)
from .curvature import (
    CurvatureResult,
    FrameConnection,
    frame_connection,
    scalar_curvature_closed,
    scalar_curvature_koszul,
    scalar_gradient,
)
from .homogeneous import (
    HomogeneousSpec,
    SubalgebraEmbedding,
    build_spec,
    group_as_homogeneous,
    scalar_curvature_homogeneous,
    scalar_gradient_homogeneous,
    spec_from_dict,
    spec_from_file,
    sum_rule_defect,
)
from .rigidity import (
    CenterPresentError,
    GapBreakdown,
    RigidityReport,
    ShrinkExample,
    gap_breakdown,
    gap_polynomial,
    ordered_gap_terms,
    su2_shrink_example,
    verify_rigidity,
)

__version__ = "0.1.0"

__all__ = [
    "LieAlgebra", "KillingData", "MatrixBasis", "abelian", "algebra_from_dict",
    "algebra_from_file", "algebra_to_dict", "build_so", "build_su", "direct_sum",
    "from_matrix_basis", "jacobi_defect", "killing", "pauli_basis", "resolve_algebra",
    "BiInvariantMetric", "DiagonalMetric", "OrthonormalModel", "antisymmetry_defect",
    "binormalize", "diagonalize_metric", "killing_metric", "metric_invariance_defect",
    "CurvatureResult", "FrameConnection", "frame_connection", "scalar_curvature_closed",
    "scalar_curvature_koszul", "scalar_gradient",
    "HomogeneousSpec", "SubalgebraEmbedding", "build_spec", "group_as_homogeneous",
    "scalar_curvature_homogeneous", "scalar_gradient_homogeneous", "spec_from_dict",
    "spec_from_file", "sum_rule_defect",
    "CenterPresentError", "GapBreakdown", "RigidityReport", "ShrinkExample",
    "gap_breakdown", "gap_polynomial", "ordered_gap_terms", "su2_shrink_example",
    "verify_rigidity",
]
