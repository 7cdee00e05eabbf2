"""coringlab: exact computational algebra for corings and comodules.

Finite dimensional corings over Q and F_p, their comodules, cotensor
products, induction and ad-induction along coring homomorphisms, and
separability certificates for those functors, all in exact arithmetic.
"""

from .errors import (
    AlgebraMismatch,
    CertificateMismatch,
    CoringlabError,
    FieldMismatch,
    HypothesisFailed,
    InternalAxiomError,
    MalformedInput,
    NotBalanced,
    NotQuasiFinite,
    ShapeError,
    TriangleFailure,
    ValidationFailed,
)
from .fields import GF, QQ, Field, PrimeField, RationalField, field_from_name
from .matrix import (
    Feasible,
    Infeasible,
    Matrix,
    direct_sum,
    hstack,
    kernel_basis,
    kron,
    kron_all,
    left_inverse,
    rref,
    same_column_space,
    solve_affine,
    solve_matrix,
    unvec,
    vec,
    vstack,
)
from .linsys import MatrixSolution, MatrixSystem
from .algebra import (
    Algebra,
    AlgebraHom,
    Bimodule,
    BimoduleMap,
    ProjectiveSplit,
    ValidationReport,
    Violation,
    field_algebra,
    is_projective,
    matrix_algebra,
    product_algebra,
    truncated_polynomial_algebra,
    upper_triangular_algebra,
    validate_algebra,
    validate_algebra_hom,
    validate_bimodule,
    validate_bimodule_map,
)
from .tensor import (
    Iso,
    TensorSpace,
    as_plain,
    balance_relations,
    induced,
    induced_map,
    presentation,
    preserves_equalizer,
    regroup,
    tensor_over,
)
from .coring import (
    Bicomodule,
    ComoduleMap,
    Coring,
    LeftComodule,
    RightComodule,
    as_bicomodule,
    cofree_right,
    regular_right_comodule,
    sample_right_comodules,
    validate_comodule,
    validate_comodule_map,
    validate_coring,
)
from .cotensor import (
    CotensorSpace,
    PsiComparison,
    cotensor,
    cotensor_assoc,
    cotensor_counit_iso,
    psi_compat,
)
from .functors import (
    AdjunctionData,
    CohomData,
    CoringHom,
    ad_induce,
    ad_induce_map,
    adjunction_data,
    cohom_finite,
    counit_hom,
    counit_map,
    identity_hom,
    induce,
    induce_map,
    unit_map,
    validate_coring_hom,
)
from .entwine import (
    Entwining,
    EntwiningMorphism,
    coring_from_entwining,
    hom_from_entwining_morphism,
    trivial_entwining,
    validate_entwining,
    validate_entwining_morphism,
)
from .separability import (
    Certificate,
    SeparabilityReport,
    certify_adinduction,
    certify_base_extension,
    certify_forgetful,
    certify_induction,
    colinear_section,
    verify_certificate,
)
from .serialize import (
    Workspace,
    WorkspaceBuilder,
    canonical_json,
    dump_workspace,
    load_files,
    load_workspace,
    merge_documents,
    tensor_pin,
)

__version__ = "0.1.0"
