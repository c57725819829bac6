"""Bicomplex linear algebra: hyperbolic positivity, tensor products and completely positive maps."""
from .errors import (
    BadFactorization,
    BicomplexError,
    InputError,
    MathematicalFailure,
    NotCP,
    NotPositive,
    NotProduct,
    NotSquare,
    ParseError,
    ShapeMismatch,
    Singular,
    ZeroDivisor,
    ZeroTrace,
)
from .scalar import (
    E1,
    E2,
    I,
    J,
    K,
    ONE,
    ZERO,
    BicomplexScalar,
    HyperbolicScalar,
    bc_inverse,
    bc_mul,
    conjugate,
    d_leq,
    d_norm,
    d_plus_contains,
    euclidean_norm,
    hyp_modulus_sq,
    idempotent_join,
    idempotent_split,
)
from .matrix import (
    BicomplexMatrix,
    BicomplexVector,
    d_inner_product,
    d_vector_norm,
    mat_add,
    mat_inverse,
    mat_mul,
    scalar_mul,
    star_transpose,
    trace,
)
from .positivity import (
    EigenPairList,
    bc_eigenvalues,
    cholesky,
    is_hyperbolic_positive,
    is_state,
    quadratic_form,
    random_gram,
    random_state,
    rank_one_decomposition,
)
from .tensor import block_representation, recover_factors, tensor_cartesian, tensor_idempotent
from .choi import (
    KrausSet,
    MatrixMap,
    apply_map,
    block_apply,
    choi_matrix,
    is_completely_positive,
    is_trace_preserving,
    kraus_decomposition,
    map_from_kraus,
    tensor_maps,
)
from .dsp import OpCounter, StridePermutation, apply_direct, apply_factored, stride_permutation

__version__ = "0.1.0"

__all__ = [
    "BadFactorization",
    "BicomplexError",
    "InputError",
    "MathematicalFailure",
    "NotCP",
    "NotPositive",
    "NotProduct",
    "NotSquare",
    "ParseError",
    "ShapeMismatch",
    "Singular",
    "ZeroDivisor",
    "ZeroTrace",
    "E1",
    "E2",
    "I",
    "J",
    "K",
    "ONE",
    "ZERO",
    "BicomplexScalar",
    "HyperbolicScalar",
    "bc_inverse",
    "bc_mul",
    "conjugate",
    "d_leq",
    "d_norm",
    "d_plus_contains",
    "euclidean_norm",
    "hyp_modulus_sq",
    "idempotent_join",
    "idempotent_split",
    "BicomplexMatrix",
    "BicomplexVector",
    "d_inner_product",
    "d_vector_norm",
    "mat_add",
    "mat_inverse",
    "mat_mul",
    "scalar_mul",
    "star_transpose",
    "trace",
    "EigenPairList",
    "bc_eigenvalues",
    "cholesky",
    "is_hyperbolic_positive",
    "is_state",
    "quadratic_form",
    "random_gram",
    "random_state",
    "rank_one_decomposition",
    "KrausSet",
    "MatrixMap",
    "apply_map",
    "block_apply",
    "choi_matrix",
    "is_completely_positive",
    "is_trace_preserving",
    "kraus_decomposition",
    "map_from_kraus",
    "tensor_maps",
    "block_representation",
    "recover_factors",
    "tensor_cartesian",
    "tensor_idempotent",
    "OpCounter",
    "StridePermutation",
    "apply_direct",
    "apply_factored",
    "stride_permutation",
]
