"""Exact counting and exhaustive verification of splitting subspaces,
block companion matrices, and vector recurrences over finite fields."""

from .config import DEFAULT_FACTOR_BOUND, DEFAULT_SCAN_BOUND, factor_bound, scan_bound
from .errors import (
    BadArgs,
    BothZero,
    BoundOrder,
    ContextMismatch,
    DegreeZero,
    DimensionMismatch,
    DivisionByZero,
    FactorBoundExceeded,
    FactorSearchExceeded,
    IoError,
    IterationBoundExceeded,
    NotIrreducible,
    NotMonic,
    NotPrime,
    NotSquare,
    ScanBoundExceeded,
    ShapeMismatch,
    SingularMoebius,
    Singular,
    SizeExceeded,
    SplitLabError,
    UnknownStatement,
    ZeroBasePoint,
    ZeroDenominator,
    ZeroElement,
)
from .fields import (
    FieldCtx,
    FieldElement,
    TowerCtx,
    build_extension,
    build_field,
    coords_of,
    field_from_order,
    from_coords,
    generates,
    multiplicative_order,
)
from .integers import euler_phi, factorize, is_prime, prime_power_split
from .lfsr import (
    BlockRecurrence,
    PeriodReport,
    block_companion,
    census_singer,
    enumerate_recurrences,
    fiber_count,
    is_primitive_recurrence,
    nofiber_formula,
    period_preperiod,
    pvrc_formula,
    simulate,
    step,
)
from .linalg import (
    Matrix,
    SubspaceBasis,
    char_poly,
    companion_matrix,
    count_nilpotent,
    enumerate_matrices,
    enumerate_subspaces,
    gaussian_binomial,
    gl_order,
    matrix_order,
    rref,
    subspace_from_rows,
    vec_mat,
)
from .polys import (
    Poly,
    coprime_pair_count,
    find_irreducibles,
    gcd,
    is_irreducible,
    is_primitive,
    minimal_polynomial,
    q_totient,
)
from .splitting import (
    MoebiusReport,
    PointedReport,
    SplitCountReport,
    SplitInstance,
    bases_formula,
    conjecture_status,
    count_T_splitting,
    count_pointed,
    count_splitting,
    count_splitting_bases,
    endo_formula,
    is_T_splitting,
    is_alpha_splitting,
    m2_subtraction,
    multiplication_matrix,
    nobases_formula,
    pointed_consistency,
    pointed_formula,
    split_instance,
    splitting_lower_bound,
    ssc_formula,
    sweep_generators,
    transform_subspace,
    weak_ssc_check,
)
from .verify import (
    PointResult,
    Verdict,
    VerificationJob,
    default_grid,
    emit,
    statement_ids,
    verify,
)

__version__ = "0.1.0"
