"""Exact-arithmetic LR-structures on finite-dimensional Lie algebras.

The package decides whether a bilinear product satisfies the LR
identities, verifies compatibility with a bracket and completeness,
and constructs complete LR-structures on nilpotent and two-step
solvable algebras, all over the rationals.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .catalog import (
    Fixture,
    abelian,
    diag_solvable,
    filiform,
    fixture_expectations,
    free_two_step,
    heisenberg,
    known_lr,
    known_lr_names,
    named_algebra,
    r2,
)
from .construct import (
    CompletionCertificate,
    ContainmentWitness,
    complete_any,
    complete_nilpotent,
    half_bracket,
    lift_product,
    lr_for_g3,
    two_generator_lr,
)
from .errors import (
    DimensionMismatchError,
    FileFormatError,
    InternalConsistencyError,
    InvalidLieAlgebraError,
    LrAlgError,
    NonCommutingFamilyError,
    NotAnIdealError,
    NotGeneratedError,
    NotLrProductError,
    NotNilpotentError,
    NotTwoSidedIdealError,
    NotTwoStepNilpotentError,
    NotTwoStepSolvableError,
    PhiNotZeroError,
    PreconditionError,
    UnknownFixtureError,
)
from .io import emit_file, format_algebra, parse_data, parse_file
from .lie import (
    LieAlgebra,
    SeriesReport,
    SplitDecomposition,
    Violation,
    ad,
    bracket_of_subspaces,
    is_two_step_solvable,
    quotient,
    series,
    split_metabelian,
    subalgebra_generated,
    validate_lie,
)
from .linalg import (
    FittingSplit,
    Matrix,
    Subspace,
    fitting_split_family,
    fitting_split_single,
    image,
    is_nilpotent_operator,
    kernel,
    solve,
)
from .lr import (
    COMPATIBILITY,
    LEMMA_IDENTITIES,
    LR_LEFT,
    LR_RIGHT,
    LrReport,
    Product,
    TwoOfThree,
    check_complete,
    check_lemma14,
    check_lr,
    left_op,
    opposite,
    product_span,
    quotient_product,
    right_op,
    sample_triples,
    two_of_three,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "Fixture",
    "abelian",
    "diag_solvable",
    "filiform",
    "fixture_expectations",
    "free_two_step",
    "heisenberg",
    "known_lr",
    "known_lr_names",
    "named_algebra",
    "r2",
    "CompletionCertificate",
    "ContainmentWitness",
    "complete_any",
    "complete_nilpotent",
    "half_bracket",
    "lift_product",
    "lr_for_g3",
    "two_generator_lr",
    "DimensionMismatchError",
    "FileFormatError",
    "InternalConsistencyError",
    "InvalidLieAlgebraError",
    "LrAlgError",
    "NonCommutingFamilyError",
    "NotAnIdealError",
    "NotGeneratedError",
    "NotLrProductError",
    "NotNilpotentError",
    "NotTwoSidedIdealError",
    "NotTwoStepNilpotentError",
    "NotTwoStepSolvableError",
    "PhiNotZeroError",
    "PreconditionError",
    "UnknownFixtureError",
    "emit_file",
    "format_algebra",
    "parse_data",
    "parse_file",
    "LieAlgebra",
    "SeriesReport",
    "SplitDecomposition",
    "Violation",
    "ad",
    "bracket_of_subspaces",
    "is_two_step_solvable",
    "quotient",
    "series",
    "split_metabelian",
    "subalgebra_generated",
    "validate_lie",
    "FittingSplit",
    "Matrix",
    "Subspace",
    "fitting_split_family",
    "fitting_split_single",
    "image",
    "is_nilpotent_operator",
    "kernel",
    "solve",
    "COMPATIBILITY",
    "LEMMA_IDENTITIES",
    "LR_LEFT",
    "LR_RIGHT",
    "LrReport",
    "Product",
    "TwoOfThree",
    "check_complete",
    "check_lemma14",
    "check_lr",
    "left_op",
    "opposite",
    "product_span",
    "quotient_product",
    "right_op",
    "sample_triples",
    "two_of_three",
    "__version__",
]
