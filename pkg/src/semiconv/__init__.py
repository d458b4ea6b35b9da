"""Exact structure and convolution-limit analysis of finite semigroups.

Semigroups are Cayley tables over labeled elements; probability lives in
exact rational arithmetic end to end.  The package computes idempotents,
ideals, kernels, and product decompositions of completely simple kernels,
and analyzes the long-run behavior of convolution powers of a distribution:
the averaged limit, the cluster cycle of the powers, and the product
factorizations of both.
"""

from .core import (
    DEFAULT_ORDER_CAP,
    ElementSet,
    GroupStructure,
    Semigroup,
    generated_subsemigroup,
    group_structure,
    idempotents,
    is_ideal,
    is_left_ideal,
    is_left_simple,
    is_right_ideal,
    is_right_simple,
    is_simple,
    kernel,
    left_quotient,
    minimal_left_ideals,
    minimal_right_ideals,
    principal_left_ideal,
    principal_right_ideal,
    product_sets,
    right_quotient,
    validate_cayley,
)
from .dynamics import (
    DEFAULT_EXACT_CAP,
    CesaroDiagnostic,
    ConvolutionOperator,
    LimitReport,
    PowerCluster,
    ShadowReport,
    analyze_limit,
    cesaro_average,
    cesaro_deviation,
    cesaro_diagnostic,
    cesaro_limit,
    convolution_operator,
    element_power_cluster,
    float_shadow,
    power,
    support_period,
    tv_distance,
    variation_norm,
)
from ._rat import ONE, RAT, ZERO, as_rat, rat_from_string, rat_to_string
from .errors import (
    Cancelled,
    EmptyGenerators,
    EmptySet,
    EmptySupport,
    HypothesisViolated,
    IndexOutOfRange,
    InvalidDistribution,
    InvalidSandwichEntry,
    MalformedInput,
    MismatchedParent,
    NonAssociative,
    NotAGroup,
    NotASubsemigroup,
    NotIdempotent,
    NotInFactor,
    NotPrimitive,
    NotSimple,
    OrderCapExceeded,
    ParameterOutOfRange,
    PreconditionViolated,
    SemiconvError,
    SingularDecomposition,
    SupportOutsideDecomposition,
    TheoremViolation,
    VerificationFailed,
)
from .generators import CorpusSpec, XorShift64Star, build, random_dist
from .measure import (
    ConvolutionInvariance,
    Dist,
    IdempotentFactorization,
    TranslationInvariance,
    check_convolution_invariance,
    classify_translation_invariance,
    compose_idempotent,
    convolve,
    convolve_many,
    dirac,
    factorize_idempotent,
    haar_uniform,
    is_idempotent_measure,
    marginals,
    support,
    translate,
    uniform_on,
)
from .rees import (
    ReesDecomposition,
    idempotent_criterion,
    is_primitive_idempotent,
    psi,
    psi_inv,
    rebase,
    rees_decompose,
    rees_matrix_semigroup,
)
from .verify import SuiteResult, build_corpus, run_suite

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EXACT_CAP",
    "DEFAULT_ORDER_CAP",
    "ONE",
    "RAT",
    "ZERO",
    "Cancelled",
    "CesaroDiagnostic",
    "ConvolutionInvariance",
    "ConvolutionOperator",
    "CorpusSpec",
    "Dist",
    "ElementSet",
    "EmptyGenerators",
    "EmptySet",
    "EmptySupport",
    "GroupStructure",
    "HypothesisViolated",
    "IdempotentFactorization",
    "IndexOutOfRange",
    "InvalidDistribution",
    "InvalidSandwichEntry",
    "LimitReport",
    "MalformedInput",
    "MismatchedParent",
    "NonAssociative",
    "NotAGroup",
    "NotASubsemigroup",
    "NotIdempotent",
    "NotInFactor",
    "NotPrimitive",
    "NotSimple",
    "OrderCapExceeded",
    "ParameterOutOfRange",
    "PowerCluster",
    "PreconditionViolated",
    "ReesDecomposition",
    "Semigroup",
    "SemiconvError",
    "ShadowReport",
    "SingularDecomposition",
    "SuiteResult",
    "SupportOutsideDecomposition",
    "TheoremViolation",
    "TranslationInvariance",
    "VerificationFailed",
    "XorShift64Star",
    "analyze_limit",
    "as_rat",
    "build",
    "build_corpus",
    "cesaro_average",
    "cesaro_deviation",
    "cesaro_diagnostic",
    "cesaro_limit",
    "check_convolution_invariance",
    "classify_translation_invariance",
    "compose_idempotent",
    "convolution_operator",
    "convolve",
    "convolve_many",
    "dirac",
    "element_power_cluster",
    "factorize_idempotent",
    "float_shadow",
    "generated_subsemigroup",
    "group_structure",
    "haar_uniform",
    "idempotent_criterion",
    "idempotents",
    "is_ideal",
    "is_idempotent_measure",
    "is_left_ideal",
    "is_left_simple",
    "is_primitive_idempotent",
    "is_right_ideal",
    "is_right_simple",
    "is_simple",
    "kernel",
    "left_quotient",
    "marginals",
    "minimal_left_ideals",
    "minimal_right_ideals",
    "power",
    "principal_left_ideal",
    "principal_right_ideal",
    "product_sets",
    "psi",
    "psi_inv",
    "random_dist",
    "rat_from_string",
    "rat_to_string",
    "rebase",
    "rees_decompose",
    "rees_matrix_semigroup",
    "right_quotient",
    "run_suite",
    "support",
    "support_period",
    "translate",
    "tv_distance",
    "uniform_on",
    "validate_cayley",
]
