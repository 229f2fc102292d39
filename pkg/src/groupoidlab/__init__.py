"""groupoidlab: build, check, and survey finite two-parameter groupoids.

The star product x*y = t·x + u·y (componentwise, modulo n) over a handful of
carriers — modulo integers, indeterminate-coefficient variants, one-endpoint
intervals — with exhaustive/lifted/sampled identity checking, subset structure
analysis, parameter-class counting, and a registry of executable range checks.
"""

from .carrier import (
    CannotEnumerate,
    Carrier,
    CarrierError,
    CoprimalityClass,
    IntervalOf,
    MixedNeutrosophic,
    Modular,
    PureNeutrosophic,
    RationalDemo,
    is_prime,
    parse_carrier,
)
from .groupoid import (
    BudgetExceeded,
    CayleyTable,
    Groupoid,
    GroupoidSpec,
    Level,
    build,
    cayley_table,
    classify_level,
    from_table,
)
from .identities import (
    CheckMode,
    ConsistencyReport,
    IdentityId,
    IdentityVerdict,
    check_alternative,
    check_identity,
    closed_form,
    cross_validate,
)
from .shape import (
    Matrix,
    Poly,
    ProductKind,
    Scalar,
    Shape,
    TooLarge,
    element_space,
    format_element,
    parse_element,
    parse_shape,
    star,
)
from .structure import (
    ConjugacyVerdict,
    EnumerationResult,
    HomomorphismVerdict,
    IdealSets,
    SimpleVerdict,
    SmarandacheVerdict,
    StructureReport,
    SubsetClassification,
    SubsetHandle,
    analyze,
    are_conjugate,
    check_homomorphism,
    classify_subset,
    enumerate_ideals,
    enumerate_subgroupoids,
    find_normal_subgroupoids,
    identity_holds_on_subset,
    is_normal_groupoid,
    is_simple,
    smarandache,
    subset_handle,
)
from .theorems import (
    CHECKS,
    CheckOutcome,
    SuiteConfig,
    SuiteReport,
    count_class,
    run_suite,
    ssc_family_check,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CHECKS",
    "CannotEnumerate",
    "Carrier",
    "CarrierError",
    "CayleyTable",
    "CheckMode",
    "CheckOutcome",
    "ConjugacyVerdict",
    "ConsistencyReport",
    "CoprimalityClass",
    "EnumerationResult",
    "Groupoid",
    "GroupoidSpec",
    "HomomorphismVerdict",
    "IdealSets",
    "IdentityId",
    "IdentityVerdict",
    "IntervalOf",
    "Level",
    "Matrix",
    "MixedNeutrosophic",
    "Modular",
    "Poly",
    "ProductKind",
    "PureNeutrosophic",
    "RationalDemo",
    "Scalar",
    "Shape",
    "SimpleVerdict",
    "SmarandacheVerdict",
    "StructureReport",
    "SubsetClassification",
    "SubsetHandle",
    "SuiteConfig",
    "SuiteReport",
    "TooLarge",
    "analyze",
    "are_conjugate",
    "build",
    "cayley_table",
    "check_alternative",
    "check_homomorphism",
    "check_identity",
    "classify_level",
    "classify_subset",
    "closed_form",
    "count_class",
    "cross_validate",
    "element_space",
    "enumerate_ideals",
    "enumerate_subgroupoids",
    "find_normal_subgroupoids",
    "format_element",
    "from_table",
    "identity_holds_on_subset",
    "is_normal_groupoid",
    "is_prime",
    "is_simple",
    "parse_carrier",
    "parse_element",
    "parse_shape",
    "run_suite",
    "smarandache",
    "ssc_family_check",
    "star",
    "subset_handle",
    "verify_theorem",
]
