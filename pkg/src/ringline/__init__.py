"""Finite rings with unity, their projective lines, and line classification."""

from .build import (
    RingRecipe,
    build_recipe,
    direct_product,
    emit_ring_file,
    matrix_ring,
    matrix_subring_closure,
    parse_recipe,
    parse_ring_file,
    quotient_dual_numbers,
    ring_from_spec,
    ring_gf,
    ring_zn,
    skew_dual_numbers,
    structure_constants_algebra,
    triangular_ring,
)
from .catalog import (
    CatalogEntry,
    EntryResult,
    RunReport,
    builtin_catalog,
    catalog_entry,
    evaluate_entry,
    run_catalog,
)
from .core import (
    ElementSubset,
    FiniteRing,
    RingFingerprint,
    center,
    characteristic,
    fingerprint,
    ideal_lattice,
    is_commutative,
    jacobson_radical,
    maximal_ideal_count,
    maximal_ideals,
    relabel,
    unit_elements,
    units,
    validate_ring,
    zero_divisor_count,
    zero_divisors,
)
from .errors import (
    ClosureTooLarge,
    NoDistantPair,
    NotAbelianGroup,
    NotAssociative,
    NotAutomorphism,
    NotClosed,
    NotDistributive,
    NotIrreducible,
    NotPrime,
    NoUnity,
    OrderTooLarge,
    RightLineBreakdown,
    RinglineError,
    RingSyntaxError,
    RingValidationError,
    UnknownCandidate,
    ZeroIndexNotZero,
)
from .line import (
    Point,
    ProjectiveLine,
    build_line,
    distant,
    is_admissible,
    is_invertible_2x2,
    point_type,
)
from .stats import (
    ExpectedSignature,
    LineSignature,
    SignatureComparison,
    StatValue,
    compare_signature,
    jacobson_stat,
    max_distant_set,
    neighbourhood,
    pair_intersection_stat,
    signature,
    triple_intersection_stat,
)

__version__ = "0.1.0"
