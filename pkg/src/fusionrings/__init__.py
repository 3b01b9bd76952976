"""Exact-arithmetic fusion rings and partially-known modular data.

The package builds the Grothendieck rings and (partial) S/T data of several
standard families of braided fusion categories, and mechanically verifies
integrality, symmetric-subcategory, centralizer, grading, classification and
group-theoreticity statements about them at desk scale.  All certified
answers are exact; floating point only ever produces hints that are then
re-verified exactly.
"""

from .classifier import (
    ClassificationResult,
    check_hypotheses,
    classify,
    enumerate_rank_bounded,
)
from .cyclotomic import (
    Cyc,
    RealInterval,
    canonical_sqrt_of_unit,
    compare_real,
    cyc_arith,
    cyc_from_json,
    cyc_to_json,
    cyclotomic_polynomial,
    embed_interval,
    euler_phi,
    galois_conjugate,
    root_of_unity_exponent,
    root_of_unity_power,
    sign_real,
    sqrt_integer_as_cyclotomic,
    zeta,
)
from .families import (
    DTYObject,
    build_B,
    build_D,
    build_DTY_objects,
    build_DTY_plus,
    build_TY,
    build_dihedral_rep,
    build_even_part,
    build_pointed_modular,
    build_semidirect_rep,
    build_sl2,
    build_su3_example,
    parse_family,
)
from .fusionring import (
    FPDim,
    FusionDataError,
    FusionRing,
    Grading,
    GradingError,
    MissingDataError,
    SubRing,
    ValidationReport,
    adjoint_subring,
    fp_dimension,
    fp_dimension_category,
    fusion_matrix,
    grothendieck_equivalent,
    invertible_group,
    is_integral,
    is_weakly_integral,
    pointed_part,
    ring_from_products,
    subring_generated,
    universal_grading,
    validate,
)
from .groups import (
    AbelianGroup,
    BilinearForm,
    QuadraticForm,
    chi_characters,
    hyperbolic_form,
    lagrangian_search,
    standard_form,
    standard_quadratic_form,
)
from .modular import (
    GTDecision,
    PartialModularData,
    SubObjectSet,
    centralizer,
    check_balancing,
    complete_smatrix,
    enumerate_symmetric_subcategories,
    is_group_theoretical_by_dimension,
    is_group_theoretical_modular,
    is_symmetric_subcategory,
    modular_from_ring,
    muger_dimension_identity,
    verify_pq_propositions,
    verlinde_fusion,
)
from .weights import WeightData, qdim_from_weight, quantum_integer, twist_from_weight, weight_data

__all__ = [name for name in dir() if not name.startswith("_")]
