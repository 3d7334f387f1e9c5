"""Exact chi_y-genus arithmetic, congruence checking, and form invariants."""

from .congruence import (
    CongruenceReport,
    canonical_for_chi,
    classify_and_check,
    defect,
    guaranteed_modulus,
    sigma_defect,
    sweep_checks,
)
from .genus import (
    ChernData,
    ChiVector,
    HodgeDiamond,
    chi_vector_from_hodge,
    chi_y_polynomial,
    genus_from_chern,
    specialize,
)
from .models import (
    BundleTriple,
    DocumentError,
    ManifoldModel,
    builtin_catalog,
    generate_triple,
    load_models,
    validate,
)
from .ypoly import YPolynomial
from .z2forms import (
    IntegralLattice,
    Z2BilinearSpace,
    Z2QuadraticForm,
    Z4QuadraticForm,
    arf,
    brown_invariant,
    defect_arf_pipeline,
    morita_arf_check,
    sublagrangian_reduction,
)

__version__ = "0.1.0"

__all__ = [
    "BundleTriple",
    "ChernData",
    "ChiVector",
    "CongruenceReport",
    "DocumentError",
    "HodgeDiamond",
    "IntegralLattice",
    "ManifoldModel",
    "YPolynomial",
    "Z2BilinearSpace",
    "Z2QuadraticForm",
    "Z4QuadraticForm",
    "arf",
    "brown_invariant",
    "builtin_catalog",
    "canonical_for_chi",
    "chi_vector_from_hodge",
    "chi_y_polynomial",
    "classify_and_check",
    "defect",
    "defect_arf_pipeline",
    "generate_triple",
    "genus_from_chern",
    "guaranteed_modulus",
    "load_models",
    "morita_arf_check",
    "sigma_defect",
    "specialize",
    "sublagrangian_reduction",
    "sweep_checks",
    "validate",
    "__version__",
]
