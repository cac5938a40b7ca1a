"""Cohomology rings of flag bundles and Grassmannians, presented by
characteristic classes, with exact per-degree normal forms and Poincare
series."""

from .algebra import (
    CutoffExceededError,
    GeneratorSymbol,
    Generators,
    GradedElement,
    Monomial,
    NormalForm,
    PresentationError,
    QuotientRing,
    RingPresentation,
    make_presentation,
)
from .catalog import (
    BasisFamily,
    SpaceDescriptor,
    build_ring,
    build_space,
    characteristic_basis_monomials,
    top_degree,
    verify_space,
)
from .extension import (
    BundleData,
    BundleError,
    TowerStage,
    bott_tower,
    equivariant_base,
    equivariant_space,
    flag_bundle,
    grassmannian_bundle,
    odd_grassmannian_bundle,
    point_ring,
    projectivization,
    ring_pushout,
    sphere_bundle,
    whitney_complement,
    zero_generators,
)
from .linalg import BACKEND
from .series import (
    ClosedFormSeries,
    TruncatedSeries,
    complex_grassmannian_series,
    leray_hirsch_product,
    odd_grassmannian_series,
    oriented_series,
    palindrome_check,
    real_even_grassmannian_series,
    series_from_ring,
    substitute_t_squared,
    truncate,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BasisFamily",
    "BundleData",
    "BundleError",
    "ClosedFormSeries",
    "CutoffExceededError",
    "GeneratorSymbol",
    "Generators",
    "GradedElement",
    "Monomial",
    "NormalForm",
    "PresentationError",
    "QuotientRing",
    "RingPresentation",
    "SpaceDescriptor",
    "TowerStage",
    "TruncatedSeries",
    "bott_tower",
    "build_ring",
    "build_space",
    "characteristic_basis_monomials",
    "complex_grassmannian_series",
    "equivariant_base",
    "equivariant_space",
    "flag_bundle",
    "grassmannian_bundle",
    "leray_hirsch_product",
    "make_presentation",
    "odd_grassmannian_bundle",
    "odd_grassmannian_series",
    "oriented_series",
    "palindrome_check",
    "point_ring",
    "projectivization",
    "real_even_grassmannian_series",
    "ring_pushout",
    "series_from_ring",
    "sphere_bundle",
    "substitute_t_squared",
    "top_degree",
    "truncate",
    "verify_space",
    "whitney_complement",
    "zero_generators",
    "__version__",
]
