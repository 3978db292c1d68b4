"""Simply-laced generalized root systems: Euler forms, root enumeration and
classification by admissible diagrams of the Coxeter element."""
from __future__ import annotations

from .carter import (
    AdmissibleRep,
    admissible_representation,
    are_isomorphic_grs,
    catalog_representation,
    classify_grs,
    classify_names,
    diagram_of,
    realize,
    verify_admissible,
)
from .cartan_types import standard_grs
from .catalog import catalog, classify_diagram
from .diagrams import CarterDiagram, diagrams_isomorphic, find_isomorphism
from .errors import (
    GrsError,
    NotPositiveDefinite,
    SearchExhausted,
    ValidationError,
    VerificationFailure,
)
from .grs import (
    EulerNotUnique,
    GrsPresentation,
    LatticeMap,
    Unknown,
    coxeter_matrix,
    coxeter_order,
    euler_form,
    is_morphism,
    new_grs,
    radical,
    reflection_matrix,
    solve_euler_uniqueness,
)
from .weyl import (
    are_conjugate,
    check_axioms,
    enumerate_roots,
    enumerate_weyl_group,
    irreducible_components,
    subsystem_closure,
)

__version__ = "0.1.0"

__all__ = [
    "admissible_representation",
    "AdmissibleRep",
    "are_conjugate",
    "are_isomorphic_grs",
    "CarterDiagram",
    "catalog",
    "catalog_representation",
    "check_axioms",
    "classify_diagram",
    "classify_grs",
    "classify_names",
    "coxeter_matrix",
    "coxeter_order",
    "diagram_of",
    "diagrams_isomorphic",
    "enumerate_roots",
    "enumerate_weyl_group",
    "euler_form",
    "EulerNotUnique",
    "find_isomorphism",
    "GrsError",
    "GrsPresentation",
    "irreducible_components",
    "is_morphism",
    "LatticeMap",
    "new_grs",
    "NotPositiveDefinite",
    "radical",
    "realize",
    "reflection_matrix",
    "SearchExhausted",
    "solve_euler_uniqueness",
    "standard_grs",
    "subsystem_closure",
    "Unknown",
    "ValidationError",
    "VerificationFailure",
    "verify_admissible",
]
