"""voganpress: push-the-button calculus on Vogan superdiagrams.

Build preferred extended Dynkin diagrams of the contragredient families,
test admissibility of circlings, press circled vertices, enumerate press
orbits, reduce circlings to minimal representatives, and decide when two
admissible circlings present the same real form.
"""

from .catalog import (
    Diagram,
    Edge,
    FamilySpec,
    Node,
    RootRealization,
    build_preferred_diagram,
    diagram_from_json,
    diagram_to_json,
    family_spec,
    list_families,
    root_realization,
    verify_marks,
)
from .engine import (
    EquivalenceClass,
    OrbitReport,
    Symmetry,
    automorphisms,
    classify,
    equivalent,
    f_orbit,
    f_related,
    is_admissible,
    odd_removed_components,
    press,
    press_sequence,
    reduce,
    reflection_report,
)

__version__ = "0.1.0"

__all__ = [
    "Diagram",
    "Edge",
    "EquivalenceClass",
    "FamilySpec",
    "Node",
    "OrbitReport",
    "RootRealization",
    "Symmetry",
    "automorphisms",
    "build_preferred_diagram",
    "classify",
    "diagram_from_json",
    "diagram_to_json",
    "equivalent",
    "f_orbit",
    "f_related",
    "family_spec",
    "is_admissible",
    "list_families",
    "odd_removed_components",
    "press",
    "press_sequence",
    "reduce",
    "reflection_report",
    "root_realization",
    "verify_marks",
]
