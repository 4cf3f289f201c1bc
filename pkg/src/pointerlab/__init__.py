"""Simulation and analysis of pre/post-selected von Neumann pointer measurements.

Core workflow: build a pre/post-selected ensemble and a projector, prepare a
pointer state on a grid, apply the exact two-branch measurement action, then
inspect profiles, centroids, faux-qubit readout, or the twin Mach-Zehnder
realization. A brute-force joint-space oracle validates the exact identities.
"""

from .core import (ModularValue, PpsEnsemble, Projector, SystemState,
                   WeakValue, inner_product, modular_value,
                   pancharatnam_phase, weak_from_modular_derivative,
                   weak_value)
from .dynamics import (ModularPointerResult, PersistenceRow,
                       apply_modular_operator, closed_form_norm,
                       joint_space_oracle, persistence_scan, spatial_profile)
from .errors import (DegenerateNorm, DomainError, GridTooNarrow,
                     InterferenceTooLarge, OverlapTooSmall, PeakNotFound,
                     PostSelectionDark, ResourceLimit, WraparoundRisk)
from .fauxqubit import (FauxBasis, OrthogonalityRow, ReadoutEstimate,
                        faux_basis, orthogonality_scan, read_faux_qubit)
from .mzi import (MziRealization, MziScenario, ResponseRow, camera_profile,
                  pointer_response_curve, realize)
from .pointer import (Grid, PointerState, centroid, default_grid,
                      gaussian_pointer, overlap, translate)
from .scenario import ScenarioError, ScenarioFile

__version__ = "0.1.0"

__all__ = [
    "ModularValue", "PpsEnsemble", "Projector", "SystemState", "WeakValue",
    "inner_product", "modular_value", "pancharatnam_phase",
    "weak_from_modular_derivative", "weak_value",
    "ModularPointerResult", "PersistenceRow", "apply_modular_operator",
    "closed_form_norm", "joint_space_oracle", "persistence_scan",
    "spatial_profile",
    "DegenerateNorm", "DomainError", "GridTooNarrow", "InterferenceTooLarge",
    "OverlapTooSmall", "PeakNotFound", "PostSelectionDark", "ResourceLimit",
    "WraparoundRisk",
    "FauxBasis", "OrthogonalityRow", "ReadoutEstimate", "faux_basis",
    "orthogonality_scan", "read_faux_qubit",
    "MziRealization", "MziScenario", "ResponseRow", "camera_profile",
    "pointer_response_curve", "realize",
    "Grid", "PointerState", "centroid", "default_grid", "gaussian_pointer",
    "overlap", "translate",
    "ScenarioError", "ScenarioFile",
    "__version__",
]
