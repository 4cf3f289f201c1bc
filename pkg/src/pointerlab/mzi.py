"""Twin Mach-Zehnder interferometer as a two-path measurement of a projector.

Layout (two-dimensional path space at every stage):

    in: R1 --BS1--> (R2, L2)  measured arm: L2, shifted by gamma
                    --BS2--> (L4-R5, R4-L5)  L4-R5 dark when phi = 0
        phase window phi on L4-R5, optional shutter on L4-R5
                    --BS3--> (R6, L6)  camera on one port post-selects

All beamsplitters are the symmetric 50/50 matrix [[1, i], [i, 1]]/sqrt(2);
with that convention the first output index of BS2 is the dark one, which
pins every other sign choice. The beam displacement couples only to the L2
component, so the whole apparatus is exactly a pre-selection |R1>, a
projector onto L2, and a port-dependent post-selection. Blocking the
nominally dark path removes its amplitude before BS3, which swaps the
post-selection onto an even mixture and yields weak value 1/2.

Anchored weak values (independent of sigma and gamma):

    phi = 0,  port R6, open     -> 1
    phi = pi, port R6, open     -> 0
    phi = 0,  port L6, open     -> 0
    phi = 0,  port R6, blocked  -> 1/2
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import PpsEnsemble, Projector, SystemState, weak_value
from .dynamics import apply_modular_operator, spatial_profile
from .errors import OverlapTooSmall, PostSelectionDark
from .pointer import Grid, centroid, default_grid, gaussian_pointer

_INV_SQRT2 = 1.0 / np.sqrt(2.0)
_BEAMSPLITTER = np.array([[1.0, 1.0j], [1.0j, 1.0]], dtype=complex) * _INV_SQRT2

PORTS = ("R6", "L6")


@dataclass(frozen=True)
class MziScenario:
    """Interferometer configuration and the displacement scan to run."""

    phi: float
    port: str
    dark_path_blocked: bool
    sigma: float
    gammas: tuple[float, ...]
    grid: Grid | None = None

    def __post_init__(self):
        if self.port not in PORTS:
            raise ValueError(f"port must be one of {PORTS}, got {self.port!r}")
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        object.__setattr__(self, "gammas", tuple(float(g) for g in self.gammas))

    def resolved_grid(self) -> Grid:
        if self.grid is not None:
            return self.grid
        return default_grid(self.sigma, self.gammas if self.gammas else (0.0,))


@dataclass(frozen=True)
class MziRealization:
    """Effective PPS data realized by the interferometer."""

    psi_i: SystemState
    psi_f: SystemState
    A: Projector
    A_w: complex


def realize(scenario: MziScenario,
            overlap_floor: float = 1e-10) -> MziRealization:
    """Map (phi, port, shutter) to the effective pre/post states and projector.

    Path basis: index 0 = R arm, index 1 = L arm (the measured one). The
    post-selection is the port state pulled back through BS3, the phase
    window, the optional shutter and BS2 to the interaction region.
    """
    psi_i_vec = _BEAMSPLITTER @ np.array([1.0, 0.0], dtype=complex)

    port_vec = np.zeros(2, dtype=complex)
    port_vec[PORTS.index(scenario.port)] = 1.0

    back = _BEAMSPLITTER.conj().T @ port_vec
    back = np.array([np.exp(-1j * scenario.phi) * back[0], back[1]])
    if scenario.dark_path_blocked:
        back[0] = 0.0
    psi_f_vec = _BEAMSPLITTER.conj().T @ back

    f_norm = np.linalg.norm(psi_f_vec)
    if f_norm < overlap_floor:
        raise PostSelectionDark(
            f"port {scenario.port} carries no amplitude at phi = {scenario.phi:.6g}")
    psi_f_vec = psi_f_vec / f_norm

    psi_i = SystemState(psi_i_vec)
    psi_f = SystemState(psi_f_vec)
    a_proj = Projector.onto(np.array([0.0, 1.0], dtype=complex))
    try:
        ens = PpsEnsemble(psi_i, psi_f, overlap_floor=overlap_floor)
    except OverlapTooSmall as exc:
        raise PostSelectionDark(
            f"post-selection at port {scenario.port}, phi = {scenario.phi:.6g} "
            f"is orthogonal to the pre-selection: {exc}") from exc
    return MziRealization(psi_i=psi_i, psi_f=psi_f, A=a_proj,
                          A_w=weak_value(ens, a_proj).value)


def camera_profile(scenario: MziScenario, gamma: float) -> np.ndarray:
    """Intensity distribution recorded at the configured port for one shift."""
    real = realize(scenario)
    grid = scenario.resolved_grid()
    phi_state = gaussian_pointer(grid, scenario.sigma)
    ens = PpsEnsemble(real.psi_i, real.psi_f)
    return spatial_profile(apply_modular_operator(ens, real.A, phi_state, gamma))


@dataclass(frozen=True)
class ResponseRow:
    gamma: float
    centroid: float


def pointer_response_curve(scenario: MziScenario) -> list[ResponseRow]:
    """Image centroid versus displacement; equals gamma * A_w for A_w in {0, 1, 1/2}."""
    real = realize(scenario)
    grid = scenario.resolved_grid()
    phi_state = gaussian_pointer(grid, scenario.sigma)
    ens = PpsEnsemble(real.psi_i, real.psi_f)
    rows = []
    for g in scenario.gammas:
        res = apply_modular_operator(ens, real.A, phi_state, g)
        rows.append(ResponseRow(gamma=g, centroid=centroid(res.state)))
    return rows
