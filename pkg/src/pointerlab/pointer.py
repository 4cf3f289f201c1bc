"""Discretized continuous pointer states on a uniform position grid.

The pointer lives on n equally spaced samples q_k = q_min + k*dq with
dq = (q_max - q_min)/n (periodic convention: q_max itself is not a sample).
Discrete norm and inner products carry the Riemann weight dq, so a unit-norm
state satisfies sum |phi_k|^2 dq = 1 and amplitudes have units length^(-1/2).

Translation is spectral: FFT, multiply mode k by e^{-i p_k gamma} with
p_k = 2 pi k / (n dq) on the symmetric frequency range, inverse FFT. This is
exact for band-limited states and works for any gamma, not just multiples of
dq; hbar is absorbed so gamma and p are in conjugate units.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridTooNarrow, WraparoundRisk

_NORM_TOL = 1e-10
_BOUNDARY_MASS_TOL = 1e-10


@dataclass(frozen=True)
class Grid:
    """Uniform 1-D position grid [q_min, q_max) with n samples."""

    q_min: float
    q_max: float
    n: int

    def __post_init__(self):
        if not self.q_max > self.q_min:
            raise ValueError("q_max must exceed q_min")
        if self.n < 16:
            raise ValueError("grid needs at least 16 points")

    @property
    def dq(self) -> float:
        return (self.q_max - self.q_min) / self.n

    @property
    def length(self) -> float:
        return self.q_max - self.q_min

    @property
    def points(self) -> np.ndarray:
        return self.q_min + self.dq * np.arange(self.n)

    @property
    def momenta(self) -> np.ndarray:
        """Conjugate momentum values, symmetric FFT ordering."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.dq)


def default_grid(sigma: float, gammas=(0.0,), n: int = 1024) -> Grid:
    """Grid wide enough for a width-`sigma` pointer shifted by any of `gammas`.

    Spans 16 sigma beyond both the origin and the extreme shifts, which keeps
    truncation and wraparound mass far below 1e-10 for |gamma| <= 8 sigma.
    """
    gs = np.atleast_1d(np.asarray(gammas, dtype=float))
    lo = -16.0 * sigma + min(0.0, float(gs.min()))
    hi = 16.0 * sigma + max(0.0, float(gs.max()))
    return Grid(lo, hi, n)


@dataclass(frozen=True)
class PointerState:
    """Complex amplitude samples on a Grid, unit discrete norm."""

    grid: Grid
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != self.grid.n:
            raise ValueError(f"expected {self.grid.n} amplitudes, got {amps.size}")
        nrm = discrete_norm(self.grid, amps)
        if abs(nrm - 1.0) > _NORM_TOL:
            raise ValueError(f"pointer state not normalized: norm = {nrm!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_samples(cls, grid: Grid, samples) -> "PointerState":
        """Build a state from raw samples, rescaling to unit discrete norm."""
        raw = np.asarray(samples, dtype=complex).reshape(-1)
        nrm = discrete_norm(grid, raw)
        if nrm == 0.0:
            raise ValueError("cannot normalize zero samples")
        return cls(grid, raw / nrm)


def discrete_norm(grid: Grid, samples: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.abs(samples) ** 2) * grid.dq))


def gaussian_pointer(grid: Grid, sigma: float) -> PointerState:
    """Real symmetric Gaussian pointer (2 pi sigma^2)^(-1/4) e^{-q^2 / 4 sigma^2}.

    The intensity |phi|^2 is the normal density with standard deviation sigma.
    The grid must span at least +-8 sigma around q = 0 so the truncated tail
    mass stays below 1e-12.
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    if grid.q_min > -8.0 * sigma or grid.q_max < 8.0 * sigma:
        raise GridTooNarrow(
            f"grid [{grid.q_min}, {grid.q_max}] must cover [-8 sigma, 8 sigma] "
            f"= [{-8*sigma}, {8*sigma}] to keep truncation mass below 1e-12")
    q = grid.points
    raw = (2.0 * np.pi * sigma**2) ** -0.25 * np.exp(-q**2 / (4.0 * sigma**2))
    return PointerState.from_samples(grid, raw)


def _spectral_shift(grid: Grid, samples: np.ndarray, gamma: float) -> np.ndarray:
    """Band-limited evaluation of samples at q - gamma (periodic)."""
    phase = np.exp(-1j * grid.momenta * gamma)
    return np.fft.ifft(np.fft.fft(samples) * phase)


def translate(phi: PointerState, gamma: float) -> PointerState:
    """Apply the position translation: the returned state samples phi(q - gamma).

    Unitary (norm preserved to machine precision). Raises WraparoundRisk if
    the shift exceeds half the grid or leaves non-negligible mass in the
    outermost grid cells, where the periodic transform would alias it.
    """
    grid = phi.grid
    if abs(gamma) >= grid.length / 2.0:
        raise WraparoundRisk(
            f"|gamma| = {abs(gamma)} >= half the grid length {grid.length / 2.0}")
    shifted = _spectral_shift(grid, phi.amplitudes, gamma)
    edge_mass = (abs(shifted[0]) ** 2 + abs(shifted[-1]) ** 2) * grid.dq
    if edge_mass > _BOUNDARY_MASS_TOL:
        raise WraparoundRisk(
            f"shifted state carries mass {edge_mass:.3e} at the grid boundary "
            f"(> {_BOUNDARY_MASS_TOL:.0e}); enlarge the grid")
    return PointerState(grid, shifted)


def overlap(a: PointerState, b: PointerState) -> complex:
    """Discrete inner product <a|b> = sum conj(a_k) b_k dq."""
    if a.grid != b.grid:
        raise ValueError("grid mismatch between pointer states")
    return complex(np.vdot(a.amplitudes, b.amplitudes) * a.grid.dq)


def centroid(phi: PointerState) -> float:
    """Mean position sum q_k |phi_k|^2 dq."""
    w = np.abs(phi.amplitudes) ** 2
    return float(np.sum(phi.grid.points * w) * phi.grid.dq)
