"""Finite-dimensional state algebra for pre/post-selected (PPS) ensembles.

Provides normalized system states, projectors, and the conditional
amplitudes that characterize a projector on a PPS ensemble:

* weak value        A_w = <psi_f|A|psi_i> / <psi_f|psi_i>
* modular value     1 + (e^{-i gamma/hbar} - 1) A_w   (exact for projectors)
* global phase      chi = arg <psi_f|psi_i>, principal branch (-pi, pi]

All objects are immutable; every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OverlapTooSmall

DEFAULT_OVERLAP_FLOOR = 1e-10

_NORM_TOL = 1e-12
_HERMITIAN_TOL = 1e-12
_IDEMPOTENT_TOL = 1e-10


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SystemState:
    """Normalized complex state vector of a finite-dimensional system."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size < 2:
            raise ValueError("system dimension must be >= 2")
        norm = np.sqrt(np.sum(np.abs(amps) ** 2))
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"state not normalized: |psi| = {norm!r}")
        object.__setattr__(self, "amplitudes", _freeze(amps))

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def normalized(cls, vec) -> "SystemState":
        """Build a state from an arbitrary nonzero vector, rescaling to unit norm."""
        v = np.asarray(vec, dtype=complex).reshape(-1)
        norm = np.sqrt(np.sum(np.abs(v) ** 2))
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(v / norm)

    @classmethod
    def basis(cls, dim: int, k: int) -> "SystemState":
        """Computational basis state |k> in `dim` dimensions."""
        v = np.zeros(dim, dtype=complex)
        v[k] = 1.0
        return cls(v)


@dataclass(frozen=True)
class Projector:
    """Hermitian idempotent matrix (an orthogonal projector)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"projector must be square, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > _HERMITIAN_TOL:
            raise ValueError("projector must be Hermitian")
        if np.max(np.abs(m @ m - m)) > _IDEMPOTENT_TOL:
            raise ValueError("projector must be idempotent (P @ P = P)")
        object.__setattr__(self, "matrix", _freeze(m))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def onto(cls, vec) -> "Projector":
        """Rank-1 projector |v><v| / <v|v> onto the ray of `vec`."""
        v = np.asarray(vec, dtype=complex).reshape(-1)
        n2 = np.sum(np.abs(v) ** 2)
        if n2 == 0.0:
            raise ValueError("cannot project onto the zero vector")
        return cls(np.outer(v, v.conj()) / n2)


def inner_product(a: SystemState, b: SystemState) -> complex:
    """<a|b> with conjugation on the first argument."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


class PpsEnsemble:
    """A pre-selection/post-selection pair with nonzero overlap.

    Attributes
    ----------
    psi_i, psi_f : SystemState
    overlap : complex
        <psi_f|psi_i>.
    pancharatnam_phase : float
        arg <psi_f|psi_i> in (-pi, pi]; the global phase the post-selection
        imprints on the conditional pointer state.
    """

    def __init__(self, psi_i: SystemState, psi_f: SystemState,
                 overlap_floor: float = DEFAULT_OVERLAP_FLOOR):
        if psi_i.dim != psi_f.dim:
            raise ValueError(f"dimension mismatch: {psi_i.dim} vs {psi_f.dim}")
        ovl = inner_product(psi_f, psi_i)
        if abs(ovl) < overlap_floor:
            raise OverlapTooSmall(
                f"|<psi_f|psi_i>| = {abs(ovl):.3e} below floor {overlap_floor:.3e}; "
                "post-selection nearly orthogonal to pre-selection")
        self.psi_i = psi_i
        self.psi_f = psi_f
        self.overlap = ovl
        self.pancharatnam_phase = float(np.angle(ovl))
        self.overlap_floor = overlap_floor

    @property
    def dim(self) -> int:
        return self.psi_i.dim

    def __repr__(self):
        return (f"PpsEnsemble(dim={self.dim}, overlap={self.overlap:.6g}, "
                f"chi={self.pancharatnam_phase:.6g})")


@dataclass(frozen=True)
class WeakValue:
    value: complex


@dataclass(frozen=True)
class ModularValue:
    value: complex
    gamma: float
    hbar: float = 1.0


def _check_dims(ens: PpsEnsemble, A: Projector):
    if A.dim != ens.dim:
        raise ValueError(f"dimension mismatch: projector {A.dim} vs ensemble {ens.dim}")


def weak_value(ens: PpsEnsemble, A: Projector) -> WeakValue:
    """Conditional amplitude ratio <psi_f|A|psi_i> / <psi_f|psi_i>.

    Complex in general and unbounded as the overlap shrinks; the ensemble's
    overlap floor guarantees finiteness.
    """
    _check_dims(ens, A)
    num = np.vdot(ens.psi_f.amplitudes, A.matrix @ ens.psi_i.amplitudes)
    return WeakValue(complex(num / ens.overlap))


def modular_value(ens: PpsEnsemble, A: Projector, gamma: float,
                  hbar: float = 1.0) -> ModularValue:
    """<psi_f| e^{-i gamma A / hbar} |psi_i> / <psi_f|psi_i> for a projector A.

    Uses the exact expansion e^{-i g A} = 1 + (e^{-i g} - 1) A, valid because
    A is idempotent; no matrix exponential is ever formed.
    """
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    aw = weak_value(ens, A).value
    phase = np.exp(-1j * gamma / hbar)
    return ModularValue(complex(1.0 + (phase - 1.0) * aw), float(gamma), float(hbar))


def weak_from_modular_derivative(ens: PpsEnsemble, A: Projector,
                                 hbar: float = 1.0, h: float = 1e-4) -> complex:
    """Recover the weak value from the coupling derivative of the modular value.

    Central difference of the modular value at gamma = 0, scaled by i*hbar;
    agrees with weak_value to O(h^2).
    """
    if h <= 0:
        raise ValueError("step h must be positive")
    mv_plus = modular_value(ens, A, +h, hbar).value
    mv_minus = modular_value(ens, A, -h, hbar).value
    return complex(1j * hbar * (mv_plus - mv_minus) / (2.0 * h))


def pancharatnam_phase(ens: PpsEnsemble) -> float:
    """arg <psi_f|psi_i> on the principal branch (-pi, pi]."""
    return ens.pancharatnam_phase
