"""Shared test utilities: random instance builders and independent oracles.

The oracles here deliberately avoid the library's computation paths:
modular values come from a dense matrix exponential, Gaussian overlaps from
adaptive quadrature, translated states from cubic-spline resampling.
"""

from __future__ import annotations

import numpy as np
from scipy.integrate import quad
from scipy.linalg import expm

from pointerlab import PpsEnsemble, Projector, SystemState


def random_state(rng: np.random.Generator, dim: int = 2) -> SystemState:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return SystemState.normalized(v)


def random_rank1_projector(rng: np.random.Generator, dim: int = 2) -> Projector:
    return Projector.onto(rng.normal(size=dim) + 1j * rng.normal(size=dim))


def random_ensemble(rng: np.random.Generator, dim: int = 2,
                    min_overlap: float = 0.2) -> PpsEnsemble:
    """Haar-ish random PPS pair, redrawn until the overlap clears min_overlap."""
    while True:
        psi_i = random_state(rng, dim)
        psi_f = random_state(rng, dim)
        if abs(np.vdot(psi_f.amplitudes, psi_i.amplitudes)) >= min_overlap:
            return PpsEnsemble(psi_i, psi_f)


def real_weak_value_instance(a: float) -> tuple[PpsEnsemble, Projector]:
    """Ensemble and projector engineered so the weak value is the real number a.

    psi_i = (|0> + |1>)/sqrt(2), psi_f = (cos b, sin b) with tan b = a/(1-a),
    A = |1><1|; then A_w = sin b / (cos b + sin b) = a.
    """
    b = np.arctan2(a, 1.0 - a)
    psi_i = SystemState(np.array([1.0, 1.0], dtype=complex) / np.sqrt(2.0))
    psi_f = SystemState(np.array([np.cos(b), np.sin(b)], dtype=complex))
    proj = Projector(np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex))
    return PpsEnsemble(psi_i, psi_f), proj


def modular_value_expm(ens: PpsEnsemble, proj: Projector, gamma: float,
                       hbar: float = 1.0) -> complex:
    """Brute-force modular value via a dense matrix exponential."""
    u = expm(-1j * gamma * proj.matrix / hbar)
    return complex(np.vdot(ens.psi_f.amplitudes, u @ ens.psi_i.amplitudes)
                   / ens.overlap)


def weak_value_direct(ens: PpsEnsemble, proj: Projector) -> complex:
    """Plain matrix arithmetic, no library calls."""
    num = ens.psi_f.amplitudes.conj() @ proj.matrix @ ens.psi_i.amplitudes
    den = ens.psi_f.amplitudes.conj() @ ens.psi_i.amplitudes
    return complex(num / den)


def gaussian_overlap_quadrature(sigma: float, gamma: float) -> float:
    """Integral of phi(q) phi(q - gamma) for the canonical Gaussian pointer."""
    norm = (2.0 * np.pi * sigma**2) ** -0.5

    def integrand(q):
        return norm * np.exp(-(q**2 + (q - gamma) ** 2) / (4.0 * sigma**2))

    lo = min(0.0, gamma) - 12.0 * sigma
    hi = max(0.0, gamma) + 12.0 * sigma
    value, _ = quad(integrand, lo, hi, limit=400)
    return value
