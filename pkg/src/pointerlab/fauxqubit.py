"""Two-level (faux qubit) view of the displaced pointer.

The final pointer state lives in the span of the original pointer |0~> = phi
and its translate |1~> = S phi. Both are unit vectors but they are orthogonal
only in the limit of infinite coupling; for a Gaussian pointer their overlap
is e^{-gamma^2 / 8 sigma^2}.

When that overlap is small, the density splits into two resolved humps whose
peak heights stand in the ratio |A_w|^2 / |1 - A_w|^2, so a real-valued weak
value can be read back from an ensemble intensity image. The inversion
sqrt(r) = |A_w / (1 - A_w)| has two real branches; both are returned because
the ratio alone cannot fix the sign.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InterferenceTooLarge
from .pointer import Grid, PointerState, overlap, translate

PEAK_FLOOR = 1e-12
MIN_SEPARATION = 4.0  # smallest gamma/sigma for which the two-peak read is allowed


@dataclass(frozen=True)
class FauxBasis:
    """The non-orthogonal basis pair {phi, S phi} at coupling gamma."""

    zero: PointerState
    one: PointerState
    gamma: float
    overlap_01: complex


@dataclass(frozen=True)
class ReadoutEstimate:
    """Peak-ratio readout of a real weak value.

    candidates holds the real solutions of |A_w / (1 - A_w)| = sqrt(peak_ratio):
    the positive branch sqrt(r)/(1 + sqrt(r)) first, then the negative branch
    -sqrt(r)/(1 - sqrt(r)) when sqrt(r) != 1. interference_bound is the
    basis overlap e^{-gamma^2 / 8 sigma^2}, the scale of the neglected cross
    term. degenerate marks the one-sided profiles where A_w is exactly 0 or 1.
    """

    peak_ratio: float
    candidates: tuple[float, ...]
    interference_bound: float
    degenerate: bool = False


def faux_basis(phi: PointerState, gamma: float) -> FauxBasis:
    """Construct |0~> = phi and |1~> = S phi with their overlap."""
    shifted = translate(phi, gamma)
    return FauxBasis(zero=phi, one=shifted, gamma=float(gamma),
                     overlap_01=overlap(phi, shifted))


@dataclass(frozen=True)
class OrthogonalityRow:
    gamma: float
    abs_overlap: float


def orthogonality_scan(phi: PointerState, gammas) -> list[OrthogonalityRow]:
    """|<0~|1~>| per coupling value, in input order.

    Strictly decreasing in |gamma| for a Gaussian pointer; reaches zero only
    asymptotically.
    """
    rows = []
    for g in np.atleast_1d(np.asarray(gammas, dtype=float)):
        basis = faux_basis(phi, float(g))
        rows.append(OrthogonalityRow(gamma=float(g),
                                     abs_overlap=abs(basis.overlap_01)))
    return rows


def read_faux_qubit(profile: np.ndarray, grid: Grid, gamma: float, sigma: float,
                    min_separation: float = MIN_SEPARATION) -> ReadoutEstimate:
    """Invert a two-peak density profile to candidate real weak values.

    Splits the axis at q = gamma/2, takes the maximum of the profile on each
    half (no sub-grid interpolation), and solves the peak ratio for A_w.
    Requires gamma/sigma >= min_separation so the cross term is small enough
    for the two-peak approximation; a missing peak (below 1e-12) means the
    profile is one-sided and A_w is exactly 0 or 1.
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    if gamma / sigma < min_separation:
        raise InterferenceTooLarge(
            f"gamma/sigma = {gamma / sigma:.3g} < {min_separation:.3g}: peaks "
            "overlap too much for the ratio readout")
    prof = np.asarray(profile, dtype=float)
    if prof.size != grid.n:
        raise ValueError(f"profile length {prof.size} does not match grid n {grid.n}")
    q = grid.points
    split = gamma / 2.0
    left = prof[q < split]
    right = prof[q > split]
    if left.size == 0 or right.size == 0:
        raise ValueError("split point falls outside the grid")
    left_peak = float(left.max())
    right_peak = float(right.max())
    bound = float(np.exp(-gamma**2 / (8.0 * sigma**2)))

    if left_peak < PEAK_FLOOR:
        # PeakNotFound on the undisplaced side: all mass moved, A_w = 1
        return ReadoutEstimate(peak_ratio=float("inf"), candidates=(1.0,),
                               interference_bound=bound, degenerate=True)
    if right_peak < PEAK_FLOOR:
        # PeakNotFound on the displaced side: nothing moved, A_w = 0
        return ReadoutEstimate(peak_ratio=0.0, candidates=(0.0,),
                               interference_bound=bound, degenerate=True)

    ratio = right_peak / left_peak
    root = np.sqrt(ratio)
    candidates = [root / (1.0 + root)]
    if root != 1.0:
        candidates.append(-root / (1.0 - root))
    return ReadoutEstimate(peak_ratio=float(ratio),
                           candidates=tuple(float(c) for c in candidates),
                           interference_bound=bound)
