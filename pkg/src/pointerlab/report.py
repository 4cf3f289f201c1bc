"""Delimited output: every analysis serializes to CSV with a header row.

Numbers are printed with 12 significant digits, '.' decimal separator, no
locale involvement, '\\n' line endings; identical inputs therefore produce
byte-identical files.
"""

from __future__ import annotations

import math
from typing import IO, Iterable, Sequence

import numpy as np

from .dynamics import PersistenceRow
from .fauxqubit import OrthogonalityRow, ReadoutEstimate
from .mzi import ResponseRow
from .pointer import PointerState


def format_number(x: float) -> str:
    """12 significant digits; always carries a decimal point or exponent."""
    v = float(x)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    s = f"{v:.12g}"
    if "e" not in s and "E" not in s and "." not in s and s not in ("inf", "-inf"):
        s += ".0"
    return s


def format_complex_pair(z: complex) -> str:
    return f"{format_number(z.real)}, {format_number(z.imag)}"


def write_csv(stream: IO[str], header: Sequence[str],
              rows: Iterable[Sequence[object]]) -> None:
    stream.write(",".join(header) + "\n")
    for row in rows:
        cells = []
        for cell in row:
            if isinstance(cell, str):
                cells.append(cell)
            else:
                cells.append(format_number(cell))
        stream.write(",".join(cells) + "\n")


def write_pointer_csv(stream: IO[str], state: PointerState) -> None:
    """Columns q, re_amp, im_amp."""
    q = state.grid.points
    amps = state.amplitudes
    write_csv(stream, ("q", "re_amp", "im_amp"),
              zip(q, amps.real, amps.imag))


def write_profile_csv(stream: IO[str], state: PointerState,
                      intensity: np.ndarray) -> None:
    """Pointer CSV with the added intensity column."""
    q = state.grid.points
    amps = state.amplitudes
    write_csv(stream, ("q", "re_amp", "im_amp", "intensity"),
              zip(q, amps.real, amps.imag, intensity))


def write_persistence_csv(stream: IO[str], rows: Sequence[PersistenceRow]) -> None:
    write_csv(stream, ("gamma", "centroid", "M", "interference_coefficient"),
              ((r.gamma, r.centroid, r.M, r.interference_coefficient) for r in rows))


def write_orthogonality_csv(stream: IO[str], rows: Sequence[OrthogonalityRow]) -> None:
    write_csv(stream, ("gamma", "abs_overlap"),
              ((r.gamma, r.abs_overlap) for r in rows))


def write_response_csv(stream: IO[str], rows: Sequence[ResponseRow]) -> None:
    write_csv(stream, ("gamma", "centroid"),
              ((r.gamma, r.centroid) for r in rows))


def write_readout_csv(stream: IO[str], est: ReadoutEstimate) -> None:
    minus = format_number(est.candidates[1]) if len(est.candidates) > 1 else ""
    write_csv(stream,
              ("peak_ratio", "candidate_plus", "candidate_minus",
               "interference_bound", "degenerate"),
              [(format_number(est.peak_ratio),
                format_number(est.candidates[0]),
                minus,
                format_number(est.interference_bound),
                "1" if est.degenerate else "0")])
