"""Scenario files: one JSON document describing a full analysis input.

Layout (complex numbers are always [re, im] pairs):

    {
      "system":  {"dim": 2,
                  "psi_i": [[1, 0], [0, 0]],
                  "psi_f": [[1, 0], [0, 0]],
                  "projector": [[[0, 0], [0, 0]],
                                [[0, 0], [1, 0]]]},
      "pointer": {"sigma": 1.0,
                  "grid": {"q_min": -16, "q_max": 16, "n": 1024}},
      "coupling": {"gamma": 2.0},          # or "gammas": [0.0, 0.5, ...]
      "hbar": 1.0,                          # optional, default 1
      "mzi": {"phi": 0.0, "port": "R6",     # only for the mzi command
              "dark_path_blocked": false}
    }

Sections are validated lazily: a command only requires the sections it uses.
Every validation failure names the offending field path; JSON syntax errors
keep their line/column. Both raise ScenarioError (CLI exit code 2).

The pointer grid is optional; when absent a default grid wide enough for
sigma and the requested couplings is constructed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .core import PpsEnsemble, Projector, SystemState
from .mzi import PORTS, MziScenario
from .pointer import Grid, PointerState, default_grid, gaussian_pointer


class ScenarioError(Exception):
    """Unparseable or invalid scenario input (CLI exit code 2)."""


def _fail(path: str, message: str):
    raise ScenarioError(f"{path}: {message}")


def _get(mapping: dict, key: str, path: str) -> Any:
    if not isinstance(mapping, dict):
        _fail(path, f"expected an object, got {type(mapping).__name__}")
    if key not in mapping:
        _fail(f"{path}.{key}", "missing required field")
    return mapping[key]


def _number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(path, f"expected a number, got {value!r}")
    return float(value)


def _complex_pair(value, path: str) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in value)):
        _fail(path, f"expected a [re, im] pair, got {value!r}")
    return complex(value[0], value[1])


def _complex_vector(value, path: str, dim: int) -> np.ndarray:
    if not isinstance(value, list):
        _fail(path, "expected a list of [re, im] pairs")
    if len(value) != dim:
        _fail(path, f"expected {dim} entries, got {len(value)}")
    return np.array([_complex_pair(v, f"{path}[{k}]") for k, v in enumerate(value)])


@dataclass
class ScenarioFile:
    """Parsed but unvalidated scenario document."""

    raw: dict
    source: str = "<scenario>"

    @classmethod
    def load(cls, path: str) -> "ScenarioFile":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        except OSError as exc:
            raise ScenarioError(f"cannot read scenario file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ScenarioError(
                f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
                f"{exc.msg}") from exc
        if not isinstance(raw, dict):
            raise ScenarioError(f"{path}: top level must be a JSON object")
        return cls(raw=raw, source=path)

    # -- section accessors -------------------------------------------------

    def hbar(self, override: float | None = None) -> float:
        if override is not None:
            return override
        if "hbar" not in self.raw:
            return 1.0
        value = _number(self.raw["hbar"], "hbar")
        if value <= 0:
            _fail("hbar", "must be positive")
        return value

    def system(self) -> tuple[SystemState, SystemState, Projector]:
        sec = _get(self.raw, "system", "scenario")
        dim_raw = _get(sec, "dim", "system")
        if isinstance(dim_raw, bool) or not isinstance(dim_raw, int) or dim_raw < 2:
            _fail("system.dim", f"expected an integer >= 2, got {dim_raw!r}")
        dim = dim_raw

        def state(key: str) -> SystemState:
            vec = _complex_vector(_get(sec, key, "system"), f"system.{key}", dim)
            try:
                return SystemState(vec)
            except ValueError as exc:
                _fail(f"system.{key}", str(exc))

        psi_i = state("psi_i")
        psi_f = state("psi_f")

        rows = _get(sec, "projector", "system")
        if not isinstance(rows, list) or len(rows) != dim:
            _fail("system.projector", f"expected {dim} rows")
        mat = np.array([_complex_vector(r, f"system.projector[{k}]", dim)
                        for k, r in enumerate(rows)])
        try:
            proj = Projector(mat)
        except ValueError as exc:
            _fail("system.projector", str(exc))
        return psi_i, psi_f, proj

    def ensemble(self) -> tuple[PpsEnsemble, Projector]:
        psi_i, psi_f, proj = self.system()
        return PpsEnsemble(psi_i, psi_f), proj

    def sigma(self) -> float:
        sec = _get(self.raw, "pointer", "scenario")
        sigma = _number(_get(sec, "sigma", "pointer"), "pointer.sigma")
        if sigma <= 0:
            _fail("pointer.sigma", "must be positive")
        return sigma

    def grid(self, gammas) -> Grid:
        sec = _get(self.raw, "pointer", "scenario")
        if "grid" not in sec:
            return default_grid(self.sigma(), gammas)
        g = sec["grid"]
        q_min = _number(_get(g, "q_min", "pointer.grid"), "pointer.grid.q_min")
        q_max = _number(_get(g, "q_max", "pointer.grid"), "pointer.grid.q_max")
        n_raw = _get(g, "n", "pointer.grid")
        if isinstance(n_raw, bool) or not isinstance(n_raw, int):
            _fail("pointer.grid.n", f"expected an integer, got {n_raw!r}")
        try:
            return Grid(q_min, q_max, n_raw)
        except ValueError as exc:
            _fail("pointer.grid", str(exc))

    def pointer(self, gammas) -> PointerState:
        return gaussian_pointer(self.grid(gammas), self.sigma())

    def gamma(self) -> float:
        sec = _get(self.raw, "coupling", "scenario")
        if "gamma" not in sec:
            _fail("coupling.gamma", "missing required field")
        return _number(sec["gamma"], "coupling.gamma")

    def gammas(self) -> list[float]:
        sec = _get(self.raw, "coupling", "scenario")
        if "gammas" in sec:
            raw = sec["gammas"]
            if not isinstance(raw, list) or not raw:
                _fail("coupling.gammas", "expected a non-empty list of numbers")
            return [_number(v, f"coupling.gammas[{k}]") for k, v in enumerate(raw)]
        if "gamma" in sec:
            return [_number(sec["gamma"], "coupling.gamma")]
        _fail("coupling", "needs either gamma or gammas")

    def mzi(self) -> MziScenario:
        sec = _get(self.raw, "mzi", "scenario")
        phi = _number(_get(sec, "phi", "mzi"), "mzi.phi")
        port = _get(sec, "port", "mzi")
        if port not in PORTS:
            _fail("mzi.port", f"expected one of {PORTS}, got {port!r}")
        blocked = _get(sec, "dark_path_blocked", "mzi")
        if not isinstance(blocked, bool):
            _fail("mzi.dark_path_blocked", f"expected true/false, got {blocked!r}")
        gammas = self.gammas()
        grid = None
        pointer_sec = self.raw.get("pointer")
        if isinstance(pointer_sec, dict) and "grid" in pointer_sec:
            grid = self.grid(gammas)
        return MziScenario(phi=phi, port=port, dark_path_blocked=blocked,
                           sigma=self.sigma(), gammas=tuple(gammas), grid=grid)
