import numpy as np
import pytest

from pointerlab import Grid, PpsEnsemble, Projector, SystemState, gaussian_pointer


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def ket0():
    return SystemState.basis(2, 0)


@pytest.fixture
def ket1():
    return SystemState.basis(2, 1)


@pytest.fixture
def proj0():
    return Projector(np.diag([1.0, 0.0]).astype(complex))


@pytest.fixture
def proj1():
    return Projector(np.diag([0.0, 1.0]).astype(complex))


@pytest.fixture
def aw_one_ensemble(ket0):
    """psi_i = psi_f = |0>, measured with |0><0|: weak value exactly 1."""
    return PpsEnsemble(ket0, ket0)


@pytest.fixture
def complex_ensemble():
    """psi_i = (|0>+|1>)/sqrt2, psi_f = (|0>+i|1>)/sqrt2: A_w = (1-i)/2 for |1><1|."""
    psi_i = SystemState(np.array([1.0, 1.0], dtype=complex) / np.sqrt(2.0))
    psi_f = SystemState(np.array([1.0, 1.0j], dtype=complex) / np.sqrt(2.0))
    return PpsEnsemble(psi_i, psi_f)


@pytest.fixture
def sym_grid():
    return Grid(-16.0, 16.0, 1024)


@pytest.fixture
def sym_gaussian(sym_grid):
    return gaussian_pointer(sym_grid, 1.0)
