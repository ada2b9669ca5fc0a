"""Quantum simulator for atomic quantum dots coupled to a condensate phonon mode.

Layers:

* :mod:`aqdsim.operators` -- dense operator algebra on qubits (x) mode.
* :mod:`aqdsim.models` -- Rabi / Jaynes-Cummings / multi-qubit Hamiltonians
  and the dispersive effective model.
* :mod:`aqdsim.mapping` -- condensate parameters -> model parameters.
* :mod:`aqdsim.dynamics` -- closed evolution and the dressed-state
  master equation.
* :mod:`aqdsim.config` / :mod:`aqdsim.presets` / :mod:`aqdsim.runner` /
  :mod:`aqdsim.cli` -- scenario configs, canned figure scenarios, CSV output.
"""

from .config import RunConfig, emit_config, parse_config
from .dynamics import (
    BathSpec,
    TimeGrid,
    TimeSeries,
    build_microscopic_dissipator,
    evolve_closed,
    evolve_open,
    observables,
)
from .mapping import CondensateParams, derive_platform
from .models import ModelKind, ModelSpec, build_hamiltonian
from .operators import (
    DensityState,
    HilbertLayout,
    Operator,
    annihilation,
    creation,
    embed,
    fock_state,
    hermitian_eig,
    pauli,
    thermal_state,
)
from .presets import PRESET_NAMES, preset
from .runner import execute, run

__version__ = "0.1.0"
