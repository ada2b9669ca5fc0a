"""Canned run configurations for the figure scenarios.

Every preset returns a list of RunConfigs, one per curve, labelled
``<name>_1 ... <name>_3`` in legend order (the zero-temperature, zero-decay
curve first) or ``<name>_full`` / ``<name>_effective`` for the two-qubit
comparisons.  Time spans are documented choices: the single-qubit scans
cover three Rabi (or revival) periods, the two-qubit scans two exchange
periods of the dispersive coupling.
"""

from __future__ import annotations

import math

from .config import RunConfig
from .dynamics import BathSpec, TimeGrid
from .errors import ConfigError
from .models import ModelKind, ModelSpec

MODE_FREQ_SINGLE = 2 * math.pi * 500.0  # rad/s, the reference box mode
MODE_FREQ_TWO = 2 * math.pi * 1000.0

# (temperature K, gamma 1/s) per curve, in caption legend order
_BATH_CURVES_MAIN = ((0.0, 0.0), (5e-9, 0.5), (10e-9, 1.0))
_BATH_CURVES_REVIVAL = ((0.0, 0.0), (10e-9, 1.0), (20e-9, 2.0))


def _single_qubit_configs(name, coupling_ratio, qubit_ratio, t_end, initial, curves):
    wf = MODE_FREQ_SINGLE
    spec = ModelSpec(
        ModelKind.QRM, wf, (qubit_ratio * wf,), (coupling_ratio * wf,)
    )
    configs = []
    for i, (temperature, gamma) in enumerate(curves, start=1):
        configs.append(
            RunConfig(
                kind=ModelKind.QRM,
                model=spec,
                condensate=None,
                qubit_frequencies=spec.qubit_frequencies,
                bath=BathSpec(gamma=gamma, temperature=temperature),
                grid=TimeGrid(0.0, t_end, 601),
                step=None,
                initial_qubits=(initial,),
                mode_temperature=0.0,
                fock_cutoff=100,
                label=f"{name}_{i}",
                check_cutoff=False,
                check_step_halving=False,
            )
        )
    return configs


def _two_qubit_configs(name, temperature):
    wf = MODE_FREQ_TWO
    qubit = (0.1 * wf, 0.1 * wf)
    coupling = (0.054 * wf, 0.054 * wf)
    configs = []
    for kind, tag in ((ModelKind.DICKE, "full"), (ModelKind.SW_EFFECTIVE, "effective")):
        configs.append(
            RunConfig(
                kind=kind,
                model=ModelSpec(kind, wf, qubit, coupling),
                condensate=None,
                qubit_frequencies=qubit,
                bath=BathSpec(gamma=1.0, temperature=temperature),
                grid=TimeGrid(0.0, 0.17, 681),
                step=None,
                initial_qubits=("up", "down"),
                mode_temperature=temperature,
                fock_cutoff=40,
                label=f"{name}_{tag}",
                check_cutoff=False,
                check_step_halving=False,
            )
        )
    return configs


def _photon_scan(name):
    wf = MODE_FREQ_SINGLE
    if name.endswith("a"):
        ratio = 0.05
        t_end = 3 * math.pi / (ratio * wf)  # three vacuum Rabi periods
    elif name.endswith("b"):
        ratio = 0.5
        t_end = 3 * math.pi / (ratio * wf)
    else:
        ratio = 1.0
        t_end = 3 * (2 * math.pi / wf)  # three mode periods
    return _single_qubit_configs(
        name, ratio, qubit_ratio=1.0, t_end=t_end, initial="up",
        curves=_BATH_CURVES_MAIN,
    )


def _revival_scan(name):
    wf = MODE_FREQ_SINGLE
    return _single_qubit_configs(
        name, coupling_ratio=0.8, qubit_ratio=0.1,
        t_end=3 * (2 * math.pi / wf), initial="down",
        curves=_BATH_CURVES_REVIVAL,
    )


_PRESETS = {
    "fig2a": _photon_scan,
    "fig2b": _photon_scan,
    "fig2c": _photon_scan,
    "fig3a": _photon_scan,
    "fig3b": _photon_scan,
    "fig3c": _photon_scan,
    "fig4": _revival_scan,
    "fig5a": lambda name: _two_qubit_configs(name, 5e-9),
    "fig5b": lambda name: _two_qubit_configs(name, 100e-9),
}

PRESET_NAMES = tuple(sorted(_PRESETS))


def preset(name: str) -> list[RunConfig]:
    """Run configurations for a named figure scenario, one per curve."""
    try:
        factory = _PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown preset {name!r}; valid: {', '.join(PRESET_NAMES)}"
        ) from None
    return factory(name)
