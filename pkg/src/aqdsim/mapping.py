"""Map condensate/dot experimental parameters onto model parameters.

The chain is: scattering lengths -> contact interaction strengths ->
speed of sound -> lowest box-mode frequency -> dot-mode coupling. A
quasi-one-dimensional geometry (radial confinement length present) rescales
the interaction strengths by 1/L_r^2 and replaces the mode volume by the box
length, which enhances the coupling by ((L_r/L)^2)^(-1/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .constants import HBAR
from .errors import MappingError
from .models import ModelKind, ModelSpec
from .operators import bose_occupation

__all__ = [
    "CondensateParams",
    "DerivedPlatform",
    "QuenchReport",
    "interaction_strength",
    "sound_speed",
    "mode_frequency",
    "coupling_strength",
    "thermal_occupation",
    "regime_classifier",
    "quench_feasibility",
    "derive_platform",
]

# g / mode_frequency thresholds separating the coupling regimes.
REGIME_THRESHOLDS = {"usc": 0.1, "dsc": 1.0}

# A coupling quench counts as instantaneous when it takes at most this
# fraction of one mode period (tie-break: inclusive at the boundary).
QUENCH_INSTANT_FRACTION = 0.01


@dataclass(frozen=True)
class CondensateParams:
    """Experimental knobs of the condensate + dot platform (SI units).

    ``raman_rabi`` / ``raman_detuning`` describe the trapping drive; they are
    carried as metadata only and never enter the derived model.
    """

    atom_mass: float
    scattering_aa: float
    scattering_ab: float
    density: float
    box_length: float
    radial_length: Optional[float] = None
    raman_rabi: Optional[float] = None
    raman_detuning: Optional[float] = None

    def __post_init__(self):
        if self.atom_mass <= 0:
            raise MappingError(f"atom_mass must be > 0, got {self.atom_mass}")
        for name in ("scattering_aa", "density", "box_length"):
            if getattr(self, name) <= 0:
                raise MappingError(f"{name} must be > 0, got {getattr(self, name)}")
        if self.radial_length is not None:
            if self.radial_length <= 0:
                raise MappingError("radial_length must be > 0 when present")
            if self.radial_length >= self.box_length:
                raise MappingError("radial_length must be smaller than box_length")

    @property
    def volume(self) -> float:
        """Mode volume V = L^3 for the 3D box."""
        return self.box_length**3

    @property
    def quasi_1d(self) -> bool:
        return self.radial_length is not None

    @property
    def aspect_parameter(self) -> Optional[float]:
        """(L_r / L)^2, the squared aspect ratio of the quasi-1D box."""
        if self.radial_length is None:
            return None
        return (self.radial_length / self.box_length) ** 2


@dataclass(frozen=True)
class DerivedPlatform:
    """Everything the mapping derives, for reports and model construction."""

    interaction_aa: float  # J m^3
    interaction_ab: float  # J m^3
    sound_speed: float  # m/s
    mode_frequency: float  # rad/s
    coupling: float  # rad/s
    normalization: float  # hbar / (2 V g_aa), mode amplitude normalization
    thermal_occupation: float  # nbar at the reported temperature
    temperature: float  # K, the temperature nbar was evaluated at
    density: float  # m^-3, echoed reconstruction assumption
    volume: float  # m^3, echoed reconstruction assumption
    quasi_1d: bool
    enhancement_1d: Optional[float]  # ((L_r/L)^2)^(-1/2) when quasi-1D

    def to_model_spec(
        self, kind: ModelKind | str, qubit_frequency: float, n_qubits: int = 1
    ) -> ModelSpec:
        """Build a ModelSpec with the derived mode frequency and coupling.

        The qubit splitting is a direct experimental input (set by the drive),
        so it is passed in rather than derived.
        """
        return ModelSpec(
            ModelKind(kind),
            self.mode_frequency,
            (qubit_frequency,) * n_qubits,
            (self.coupling,) * n_qubits,
        )


def interaction_strength(scattering_length: float, mass: float) -> float:
    """Contact interaction g = 4 pi hbar^2 a / m (J m^3)."""
    if mass <= 0:
        raise MappingError(f"mass must be > 0, got {mass}")
    return 4.0 * math.pi * HBAR**2 * scattering_length / mass


def sound_speed(params: CondensateParams) -> float:
    """Speed of sound from m v^2 = rho g_aa."""
    g_aa = interaction_strength(params.scattering_aa, params.atom_mass)
    return math.sqrt(params.density * g_aa / params.atom_mass)


def mode_frequency(speed: float, box_length: float) -> float:
    """Lowest hard-wall mode of the linear phonon branch: pi v / L (rad/s)."""
    if speed <= 0 or box_length <= 0:
        raise MappingError("speed and box_length must be > 0")
    return math.pi * speed / box_length


def coupling_strength(params: CondensateParams, mode_freq: float) -> float:
    """Dot-mode coupling sqrt(w / (2 hbar V g_aa)) (g_ab - g_aa), rad/s.

    Sign follows the sign of (a_ab - a_aa); the quasi-1D geometry uses the
    box length as the mode volume and interaction strengths divided by
    L_r^2.
    """
    if mode_freq <= 0:
        raise MappingError(f"mode_freq must be > 0, got {mode_freq}")
    g_aa = interaction_strength(params.scattering_aa, params.atom_mass)
    g_ab = interaction_strength(params.scattering_ab, params.atom_mass)
    if params.quasi_1d:
        lr2 = params.radial_length**2
        g_aa /= lr2
        g_ab /= lr2
        volume = params.box_length
    else:
        volume = params.volume
    return math.sqrt(mode_freq / (2.0 * HBAR * volume * g_aa)) * (g_ab - g_aa)


def thermal_occupation(omega: float, temperature: float) -> float:
    """Bose occupation 1/(exp(hbar w / kB T) - 1); 0 at T = 0."""
    return bose_occupation(omega, temperature)


def regime_classifier(
    spec: ModelSpec,
    usc_threshold: float = REGIME_THRESHOLDS["usc"],
    dsc_threshold: float = REGIME_THRESHOLDS["dsc"],
) -> str:
    """'SC', 'USC' or 'DSC' by max |g| / mode_frequency.

    Defaults: SC below 0.1, USC in [0.1, 1), DSC at or above 1.
    """
    ratio = max(abs(g) for g in spec.couplings) / spec.mode_frequency
    if ratio < usc_threshold:
        return "SC"
    if ratio < dsc_threshold:
        return "USC"
    return "DSC"


@dataclass(frozen=True)
class QuenchReport:
    g_before: float
    g_after: float
    quench_time: float
    mode_period: float
    ratio: float  # quench_time / mode_period
    instantaneous: bool
    message: str


def quench_feasibility(
    g_before: float, g_after: float, quench_time: float, spec: ModelSpec
) -> QuenchReport:
    """Check a coupling quench against the sudden-switch criterion.

    Instantaneous means quench_time <= 0.01 x (2 pi / mode_frequency); the
    boundary itself counts as instantaneous (inclusive tie-break).
    """
    if quench_time <= 0:
        raise MappingError(f"quench_time must be > 0, got {quench_time}")
    period = 2.0 * math.pi / spec.mode_frequency
    ratio = quench_time / period
    instantaneous = ratio <= QUENCH_INSTANT_FRACTION
    if instantaneous:
        message = (
            f"quench {g_before:g} -> {g_after:g} rad/s over {quench_time:g} s is "
            f"effectively instantaneous ({ratio:.3g} of a mode period)"
        )
    else:
        message = (
            f"warning: quench takes {ratio:.3g} mode periods "
            f"(> {QUENCH_INSTANT_FRACTION:g}); sudden-switch dynamics not guaranteed"
        )
    return QuenchReport(
        g_before, g_after, quench_time, period, ratio, instantaneous, message
    )


def derive_platform(params: CondensateParams, temperature: float = 0.0) -> DerivedPlatform:
    """Run the full mapping chain; nbar is evaluated at ``temperature``."""
    g_aa = interaction_strength(params.scattering_aa, params.atom_mass)
    g_ab = interaction_strength(params.scattering_ab, params.atom_mass)
    v = sound_speed(params)
    wf = mode_frequency(v, params.box_length)
    g = coupling_strength(params, wf)
    if params.quasi_1d:
        enhancement = params.aspect_parameter ** -0.5
        volume = params.box_length
        norm = HBAR / (2.0 * volume * (g_aa / params.radial_length**2))
    else:
        enhancement = None
        volume = params.volume
        norm = HBAR / (2.0 * volume * g_aa)
    return DerivedPlatform(
        interaction_aa=g_aa,
        interaction_ab=g_ab,
        sound_speed=v,
        mode_frequency=wf,
        coupling=g,
        normalization=norm,
        thermal_occupation=thermal_occupation(wf, temperature),
        temperature=temperature,
        density=params.density,
        volume=volume,
        quasi_1d=params.quasi_1d,
        enhancement_1d=enhancement,
    )
