"""Hamiltonian builders for L qubits coupled to one bosonic mode.

All builders return Hermitian :class:`~aqdsim.operators.Operator` instances
on a caller-supplied layout. Three microscopic models plus one effective
model are supported:

* ``jc``    -- single qubit, excitation-conserving exchange coupling
               (Omega_d/2) sigma_z + Omega_f a'a + g(sigma+ a + sigma- a')
* ``qrm``   -- single qubit, full dipole coupling g sigma_x (a + a')
* ``dicke`` -- L qubits, each with its own frequency and dipole coupling
* ``sw-effective`` -- second-order dispersive model for the Dicke case:
  qubit-state-dependent mode distortion plus a qubit-qubit exchange term.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ModelError, ResonanceError
from .operators import HilbertLayout, Operator, annihilation, embed, number_op, pauli

__all__ = [
    "ModelKind",
    "ModelSpec",
    "EffectiveCouplings",
    "build_jc",
    "build_qrm",
    "build_dicke",
    "build_sw_effective",
    "build_hamiltonian",
    "effective_couplings",
    "parity_operator",
    "total_excitation",
    "mode_displacement",
]

RESONANCE_GUARD = 1e-6


class ModelKind(str, Enum):
    JC = "jc"
    QRM = "qrm"
    DICKE = "dicke"
    SW_EFFECTIVE = "sw-effective"


@dataclass(frozen=True)
class ModelSpec:
    """Model parameters; every frequency is angular (rad/s).

    ``qubit_frequencies`` and ``couplings`` carry one entry per qubit.
    """

    kind: ModelKind
    mode_frequency: float
    qubit_frequencies: tuple[float, ...]
    couplings: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", ModelKind(self.kind))
        object.__setattr__(
            self, "qubit_frequencies", tuple(float(w) for w in self.qubit_frequencies)
        )
        object.__setattr__(self, "couplings", tuple(float(g) for g in self.couplings))
        if self.mode_frequency <= 0:
            raise ModelError(f"mode_frequency must be > 0, got {self.mode_frequency}")
        if len(self.qubit_frequencies) != len(self.couplings):
            raise ModelError(
                f"{len(self.qubit_frequencies)} qubit frequencies vs "
                f"{len(self.couplings)} couplings"
            )
        if not self.qubit_frequencies:
            raise ModelError("need at least one qubit")
        if self.kind in (ModelKind.JC, ModelKind.QRM) and self.n_qubits != 1:
            raise ModelError(f"{self.kind.value} is a single-qubit model")

    @property
    def n_qubits(self) -> int:
        return len(self.qubit_frequencies)

    def frequency_scale(self) -> float:
        """max(mode frequency, qubit frequencies, |couplings|)."""
        return max(
            self.mode_frequency,
            *(abs(w) for w in self.qubit_frequencies),
            *(abs(g) for g in self.couplings),
        )


@dataclass(frozen=True, eq=False)
class EffectiveCouplings:
    """Second-order dispersive quantities for a Dicke-type model.

    detuning[n]       = qubit_n frequency - mode frequency
    sum_frequency[n]  = qubit_n frequency + mode frequency
    dispersive_shift[n] = (g_n^2 / 2)(1/detuning + 1/sum_frequency), the
                        coefficient of (a + a')^2 sigma_z_n
    exchange[n, m]    = g_n g_m (1/detuning_n + 1/detuning_m
                        - 1/sum_frequency_n - 1/sum_frequency_m)
    """

    detuning: tuple[float, ...]
    sum_frequency: tuple[float, ...]
    dispersive_shift: tuple[float, ...]
    exchange: np.ndarray

    def __post_init__(self):
        ex = np.asarray(self.exchange, dtype=float)
        ex.flags.writeable = False
        object.__setattr__(self, "exchange", ex)


def _check_layout(spec: ModelSpec, layout: HilbertLayout):
    if layout.n_qubits != spec.n_qubits:
        raise ModelError(
            f"layout has {layout.n_qubits} qubits but the model needs {spec.n_qubits}"
        )
    if layout.fock_cutoff < 2:
        raise ModelError("model builders need fock_cutoff >= 2")


def _free_part(spec: ModelSpec, layout: HilbertLayout) -> np.ndarray:
    """Omega_f a'a + sum_n (Omega_dn / 2) sigma_z_n."""
    h = spec.mode_frequency * embed(
        number_op(layout.fock_cutoff), layout.n_qubits, layout
    ).matrix
    for n, w in enumerate(spec.qubit_frequencies):
        h = h + 0.5 * w * embed(pauli("z"), n, layout).matrix
    return h


def mode_displacement(layout: HilbertLayout) -> Operator:
    """(a + a') embedded in the full space; the bath couples through this."""
    a = annihilation(layout.fock_cutoff)
    return Operator(layout, embed(a + a.dag(), layout.n_qubits, layout).matrix, hermitian=True)


def build_jc(spec: ModelSpec, layout: HilbertLayout) -> Operator:
    """Single-qubit exchange-coupling model; conserves a'a + sigma+ sigma-."""
    if spec.kind is not ModelKind.JC:
        raise ModelError(f"build_jc got kind {spec.kind.value!r}")
    _check_layout(spec, layout)
    a = annihilation(layout.fock_cutoff)
    g = spec.couplings[0]
    h = _free_part(spec, layout)
    h = h + g * (
        embed(pauli("plus"), 0, layout).matrix @ embed(a, 1, layout).matrix
        + embed(pauli("minus"), 0, layout).matrix @ embed(a.dag(), 1, layout).matrix
    )
    return Operator(layout, h, hermitian=True)


def build_qrm(spec: ModelSpec, layout: HilbertLayout) -> Operator:
    """Single-qubit full dipole coupling g sigma_x (a + a')."""
    if spec.kind is not ModelKind.QRM:
        raise ModelError(f"build_qrm got kind {spec.kind.value!r}")
    _check_layout(spec, layout)
    h = _free_part(spec, layout)
    h = h + spec.couplings[0] * (
        embed(pauli("x"), 0, layout).matrix @ mode_displacement(layout).matrix
    )
    return Operator(layout, h, hermitian=True)


def build_dicke(spec: ModelSpec, layout: HilbertLayout) -> Operator:
    """L qubits, each dipole-coupled to the common mode."""
    if spec.kind is not ModelKind.DICKE:
        raise ModelError(f"build_dicke got kind {spec.kind.value!r}")
    _check_layout(spec, layout)
    h = _free_part(spec, layout)
    disp = mode_displacement(layout).matrix
    for n, g in enumerate(spec.couplings):
        h = h + g * (embed(pauli("x"), n, layout).matrix @ disp)
    return Operator(layout, h, hermitian=True)


def effective_couplings(
    spec: ModelSpec, resonance_guard: float = RESONANCE_GUARD
) -> EffectiveCouplings:
    """Dispersive detunings, shifts and the qubit-qubit exchange matrix.

    Refuses to expand when any |detuning| < resonance_guard * mode_frequency:
    the perturbative model is meaningless at resonance.
    """
    wf = spec.mode_frequency
    det = tuple(w - wf for w in spec.qubit_frequencies)
    sumf = tuple(w + wf for w in spec.qubit_frequencies)
    guard = resonance_guard * wf
    for n, d in enumerate(det):
        if abs(d) < guard:
            raise ResonanceError(
                f"qubit {n + 1} is within {resonance_guard:g} x mode_frequency of "
                f"resonance (detuning {d:g} rad/s); dispersive expansion invalid"
            )
    for n, s in enumerate(sumf):
        if abs(s) < guard:
            raise ResonanceError(
                f"qubit {n + 1} sum frequency {s:g} rad/s is too close to zero"
            )
    g = spec.couplings
    shift = tuple(
        0.5 * g[n] ** 2 * (1.0 / det[n] + 1.0 / sumf[n]) for n in range(spec.n_qubits)
    )
    ex = np.zeros((spec.n_qubits, spec.n_qubits))
    for n in range(spec.n_qubits):
        for m in range(spec.n_qubits):
            if n == m:
                continue
            ex[n, m] = g[n] * g[m] * (
                1.0 / det[n] + 1.0 / det[m] - 1.0 / sumf[n] - 1.0 / sumf[m]
            )
    return EffectiveCouplings(det, sumf, shift, ex)


def build_sw_effective(spec: ModelSpec, layout: HilbertLayout) -> Operator:
    """Second-order dispersive model for far-detuned qubits.

    H = Omega_f a'a + sum_n (Omega_dn/2) sigma_z_n
        + sum_n shift_n (a + a')^2 sigma_z_n
        + (1/2) sum_{n > m} exchange_nm sigma_x_n sigma_x_m

    Absolute energies carry no constant correction term, so only energy
    differences (and all dynamics) are meaningful to second order.
    """
    if spec.kind not in (ModelKind.SW_EFFECTIVE, ModelKind.DICKE):
        raise ModelError(f"build_sw_effective got kind {spec.kind.value!r}")
    _check_layout(spec, layout)
    eff = effective_couplings(spec)
    h = _free_part(spec, layout)
    disp2 = mode_displacement(layout).matrix
    disp2 = disp2 @ disp2
    for n in range(spec.n_qubits):
        h = h + eff.dispersive_shift[n] * (embed(pauli("z"), n, layout).matrix @ disp2)
    for n in range(spec.n_qubits):
        for m in range(n):
            h = h + 0.5 * eff.exchange[n, m] * (
                embed(pauli("x"), n, layout).matrix @ embed(pauli("x"), m, layout).matrix
            )
    return Operator(layout, h, hermitian=True)


def build_hamiltonian(spec: ModelSpec, layout: HilbertLayout) -> Operator:
    """Dispatch on spec.kind."""
    builder = {
        ModelKind.JC: build_jc,
        ModelKind.QRM: build_qrm,
        ModelKind.DICKE: build_dicke,
        ModelKind.SW_EFFECTIVE: build_sw_effective,
    }[spec.kind]
    return builder(spec, layout)


def parity_operator(layout: HilbertLayout) -> Operator:
    """Conserved Z2 parity: prod_n (-sigma_z_n) (x) exp(i pi a'a).

    Diagonal with entries +-1; |down..., 0> has parity +1 for one qubit.
    """
    if layout.n_qubits < 1:
        raise ModelError("parity needs at least one qubit")
    p = np.ones(1)
    for _ in range(layout.n_qubits):
        p = np.kron(p, np.array([-1.0, 1.0]))  # -sigma_z diagonal
    p = np.kron(p, (-1.0) ** np.arange(layout.fock_cutoff))
    return Operator(layout, np.diag(p.astype(complex)), hermitian=True)


def total_excitation(layout: HilbertLayout) -> Operator:
    """a'a + sum_n sigma+_n sigma-_n; conserved by the jc model."""
    n_op = embed(number_op(layout.fock_cutoff), layout.n_qubits, layout).matrix
    for n in range(layout.n_qubits):
        n_op = n_op + embed(
            Operator(HilbertLayout(1, 1), np.diag([1.0, 0.0]).astype(complex), hermitian=True),
            n,
            layout,
        ).matrix
    return Operator(layout, n_op, hermitian=True)
