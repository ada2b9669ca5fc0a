"""Dense operator algebra on a fixed qubits-plus-mode Hilbert space.

Conventions used throughout the package:

* hbar = 1; every energy is an angular frequency in rad/s.
* Tensor ordering is qubit 1 (x) ... (x) qubit L (x) mode, so a flat basis
  index is ``q * fock_cutoff + n`` for joint qubit index q and Fock index n.
* Qubit basis is {|up>, |down>} with sigma_z |up> = +|up>.
* Everything is a dense complex matrix; arrays are frozen after construction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

import numpy as np

from .constants import KB_OVER_HBAR
from .errors import HermitianError, LayoutError, StateError, TruncationWarning

__all__ = [
    "HilbertLayout",
    "Operator",
    "DensityState",
    "annihilation",
    "creation",
    "number_op",
    "pauli",
    "identity",
    "embed",
    "hermitian_eig",
    "thermal_state",
    "basis_index",
    "product_density_state",
    "mode_density",
]

_HERM_TOL = 1e-12
_TRACE_TOL = 1e-10
_EIG_TOL = 1e-10


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=complex)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class HilbertLayout:
    """Shape of the simulation Hilbert space: L qubits and one bosonic mode."""

    n_qubits: int
    fock_cutoff: int

    def __post_init__(self):
        if self.n_qubits < 0:
            raise LayoutError(f"n_qubits must be >= 0, got {self.n_qubits}")
        if self.fock_cutoff < 1:
            raise LayoutError(f"fock_cutoff must be >= 1, got {self.fock_cutoff}")

    @property
    def dim(self) -> int:
        return (2**self.n_qubits) * self.fock_cutoff

    @property
    def subsystem_dims(self) -> tuple[int, ...]:
        """Dimensions slot by slot: one entry per qubit, then the mode."""
        return (2,) * self.n_qubits + (self.fock_cutoff,)


@dataclass(frozen=True, eq=False)
class Operator:
    """A dense operator tied to a layout, with a trusted hermiticity tag."""

    layout: HilbertLayout
    matrix: np.ndarray
    hermitian: bool = False

    def __post_init__(self):
        m = _freeze(self.matrix)
        object.__setattr__(self, "matrix", m)
        if m.shape != (self.layout.dim, self.layout.dim):
            raise LayoutError(
                f"matrix shape {m.shape} does not match layout dim {self.layout.dim}"
            )
        if self.hermitian:
            scale = max(1.0, float(np.max(np.abs(m))))
            if np.max(np.abs(m - m.conj().T)) > _HERM_TOL * scale:
                raise HermitianError("operator tagged hermitian is not Hermitian")

    def dag(self) -> "Operator":
        return Operator(self.layout, self.matrix.conj().T, hermitian=self.hermitian)

    def _check(self, other: "Operator"):
        if self.layout != other.layout:
            raise LayoutError("operands live on different layouts")

    def __add__(self, other: "Operator") -> "Operator":
        self._check(other)
        return Operator(
            self.layout,
            self.matrix + other.matrix,
            hermitian=self.hermitian and other.hermitian,
        )

    def __sub__(self, other: "Operator") -> "Operator":
        self._check(other)
        return Operator(
            self.layout,
            self.matrix - other.matrix,
            hermitian=self.hermitian and other.hermitian,
        )

    def __matmul__(self, other: "Operator") -> "Operator":
        self._check(other)
        return Operator(self.layout, self.matrix @ other.matrix)

    def __mul__(self, scalar) -> "Operator":
        return Operator(
            self.layout,
            scalar * self.matrix,
            hermitian=self.hermitian and float(np.imag(scalar)) == 0.0,
        )

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class DensityState:
    """A validated density matrix: Hermitian, unit trace, positive."""

    layout: HilbertLayout
    matrix: np.ndarray

    def __post_init__(self):
        m = _freeze(self.matrix)
        object.__setattr__(self, "matrix", m)
        if m.shape != (self.layout.dim, self.layout.dim):
            raise LayoutError(
                f"matrix shape {m.shape} does not match layout dim {self.layout.dim}"
            )
        if np.max(np.abs(m - m.conj().T)) > _HERM_TOL:
            raise StateError("density matrix is not Hermitian")
        tr = np.trace(m)
        if abs(tr - 1.0) > _TRACE_TOL:
            raise StateError(f"density matrix trace {tr} is not 1")
        if np.min(np.linalg.eigvalsh(m)) < -_EIG_TOL:
            raise StateError("density matrix has a negative eigenvalue")


def annihilation(fock_cutoff: int) -> Operator:
    """Bosonic lowering operator a on the truncated Fock space.

    [a, a^dag] = 1 holds exactly on the first fock_cutoff - 1 states; the
    truncation shows up only in the last diagonal entry of the commutator.
    """
    if fock_cutoff < 2:
        raise LayoutError(f"annihilation needs fock_cutoff >= 2, got {fock_cutoff}")
    mat = np.diag(np.sqrt(np.arange(1, fock_cutoff, dtype=float)), k=1)
    return Operator(HilbertLayout(0, fock_cutoff), mat)


def creation(fock_cutoff: int) -> Operator:
    return annihilation(fock_cutoff).dag()


def number_op(fock_cutoff: int) -> Operator:
    """a'a with exact integer diagonal entries (no sqrt(n)^2 rounding)."""
    if fock_cutoff < 1:
        raise LayoutError(f"number_op needs fock_cutoff >= 1, got {fock_cutoff}")
    mat = np.diag(np.arange(fock_cutoff, dtype=float))
    return Operator(HilbertLayout(0, fock_cutoff), mat, hermitian=True)


_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "plus": np.array([[0, 1], [0, 0]], dtype=complex),  # |up><down|
    "minus": np.array([[0, 0], [1, 0]], dtype=complex),  # |down><up|
}


def pauli(which: str) -> Operator:
    """2x2 qubit block: 'x', 'y', 'z', 'plus' or 'minus'."""
    try:
        mat = _PAULI[which]
    except KeyError:
        raise LayoutError(f"unknown pauli label {which!r}") from None
    return Operator(HilbertLayout(1, 1), mat, hermitian=which in ("x", "y", "z"))


def identity(layout: HilbertLayout) -> Operator:
    return Operator(layout, np.eye(layout.dim), hermitian=True)


def embed(op: Operator, slot: int, layout: HilbertLayout) -> Operator:
    """Lift a single-subsystem operator into the full space.

    Slots 0 .. n_qubits-1 are the qubits (in tensor order); slot n_qubits is
    the mode. Identity everywhere else.
    """
    dims = layout.subsystem_dims
    if not 0 <= slot < len(dims):
        raise LayoutError(f"slot {slot} out of range for {len(dims)} subsystems")
    if op.matrix.shape[0] != dims[slot]:
        raise LayoutError(
            f"operator dim {op.matrix.shape[0]} does not fit slot {slot} "
            f"(dim {dims[slot]})"
        )
    factors = [np.eye(d, dtype=complex) for d in dims]
    factors[slot] = op.matrix
    return Operator(layout, reduce(np.kron, factors), hermitian=op.hermitian)


def hermitian_eig(op: Operator) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvector columns of a Hermitian operator."""
    if not op.hermitian:
        raise HermitianError("hermitian_eig requires an operator tagged hermitian")
    return np.linalg.eigh(op.matrix)


def bose_occupation(omega: float, temperature: float) -> float:
    """Mean thermal occupation 1/(exp(hbar w / kB T) - 1); 0 at T = 0."""
    if omega <= 0:
        raise StateError(f"omega must be > 0, got {omega}")
    if temperature < 0:
        raise StateError(f"temperature must be >= 0, got {temperature}")
    if temperature == 0.0:
        return 0.0
    return 1.0 / np.expm1(omega / (KB_OVER_HBAR * temperature))


def thermal_state(omega: float, temperature: float, fock_cutoff: int) -> DensityState:
    """Truncated Gibbs state of the mode, renormalized after truncation.

    Warns (TruncationWarning) when the discarded untruncated weight exceeds
    1e-6.
    """
    if omega <= 0:
        raise StateError(f"omega must be > 0, got {omega}")
    if temperature < 0:
        raise StateError(f"temperature must be >= 0, got {temperature}")
    layout = HilbertLayout(0, fock_cutoff)
    probs = np.zeros(fock_cutoff)
    if temperature == 0.0:
        probs[0] = 1.0
    else:
        x = np.exp(-omega / (KB_OVER_HBAR * temperature))
        lost = x**fock_cutoff
        if lost > 1e-6:
            warnings.warn(
                f"thermal_state truncation at {fock_cutoff} discards weight "
                f"{lost:.3e} (> 1e-6)",
                TruncationWarning,
                stacklevel=2,
            )
        probs = x ** np.arange(fock_cutoff)
        probs /= probs.sum()
    return DensityState(layout, np.diag(probs.astype(complex)))


def fock_state(n: int, fock_cutoff: int) -> DensityState:
    """Pure number state |n><n| of the mode."""
    if not 0 <= n < fock_cutoff:
        raise LayoutError(f"fock index {n} outside cutoff {fock_cutoff}")
    mat = np.zeros((fock_cutoff, fock_cutoff), dtype=complex)
    mat[n, n] = 1.0
    return DensityState(HilbertLayout(0, fock_cutoff), mat)


def basis_index(layout: HilbertLayout, qubit_states: Sequence[str], fock_n: int) -> int:
    """Flat index of |q1 ... qL, n> with each qubit 'up' or 'down'."""
    if len(qubit_states) != layout.n_qubits:
        raise LayoutError(
            f"got {len(qubit_states)} qubit states for {layout.n_qubits} qubits"
        )
    if not 0 <= fock_n < layout.fock_cutoff:
        raise LayoutError(f"fock index {fock_n} outside cutoff {layout.fock_cutoff}")
    q = 0
    for s in qubit_states:
        if s not in ("up", "down"):
            raise LayoutError(f"qubit state must be 'up' or 'down', got {s!r}")
        q = 2 * q + (0 if s == "up" else 1)
    return q * layout.fock_cutoff + fock_n


def product_density_state(
    qubit_states: Sequence[str], mode: DensityState, layout: HilbertLayout
) -> DensityState:
    """|q1><q1| (x) ... (x) |qL><qL| (x) rho_mode on the given layout."""
    if mode.layout.n_qubits != 0 or mode.layout.fock_cutoff != layout.fock_cutoff:
        raise LayoutError("mode state does not match the target layout")
    if len(qubit_states) != layout.n_qubits:
        raise LayoutError(
            f"got {len(qubit_states)} qubit states for {layout.n_qubits} qubits"
        )
    up = np.array([[1, 0], [0, 0]], dtype=complex)
    down = np.array([[0, 0], [0, 1]], dtype=complex)
    factors = []
    for s in qubit_states:
        if s not in ("up", "down"):
            raise LayoutError(f"qubit state must be 'up' or 'down', got {s!r}")
        factors.append(up if s == "up" else down)
    factors.append(mode.matrix)
    return DensityState(layout, reduce(np.kron, factors))


def mode_density(matrix: np.ndarray, layout: HilbertLayout) -> np.ndarray:
    """Partial trace over all qubits; returns the mode's reduced matrix."""
    q = 2**layout.n_qubits
    n = layout.fock_cutoff
    return np.einsum("qnqm->nm", matrix.reshape(q, n, q, n))
