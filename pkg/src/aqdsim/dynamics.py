"""Closed- and open-system time evolution for the dot-phonon models.

Closed evolution is done spectrally: diagonalize once, then apply phase
factors per sample.  Open evolution integrates a microscopic (dressed-state)
master equation with fixed-step RK4, entirely in the eigenbasis of the
Hamiltonian, where the generator is elementwise apart from population
transfer and the occasional degenerate-transition cluster.  Nothing here
ever materializes a dim^2 x dim^2 superoperator.

The dissipator follows the standard recipe for a bosonic bath with a flat
spectral density coupling to the mode quadrature (a + a^dag): every pair of
dressed levels with a positive gap contributes a downward channel at rate
gamma * |X_jk|^2 * (nbar(gap) + 1) and an upward one at gamma * |X_jk|^2 *
nbar(gap).  Transitions whose gaps agree to within ``omega_floor`` are
summed coherently into a single jump operator, which is what makes the
zero-coupling limit reduce exactly to plain photon loss.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import HermitianError, IntegrationError, LayoutError
from .models import ModelSpec, mode_displacement, parity_operator
from .operators import (
    DensityState,
    HilbertLayout,
    Operator,
    basis_index,
    bose_occupation,
    embed,
    hermitian_eig,
    number_op,
    pauli,
)

STEP_SAFETY = 50.0  # substeps per fastest period-ish timescale
TRACE_TOL = 1e-6  # per-step trace drift that aborts the integration


@dataclass(frozen=True)
class BathSpec:
    """Ohmic-flat bath parameters: decay rate (rad/s) and temperature (K)."""

    gamma: float
    temperature: float = 0.0

    def __post_init__(self):
        if self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")


@dataclass(frozen=True)
class TimeGrid:
    """Uniform sampling grid. Sample times include both endpoints."""

    t_start: float
    t_end: float
    n_samples: int

    def __post_init__(self):
        if not self.t_end > self.t_start:
            raise ValueError(
                f"t_end ({self.t_end}) must exceed t_start ({self.t_start})"
            )
        if self.n_samples < 2:
            raise ValueError(f"need at least 2 samples, got {self.n_samples}")

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_samples)

    @property
    def sample_spacing(self) -> float:
        return (self.t_end - self.t_start) / (self.n_samples - 1)


@dataclass
class TimeSeries:
    """Named real-valued columns sampled on a common time axis."""

    times: np.ndarray
    columns: dict[str, np.ndarray]
    metadata: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        if self.times.ndim != 1:
            raise ValueError("times must be one-dimensional")
        clean = {}
        for name, col in self.columns.items():
            arr = np.asarray(col, dtype=float)
            if arr.shape != self.times.shape:
                raise ValueError(
                    f"column {name!r} has length {arr.shape}, "
                    f"expected {self.times.shape}"
                )
            clean[name] = arr
        self.columns = clean

    @property
    def column_names(self) -> tuple[str, ...]:
        return tuple(self.columns)

    def __getitem__(self, name: str) -> np.ndarray:
        return self.columns[name]


def default_step(spec: ModelSpec, bath: BathSpec | None = None) -> float:
    """Integration step 1/(50 * fastest rate) used by the run pipeline."""
    scale = spec.frequency_scale()
    if bath is not None:
        scale = max(scale, bath.gamma)
    return 1.0 / (STEP_SAFETY * scale)


# ---------------------------------------------------------------------------
# closed evolution
# ---------------------------------------------------------------------------


class ClosedTrajectory:
    """Lazy unitary trajectory: states are reconstructed from phases.

    Stores the eigenbasis and a single dressed initial matrix, so memory is
    O(dim^2) regardless of how many samples are requested.
    """

    def __init__(self, layout, times, basis, energies, rho0_dressed, info=None):
        self.layout = layout
        self.times = np.asarray(times, dtype=float)
        self.basis = basis
        self.energies = energies
        self._rho0 = rho0_dressed
        self.info = dict(info or {})

    @property
    def n_samples(self) -> int:
        return self.times.size

    def _phases(self) -> np.ndarray:
        return np.exp(-1j * np.outer(self.times, self.energies))

    def expectation(self, op: Operator) -> np.ndarray:
        if op.layout != self.layout:
            raise LayoutError("observable layout does not match trajectory")
        tilde = self.basis.conj().T @ op.matrix @ self.basis
        # <O>(t) = sum_jk rho0_jk e^{-i(E_j-E_k)t} O_kj
        mixed = self._rho0 * tilde.T
        u = self._phases()
        values = np.einsum("tj,jk,tk->t", u, mixed, u.conj(), optimize=True)
        return values.real if op.hermitian else values

    def state_matrix(self, index: int) -> np.ndarray:
        u = np.exp(-1j * self.times[index] * self.energies)
        dressed = (u[:, None] * u.conj()[None, :]) * self._rho0
        return self.basis @ dressed @ self.basis.conj().T


def evolve_closed(
    hamiltonian: Operator, initial: DensityState, grid: TimeGrid
) -> ClosedTrajectory:
    """Unitary evolution of a density matrix, sampled on ``grid``.

    Diagonalizes the Hamiltonian once; each sample is then exact up to the
    eigensolve, so trace, Hermiticity and purity are preserved to roundoff.
    """
    if hamiltonian.layout != initial.layout:
        raise LayoutError("initial state layout does not match Hamiltonian")
    energies, basis = hermitian_eig(hamiltonian)
    rho0 = basis.conj().T @ initial.matrix @ basis
    rho0 = 0.5 * (rho0 + rho0.conj().T)
    return ClosedTrajectory(
        hamiltonian.layout,
        grid.times(),
        basis,
        energies,
        rho0,
        info={"method": "spectral", "dim": hamiltonian.layout.dim},
    )


# ---------------------------------------------------------------------------
# dressed-state dissipator
# ---------------------------------------------------------------------------


class _Cluster:
    """One coherently-summed jump operator between degenerate transitions.

    ``sources``/``targets`` index dressed levels; population flows
    source -> target with weight matrix W[i, i'] = rate * x_i * conj(x_i').
    """

    def __init__(self, rate, frequency, sources, targets, amplitudes):
        self.rate = float(rate)
        self.frequency = float(frequency)
        self.sources = np.asarray(sources, dtype=np.intp)
        self.targets = np.asarray(targets, dtype=np.intp)
        self.amplitudes = np.asarray(amplitudes, dtype=complex)
        self.weights = rate * np.outer(self.amplitudes, self.amplitudes.conj())
        self._tgt_ix = np.ix_(self.targets, self.targets)
        self._src_ix = np.ix_(self.sources, self.sources)
        # fancy-index += silently drops repeats, so fall back when needed
        self._safe = self.targets.size == np.unique(self.targets).size

    @property
    def size(self) -> int:
        return self.amplitudes.size

    def apply(self, rho: np.ndarray, out: np.ndarray) -> None:
        contrib = self.weights * rho[self._src_ix]
        if self._safe:
            out[self._tgt_ix] += contrib
        else:
            np.add.at(
                out, (self.targets[:, None], self.targets[None, :]), contrib
            )

    def lowering_matrix(self, dim: int) -> np.ndarray:
        """Dense jump operator (without the rate) in the dressed basis."""
        op = np.zeros((dim, dim), dtype=complex)
        np.add.at(op, (self.targets, self.sources), self.amplitudes)
        return op


class JumpChannelSet:
    """Dressed-basis description of the microscopic dissipator.

    Attributes of interest to callers:

    - ``energies`` / ``basis``: the eigendecomposition the channels refer to.
    - ``transfer``: real matrix R with R[j, k] = total population rate k -> j
      from non-degenerate channels.
    - ``decay``: vector of total outflow rates per level (column sums of R
      plus the diagonal part of every cluster's A^dag A / A A^dag).
    - ``clusters``: degenerate-transition jump operators, applied exactly.
    """

    def __init__(
        self,
        layout: HilbertLayout,
        energies: np.ndarray,
        basis: np.ndarray,
        gamma: float,
        temperature: float,
        omega_floor: float,
        rate_floor: float,
    ):
        self.layout = layout
        self.energies = energies
        self.basis = basis
        self.gamma = gamma
        self.temperature = temperature
        self.omega_floor = omega_floor
        self.rate_floor = rate_floor
        dim = layout.dim
        self.transfer = np.zeros((dim, dim))
        self.decay = np.zeros(dim)
        self.clusters: list[_Cluster] = []
        self._offdiag = None  # rare: non-diagonal anticommutator remainder
        self.n_down = 0
        self.n_up = 0

    @property
    def n_channels(self) -> int:
        return self.n_down + self.n_up

    def _absorb(self, rate, frequency, sources, targets, amps, downward):
        if len(sources) == 1:
            j, k = int(targets[0]), int(sources[0])
            r = rate * abs(amps[0]) ** 2
            self.transfer[j, k] += r
            self.decay[k] += r
        else:
            cl = _Cluster(rate, frequency, sources, targets, amps)
            self.clusters.append(cl)
            self._absorb_anticommutator(cl)
        if downward:
            self.n_down += 1
        else:
            self.n_up += 1

    def _absorb_anticommutator(self, cl: _Cluster) -> None:
        # rate * A^dag A, accumulated as a decay vector plus (rarely) a
        # dense remainder when two members share a target level.
        dim = self.layout.dim
        gram = np.zeros((dim, dim), dtype=complex)
        order = np.argsort(cl.targets, kind="stable")
        tgt = cl.targets[order]
        src = cl.sources[order]
        amp = cl.amplitudes[order]
        start = 0
        while start < tgt.size:
            stop = start
            while stop < tgt.size and tgt[stop] == tgt[start]:
                stop += 1
            idx = src[start:stop]
            block = np.outer(amp[start:stop].conj(), amp[start:stop])
            gram[np.ix_(idx, idx)] += block
            start = stop
        gram *= cl.rate
        diag = np.real(np.diagonal(gram)).copy()
        self.decay += diag
        np.fill_diagonal(gram, 0.0)
        if np.any(gram):
            if self._offdiag is None:
                self._offdiag = np.zeros((dim, dim), dtype=complex)
            self._offdiag += gram

    def channel_table(self) -> list[dict]:
        """Summary rows (kind, frequency, rate, members) for reporting."""
        rows = []
        dim = self.layout.dim
        for j in range(dim):
            for k in range(dim):
                if self.transfer[j, k] > 0.0:
                    kind = "down" if self.energies[k] > self.energies[j] else "up"
                    rows.append(
                        {
                            "kind": kind,
                            "frequency": abs(self.energies[k] - self.energies[j]),
                            "rate": self.transfer[j, k],
                            "members": 1,
                        }
                    )
        for cl in self.clusters:
            kind = "down" if self.energies[cl.sources[0]] > self.energies[cl.targets[0]] else "up"
            rows.append(
                {
                    "kind": kind,
                    "frequency": cl.frequency,
                    "rate": cl.rate,
                    "members": cl.size,
                }
            )
        rows.sort(key=lambda r: (r["frequency"], r["kind"]))
        return rows


def build_microscopic_dissipator(
    hamiltonian: Operator,
    bath: BathSpec,
    *,
    omega_floor: float | None = None,
    rate_floor: float | None = None,
) -> JumpChannelSet:
    """Construct dressed-state jump channels for a quadrature-coupled bath.

    Pairs of eigenlevels closer than ``omega_floor`` in transition frequency
    are merged into one coherent jump operator; channels weaker than
    ``rate_floor`` are dropped.  Defaults: 1e-9 x spectral span and
    1e-12 x gamma.
    """
    if not hamiltonian.hermitian:
        raise HermitianError("dissipator requires a Hermitian Hamiltonian")
    layout = hamiltonian.layout
    energies, basis = hermitian_eig(hamiltonian)
    span = float(energies[-1] - energies[0])
    if omega_floor is None:
        omega_floor = 1e-9 * span if span > 0 else 1e-9
    if rate_floor is None:
        rate_floor = 1e-12 * bath.gamma

    channels = JumpChannelSet(
        layout, energies, basis, bath.gamma, bath.temperature,
        omega_floor, rate_floor,
    )
    if bath.gamma == 0.0:
        return channels

    x_full = mode_displacement(layout).matrix
    x_dressed = basis.conj().T @ x_full @ basis

    rows, cols = np.tril_indices(layout.dim, k=-1)  # row > col: E_row >= E_col
    gaps = energies[rows] - energies[cols]
    amps = x_dressed[cols, rows]  # <low| X |high>
    keep = (gaps > omega_floor) & (np.abs(amps) > 0.0)
    gaps = gaps[keep]
    amps = amps[keep]
    hi = rows[keep]
    lo = cols[keep]

    order = np.argsort(gaps, kind="stable")
    gaps, amps, hi, lo = gaps[order], amps[order], hi[order], lo[order]

    start = 0
    n = gaps.size
    while start < n:
        stop = start
        while stop < n and gaps[stop] - gaps[start] <= omega_floor:
            stop += 1
        sel = slice(start, stop)
        freq = float(np.mean(gaps[sel]))
        nbar = bose_occupation(freq, bath.temperature)
        weight = float(np.sum(np.abs(amps[sel]) ** 2))
        rate_down = bath.gamma * (nbar + 1.0)
        rate_up = bath.gamma * nbar
        if rate_down * weight >= rate_floor:
            channels._absorb(
                rate_down, freq, hi[sel], lo[sel], amps[sel], downward=True
            )
        if rate_up > 0.0 and rate_up * weight >= rate_floor:
            channels._absorb(
                rate_up, freq, lo[sel], hi[sel], amps[sel].conj(), downward=False
            )
        start = stop
    return channels


# ---------------------------------------------------------------------------
# open evolution
# ---------------------------------------------------------------------------


class SampledTrajectory:
    """Trajectory with explicitly stored density matrices (dressed basis)."""

    def __init__(self, layout, times, basis, states_dressed, info=None):
        self.layout = layout
        self.times = np.asarray(times, dtype=float)
        self.basis = basis
        self._states = states_dressed
        self.info = dict(info or {})

    @property
    def n_samples(self) -> int:
        return self.times.size

    def expectation(self, op: Operator) -> np.ndarray:
        if op.layout != self.layout:
            raise LayoutError("observable layout does not match trajectory")
        tilde = self.basis.conj().T @ op.matrix @ self.basis
        values = np.einsum("tjk,kj->t", self._states, tilde, optimize=True)
        return values.real if op.hermitian else values

    def state_matrix(self, index: int) -> np.ndarray:
        return self.basis @ self._states[index] @ self.basis.conj().T

    def trace_error(self) -> float:
        traces = np.einsum("tjj->t", self._states)
        return float(np.max(np.abs(traces - 1.0)))


def stable_step(channels: JumpChannelSet) -> float:
    """Largest step for which RK4 stays stable on this channel set.

    Eigenvalues of the dressed-basis generator sit inside |Im| <= spectral
    span, |Re| <= 2x the largest total outflow rate; classical RK4 is stable
    out to |lambda h| ~ 2.8, so 2.5 over the combined bound leaves margin.
    The outflow term matters: thermally hot, nearly degenerate transitions
    between high-lying (unpopulated) levels can carry rates far above the
    physical timescales and would otherwise blow up the integration.
    """
    span = float(channels.energies[-1] - channels.energies[0])
    outflow = float(channels.decay.max()) if channels.decay.size else 0.0
    return 2.5 / max(span + 2.0 * outflow, 1e-300)


def evolve_open(
    hamiltonian: Operator,
    channels: JumpChannelSet,
    initial: DensityState,
    grid: TimeGrid,
    *,
    step: float | None = None,
) -> SampledTrajectory:
    """Fixed-step RK4 integration of the dressed-state master equation.

    The state is propagated in the Hamiltonian eigenbasis, where the
    coherent part and all non-degenerate dissipative terms act elementwise;
    degenerate clusters act through small gathered blocks.  After every step
    the state is re-symmetrized and its trace is checked: drift beyond
    ``TRACE_TOL`` raises IntegrationError naming the offending time.

    ``step`` is an upper bound; the actual step divides the sample spacing
    evenly.  Default is ``stable_step(channels)``; an explicit step is used
    as given, so callers pushing past the stability bound get the
    trace/divergence error instead of silent clamping.
    """
    layout = hamiltonian.layout
    if initial.layout != layout:
        raise LayoutError("initial state layout does not match Hamiltonian")
    if channels.layout != layout:
        raise LayoutError("jump channels layout does not match Hamiltonian")
    energies, basis = channels.energies, channels.basis
    check = basis.conj().T @ hamiltonian.matrix @ basis
    np.fill_diagonal(check, check.diagonal() - energies)
    scale = max(np.max(np.abs(energies)), 1.0)
    if np.max(np.abs(check)) > 1e-8 * scale:
        raise LayoutError("jump channels were built for a different Hamiltonian")

    times = grid.times()
    if step is None:
        step = min(stable_step(channels), grid.sample_spacing)
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    spacing = grid.sample_spacing
    n_sub = max(1, int(np.ceil(spacing / step - 1e-12)))
    h = spacing / n_sub

    dim = layout.dim
    delta = energies[:, None] - energies[None, :]
    half_decay = 0.5 * (channels.decay[:, None] + channels.decay[None, :])
    gen = (-1j * delta - half_decay).astype(complex)
    transfer = channels.transfer.astype(complex)
    has_transfer = bool(np.any(channels.transfer))
    clusters = channels.clusters
    offdiag = channels._offdiag
    flat_stride = dim + 1

    def rhs(rho: np.ndarray, out: np.ndarray) -> np.ndarray:
        np.multiply(gen, rho, out=out)
        if has_transfer:
            pops = rho.reshape(-1)[::flat_stride]
            out.reshape(-1)[::flat_stride] += transfer @ pops
        for cl in clusters:
            cl.apply(rho, out)
        if offdiag is not None:
            out -= 0.5 * (offdiag @ rho + rho @ offdiag)
        return out

    rho = basis.conj().T @ initial.matrix @ basis
    rho = 0.5 * (rho + rho.conj().T)
    states = np.empty((times.size, dim, dim), dtype=complex)
    states[0] = rho

    k1 = np.empty_like(rho)
    k2 = np.empty_like(rho)
    k3 = np.empty_like(rho)
    k4 = np.empty_like(rho)
    arg = np.empty_like(rho)

    for i in range(1, times.size):
        t_base = times[i - 1]
        for s in range(n_sub):
            rhs(rho, k1)
            np.multiply(k1, 0.5 * h, out=arg)
            arg += rho
            rhs(arg, k2)
            np.multiply(k2, 0.5 * h, out=arg)
            arg += rho
            rhs(arg, k3)
            np.multiply(k3, h, out=arg)
            arg += rho
            rhs(arg, k4)
            k2 += k3
            k2 *= 2.0
            k2 += k1
            k2 += k4
            k2 *= h / 6.0
            rho += k2
            np.conjugate(rho.T, out=k1)
            rho += k1
            rho *= 0.5
            trace = rho.reshape(-1)[::flat_stride].sum().real
            # inverted comparison so a nan trace also trips the guard
            if not abs(trace - 1.0) <= TRACE_TOL:
                t_bad = t_base + (s + 1) * h
                raise IntegrationError(
                    f"trace drifted to {trace:.9f} at t = {t_bad:.6e} s; "
                    f"reduce the step (currently {h:.3e} s)"
                )
            if (s % 32 == 31 or s == n_sub - 1) and not np.abs(rho).max() <= 4.0:
                t_bad = t_base + (s + 1) * h
                raise IntegrationError(
                    f"state norm diverged at t = {t_bad:.6e} s; "
                    f"reduce the step (currently {h:.3e} s)"
                )
        states[i] = rho

    info = {
        "method": "rk4-dressed",
        "step": h,
        "substeps_per_sample": n_sub,
        "n_channels": channels.n_channels,
        "dim": dim,
    }
    return SampledTrajectory(layout, times, basis, states, info)


# ---------------------------------------------------------------------------
# observables
# ---------------------------------------------------------------------------


def standard_observables(layout: HilbertLayout) -> dict[str, Operator]:
    """The column set written by the run pipeline, keyed by column name."""
    ops: dict[str, Operator] = {}
    ops["n_ph"] = embed(number_op(layout.fock_cutoff), layout.n_qubits, layout)
    if layout.n_qubits == 1:
        ops["sz"] = embed(pauli("z"), 0, layout)
    else:
        for n in range(layout.n_qubits):
            ops[f"sz_{n + 1}"] = embed(pauli("z"), n, layout)
    ops["parity"] = parity_operator(layout)
    if layout.n_qubits == 1:
        proj = np.zeros((layout.dim, layout.dim))
        idx = basis_index(layout, ("down",), 0)
        proj[idx, idx] = 1.0
        ops["p_down0"] = Operator(layout, proj, hermitian=True)
    return ops


def observables(trajectory, metadata: dict[str, str] | None = None) -> TimeSeries:
    """Evaluate the standard observable set along a trajectory."""
    ops = standard_observables(trajectory.layout)
    columns = {name: trajectory.expectation(op) for name, op in ops.items()}
    return TimeSeries(trajectory.times, columns, dict(metadata or {}))
