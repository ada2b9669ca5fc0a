"""Flat key-value run configuration: parsing, validation, emission.

The document format is deliberately plain so configs can be written by hand
and echoed verbatim into CSV headers::

    # comment
    model.kind = qrm
    model.mode_frequency = 3141.5926535897933
    model.qubit_frequencies = 3141.5926535897933
    model.couplings = 157.07963267948966
    bath.gamma = 0.5
    bath.temperature = 5e-09
    grid.t_end = 0.06
    grid.n_samples = 601

Exactly one of the direct-model route (``model.mode_frequency`` +
``model.couplings``) and the condensate route (``condensate.*``, mapped to a
model through the platform arithmetic) must be present.  Unknown keys are
rejected.  ``emit_config(parse_config(text))`` re-parses to an equal
RunConfig, with every default filled in explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynamics import BathSpec, TimeGrid
from .errors import ConfigError, MappingError, ModelError
from .mapping import CondensateParams, derive_platform
from .models import ModelKind, ModelSpec

DEFAULT_CUTOFF_SINGLE = 100
DEFAULT_CUTOFF_MULTI = 40

_MODEL_KEYS = {"model.kind", "model.mode_frequency", "model.qubit_frequencies",
               "model.couplings"}
_CONDENSATE_KEYS = {
    "condensate.atom_mass": "atom_mass",
    "condensate.scattering_aa": "scattering_aa",
    "condensate.scattering_ab": "scattering_ab",
    "condensate.density": "density",
    "condensate.box_length": "box_length",
    "condensate.radial_length": "radial_length",
}
_OTHER_KEYS = {
    "bath.gamma", "bath.temperature",
    "grid.t_start", "grid.t_end", "grid.n_samples", "grid.step",
    "initial.qubits", "initial.mode_temperature",
    "fock_cutoff", "output.label",
    "check.cutoff", "check.step_halving",
}
_KNOWN_KEYS = _MODEL_KEYS | set(_CONDENSATE_KEYS) | _OTHER_KEYS


@dataclass
class RunConfig:
    """Everything one simulation run needs, after validation."""

    kind: ModelKind
    model: ModelSpec | None
    condensate: CondensateParams | None
    qubit_frequencies: tuple[float, ...]
    bath: BathSpec
    grid: TimeGrid
    step: float | None
    initial_qubits: tuple[str, ...]
    mode_temperature: float
    fock_cutoff: int
    label: str
    check_cutoff: bool
    check_step_halving: bool

    @property
    def n_qubits(self) -> int:
        return len(self.qubit_frequencies)

    def resolved_model(self) -> ModelSpec:
        """The ModelSpec actually simulated (mapping the condensate route)."""
        if self.model is not None:
            return self.model
        platform = derive_platform(self.condensate, self.bath.temperature)
        return ModelSpec(
            self.kind,
            platform.mode_frequency,
            self.qubit_frequencies,
            (platform.coupling,) * self.n_qubits,
        )


def _parse_lines(text: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ConfigError(f"line {lineno}: empty key or value in {raw!r}")
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in pairs:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = value
    return pairs


def _get_float(pairs, key, default=None):
    if key not in pairs:
        if default is None:
            raise ConfigError(f"missing required key {key!r}")
        return default
    try:
        return float(pairs[key])
    except ValueError:
        raise ConfigError(f"key {key!r}: not a number: {pairs[key]!r}") from None


def _get_int(pairs, key, default=None):
    if key not in pairs:
        if default is None:
            raise ConfigError(f"missing required key {key!r}")
        return default
    try:
        return int(pairs[key])
    except ValueError:
        raise ConfigError(f"key {key!r}: not an integer: {pairs[key]!r}") from None


def _get_bool(pairs, key, default=False):
    if key not in pairs:
        return default
    value = pairs[key].lower()
    if value not in ("true", "false"):
        raise ConfigError(f"key {key!r}: expected true/false, got {pairs[key]!r}")
    return value == "true"


def _get_float_list(pairs, key):
    if key not in pairs:
        raise ConfigError(f"missing required key {key!r}")
    try:
        return tuple(float(part) for part in pairs[key].split(","))
    except ValueError:
        raise ConfigError(f"key {key!r}: not a number list: {pairs[key]!r}") from None


def parse_config(text: str) -> RunConfig:
    """Parse and validate a config document; defaults are filled in."""
    pairs = _parse_lines(text)

    if "model.kind" not in pairs:
        raise ConfigError("missing required key 'model.kind'")
    try:
        kind = ModelKind(pairs["model.kind"])
    except ValueError:
        valid = ", ".join(k.value for k in ModelKind)
        raise ConfigError(
            f"key 'model.kind': unknown kind {pairs['model.kind']!r} "
            f"(valid: {valid})"
        ) from None

    qubit_frequencies = _get_float_list(pairs, "model.qubit_frequencies")
    n_qubits = len(qubit_frequencies)

    direct = "model.mode_frequency" in pairs or "model.couplings" in pairs
    mapped = any(k in pairs for k in _CONDENSATE_KEYS)
    if direct and mapped:
        raise ConfigError(
            "config mixes the direct model route (model.mode_frequency / "
            "model.couplings) with the condensate route (condensate.*); "
            "exactly one must be used"
        )
    if not direct and not mapped:
        raise ConfigError(
            "config needs either model.mode_frequency + model.couplings "
            "or a condensate.* block"
        )

    bath = _build(BathSpec,
                  gamma=_get_float(pairs, "bath.gamma", 0.0),
                  temperature=_get_float(pairs, "bath.temperature", 0.0))

    model = None
    condensate = None
    if direct:
        mode_frequency = _get_float(pairs, "model.mode_frequency")
        couplings = _get_float_list(pairs, "model.couplings")
        model = _build(ModelSpec, kind=kind, mode_frequency=mode_frequency,
                       qubit_frequencies=qubit_frequencies, couplings=couplings)
    else:
        kwargs = {}
        for key, field in _CONDENSATE_KEYS.items():
            if field == "radial_length":
                value = _get_float(pairs, key, 0.0)
                kwargs[field] = value if value else None
            else:
                kwargs[field] = _get_float(pairs, key)
        condensate = _build(CondensateParams, **kwargs)

    grid = _build(TimeGrid,
                  t_start=_get_float(pairs, "grid.t_start", 0.0),
                  t_end=_get_float(pairs, "grid.t_end"),
                  n_samples=_get_int(pairs, "grid.n_samples"))
    step = _get_float(pairs, "grid.step", 0.0) or None
    if step is not None and step <= 0:
        raise ConfigError(f"key 'grid.step': must be positive, got {step}")

    if "initial.qubits" in pairs:
        initial_qubits = tuple(s.strip() for s in pairs["initial.qubits"].split(","))
    else:
        initial_qubits = ("down",) * n_qubits
    if len(initial_qubits) != n_qubits:
        raise ConfigError(
            f"initial.qubits lists {len(initial_qubits)} states for "
            f"{n_qubits} qubits"
        )
    for state in initial_qubits:
        if state not in ("up", "down"):
            raise ConfigError(
                f"initial.qubits entries must be up/down, got {state!r}"
            )

    mode_temperature = _get_float(pairs, "initial.mode_temperature", 0.0)
    if mode_temperature < 0:
        raise ConfigError("initial.mode_temperature must be >= 0")

    default_cutoff = DEFAULT_CUTOFF_SINGLE if n_qubits == 1 else DEFAULT_CUTOFF_MULTI
    fock_cutoff = _get_int(pairs, "fock_cutoff", default_cutoff)
    if fock_cutoff < 2:
        raise ConfigError(f"fock_cutoff must be >= 2, got {fock_cutoff}")

    return RunConfig(
        kind=kind,
        model=model,
        condensate=condensate,
        qubit_frequencies=qubit_frequencies,
        bath=bath,
        grid=grid,
        step=step,
        initial_qubits=initial_qubits,
        mode_temperature=mode_temperature,
        fock_cutoff=fock_cutoff,
        label=pairs.get("output.label", "run"),
        check_cutoff=_get_bool(pairs, "check.cutoff"),
        check_step_halving=_get_bool(pairs, "check.step_halving"),
    )


def _build(cls, **kwargs):
    """Construct a validated domain object, folding its error into ConfigError."""
    try:
        return cls(**kwargs)
    except (ValueError, ModelError, MappingError) as exc:
        raise ConfigError(str(exc)) from None


def _fmt(value: float) -> str:
    return repr(float(value))


def emit_config(cfg: RunConfig) -> str:
    """Render a RunConfig back to a document (all defaults explicit)."""
    lines = [f"model.kind = {cfg.kind.value}"]
    lines.append(
        "model.qubit_frequencies = "
        + ", ".join(_fmt(w) for w in cfg.qubit_frequencies)
    )
    if cfg.model is not None:
        lines.append(f"model.mode_frequency = {_fmt(cfg.model.mode_frequency)}")
        lines.append(
            "model.couplings = " + ", ".join(_fmt(g) for g in cfg.model.couplings)
        )
    else:
        c = cfg.condensate
        lines.append(f"condensate.atom_mass = {_fmt(c.atom_mass)}")
        lines.append(f"condensate.scattering_aa = {_fmt(c.scattering_aa)}")
        lines.append(f"condensate.scattering_ab = {_fmt(c.scattering_ab)}")
        lines.append(f"condensate.density = {_fmt(c.density)}")
        lines.append(f"condensate.box_length = {_fmt(c.box_length)}")
        if c.radial_length is not None:
            lines.append(f"condensate.radial_length = {_fmt(c.radial_length)}")
    lines.append(f"bath.gamma = {_fmt(cfg.bath.gamma)}")
    lines.append(f"bath.temperature = {_fmt(cfg.bath.temperature)}")
    lines.append(f"grid.t_start = {_fmt(cfg.grid.t_start)}")
    lines.append(f"grid.t_end = {_fmt(cfg.grid.t_end)}")
    lines.append(f"grid.n_samples = {cfg.grid.n_samples}")
    if cfg.step is not None:
        lines.append(f"grid.step = {_fmt(cfg.step)}")
    lines.append("initial.qubits = " + ", ".join(cfg.initial_qubits))
    lines.append(f"initial.mode_temperature = {_fmt(cfg.mode_temperature)}")
    lines.append(f"fock_cutoff = {cfg.fock_cutoff}")
    lines.append(f"output.label = {cfg.label}")
    lines.append(f"check.cutoff = {str(cfg.check_cutoff).lower()}")
    lines.append(f"check.step_halving = {str(cfg.check_step_halving).lower()}")
    return "\n".join(lines) + "\n"


def config_echo(cfg: RunConfig) -> str:
    """Single-line form of the emitted document (CSV header payload)."""
    return "; ".join(
        line for line in emit_config(cfg).splitlines() if line.strip()
    )
