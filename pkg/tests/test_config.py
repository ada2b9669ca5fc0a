"""Config document parsing, defaulting, emission, and validation."""

import math

import pytest

from aqdsim.config import config_echo, emit_config, parse_config
from aqdsim.errors import ConfigError
from aqdsim.models import ModelKind

MINIMAL = """\
model.kind = qrm
model.mode_frequency = 3141.592653589793
model.qubit_frequencies = 3141.592653589793
model.couplings = 157.07963267948966
grid.t_end = 0.06
grid.n_samples = 601
"""


def test_minimal_document_gets_documented_defaults():
    cfg = parse_config(MINIMAL)
    assert cfg.kind is ModelKind.QRM
    assert cfg.fock_cutoff == 100
    assert cfg.bath.gamma == 0.0
    assert cfg.bath.temperature == 0.0
    assert cfg.initial_qubits == ("down",)
    assert cfg.mode_temperature == 0.0
    assert cfg.grid.t_start == 0.0
    assert cfg.label == "run"
    assert cfg.step is None
    assert not cfg.check_cutoff and not cfg.check_step_halving


def test_two_qubit_default_cutoff_is_smaller():
    text = """\
model.kind = dicke
model.mode_frequency = 6283.185307179587
model.qubit_frequencies = 628.3, 628.3
model.couplings = 339.2, 339.2
grid.t_end = 0.17
grid.n_samples = 681
"""
    cfg = parse_config(text)
    assert cfg.n_qubits == 2
    assert cfg.fock_cutoff == 40
    assert cfg.initial_qubits == ("down", "down")


def test_unknown_key_rejected_with_line():
    with pytest.raises(ConfigError, match="line 2.*model.flavor"):
        parse_config("model.kind = qrm\nmodel.flavor = vanilla\n")


def test_duplicate_key_rejected():
    with pytest.raises(ConfigError, match="duplicate"):
        parse_config(MINIMAL + "grid.t_end = 0.01\n")


def test_malformed_line_rejected():
    with pytest.raises(ConfigError, match="line 1"):
        parse_config("just some words\n")


def test_bad_number_names_key():
    bad = MINIMAL.replace("0.06", "sixty")
    with pytest.raises(ConfigError, match="grid.t_end"):
        parse_config(bad)


def test_unknown_model_kind_lists_valid_ones():
    bad = MINIMAL.replace("= qrm", "= rabi")
    with pytest.raises(ConfigError, match="sw-effective"):
        parse_config(bad)


def test_both_routes_rejected():
    text = MINIMAL + "condensate.atom_mass = 1.44e-25\n"
    with pytest.raises(ConfigError, match="exactly one"):
        parse_config(text)


def test_neither_route_rejected():
    text = """\
model.kind = qrm
model.qubit_frequencies = 3141.59
grid.t_end = 0.06
grid.n_samples = 601
"""
    with pytest.raises(ConfigError, match="condensate"):
        parse_config(text)


def test_initial_qubit_count_must_match():
    text = MINIMAL + "initial.qubits = up, down\n"
    with pytest.raises(ConfigError, match="initial.qubits"):
        parse_config(text)


def test_initial_qubit_word_validated():
    text = MINIMAL + "initial.qubits = sideways\n"
    with pytest.raises(ConfigError, match="sideways"):
        parse_config(text)


def test_grid_validation_becomes_config_error():
    bad = MINIMAL.replace("grid.t_end = 0.06", "grid.t_end = -1.0")
    with pytest.raises(ConfigError, match="t_end"):
        parse_config(bad)


def test_bool_keys_validated():
    text = MINIMAL + "check.cutoff = yes\n"
    with pytest.raises(ConfigError, match="true/false"):
        parse_config(text)


def test_emit_parse_round_trip_full_featured():
    text = """\
# two dots, effective model, everything explicit
model.kind = sw-effective
model.mode_frequency = 6283.185307179587
model.qubit_frequencies = 628.3185307179587, 628.3185307179587
model.couplings = 339.29200658769764, 339.29200658769764
bath.gamma = 1.0
bath.temperature = 5e-09
grid.t_start = 0.0
grid.t_end = 0.17
grid.n_samples = 681
grid.step = 3.2e-06
initial.qubits = up, down
initial.mode_temperature = 5e-09
fock_cutoff = 40
output.label = pair_demo
check.cutoff = true
check.step_halving = false
"""
    cfg = parse_config(text)
    assert parse_config(emit_config(cfg)) == cfg


def test_emit_parse_round_trip_condensate_route():
    text = """\
model.kind = qrm
model.qubit_frequencies = 3141.592653589793
condensate.atom_mass = 1.4432e-25
condensate.scattering_aa = 5.45e-09
condensate.scattering_ab = 3.0e-08
condensate.density = 2.76e21
condensate.box_length = 1e-05
bath.temperature = 1e-08
grid.t_end = 0.06
grid.n_samples = 601
"""
    cfg = parse_config(text)
    assert cfg.condensate is not None
    assert cfg.model is None
    assert parse_config(emit_config(cfg)) == cfg


def test_condensate_route_resolves_reference_mode():
    # the 10 um box with 10 mm/s sound speed: mode at 2 pi x 500 rad/s
    text = """\
model.kind = qrm
model.qubit_frequencies = 3141.592653589793
condensate.atom_mass = 1.4432e-25
condensate.scattering_aa = 5.45e-09
condensate.scattering_ab = 3e-08
condensate.density = {density}
condensate.box_length = 1e-05
grid.t_end = 0.06
grid.n_samples = 601
"""
    # density chosen so rho g_aa / m = (10 mm/s)^2 exactly
    from aqdsim.mapping import interaction_strength

    g_aa = interaction_strength(5.45e-09, 1.4432e-25)
    density = (10e-3) ** 2 * 1.4432e-25 / g_aa
    cfg = parse_config(text.format(density=repr(density)))
    model = cfg.resolved_model()
    assert model.mode_frequency == math.pi * 10e-3 / 1e-05
    assert model.couplings[0] > 0


def test_config_echo_is_single_line():
    echo = config_echo(parse_config(MINIMAL))
    assert "\n" not in echo
    assert echo.startswith("model.kind = qrm; ")
    assert "fock_cutoff = 100" in echo
