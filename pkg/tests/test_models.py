import numpy as np
import pytest

from aqdsim.errors import ModelError, ResonanceError
from aqdsim.models import (
    EffectiveCouplings,
    ModelKind,
    ModelSpec,
    build_dicke,
    build_hamiltonian,
    build_jc,
    build_qrm,
    build_sw_effective,
    effective_couplings,
    mode_displacement,
    parity_operator,
    total_excitation,
)
from aqdsim.operators import HilbertLayout, basis_index, hermitian_eig

WF = 2 * np.pi * 500.0


def jc_spec(g, wd=WF, wf=WF):
    return ModelSpec(ModelKind.JC, wf, (wd,), (g,))


def qrm_spec(g, wd=WF, wf=WF):
    return ModelSpec(ModelKind.QRM, wf, (wd,), (g,))


def fig5_spec(kind=ModelKind.DICKE, wf=2 * np.pi * 1000.0):
    return ModelSpec(kind, wf, (0.1 * wf, 0.1 * wf), (0.054 * wf, 0.054 * wf))


def test_model_spec_validation():
    with pytest.raises(ModelError):
        ModelSpec(ModelKind.JC, WF, (WF, WF), (1.0, 1.0))  # jc is single-qubit
    with pytest.raises(ModelError):
        ModelSpec(ModelKind.DICKE, WF, (WF, WF), (1.0,))  # length mismatch
    with pytest.raises(ModelError):
        ModelSpec(ModelKind.QRM, -1.0, (WF,), (1.0,))
    with pytest.raises(ModelError):
        ModelSpec(ModelKind.DICKE, WF, (), ())


def test_builders_reject_wrong_kind_and_layout():
    with pytest.raises(ModelError):
        build_jc(qrm_spec(1.0), HilbertLayout(1, 10))
    with pytest.raises(ModelError):
        build_qrm(jc_spec(1.0), HilbertLayout(1, 10))
    with pytest.raises(ModelError):
        build_dicke(fig5_spec(), HilbertLayout(1, 10))
    with pytest.raises(ModelError):
        build_jc(jc_spec(1.0), HilbertLayout(2, 10))


def test_all_builders_hermitian():
    lay1 = HilbertLayout(1, 12)
    lay2 = HilbertLayout(2, 8)
    for op in (
        build_jc(jc_spec(0.3 * WF), lay1),
        build_qrm(qrm_spec(0.8 * WF), lay1),
        build_dicke(fig5_spec(), lay2),
        build_sw_effective(fig5_spec(ModelKind.SW_EFFECTIVE), lay2),
    ):
        assert op.hermitian
        assert np.max(np.abs(op.matrix - op.matrix.conj().T)) < 1e-12 * np.max(np.abs(op.matrix))


def test_jc_free_spectrum():
    # oracle: with g = 0 the spectrum is {m Omega_f +- Omega_d/2}
    cutoff = 12
    wd = 0.7 * WF
    h = build_jc(jc_spec(0.0, wd=wd), HilbertLayout(1, cutoff))
    lam, _ = hermitian_eig(h)
    expected = np.sort(
        [m * WF + s * wd / 2 for m in range(cutoff) for s in (+1, -1)]
    )
    assert np.allclose(lam, expected, atol=1e-9 * WF)


def test_jc_resonant_first_doublet():
    # oracle: the {|up,0>, |down,1>} block is [[wf/2, g], [g, wf/2]]
    g = 0.05 * WF
    h = build_jc(jc_spec(g), HilbertLayout(1, 40))
    lam, _ = hermitian_eig(h)
    block = np.array([[WF / 2, g], [g, WF / 2]])
    expected_pair = np.sort(np.linalg.eigvalsh(block))
    assert lam[1] == pytest.approx(expected_pair[0], rel=1e-12)
    assert lam[2] == pytest.approx(expected_pair[1], rel=1e-12)
    assert expected_pair[0] == pytest.approx(WF / 2 - g)
    assert expected_pair[1] == pytest.approx(WF / 2 + g)


def test_jc_conserves_total_excitation_exactly():
    lay = HilbertLayout(1, 25)
    h = build_jc(jc_spec(0.31 * WF), lay).matrix
    n_op = total_excitation(lay).matrix
    assert np.array_equal(h @ n_op, n_op @ h)


def test_qrm_close_to_jc_at_weak_coupling():
    lay = HilbertLayout(1, 60)
    g = 0.05 * WF
    lam_jc, _ = hermitian_eig(build_jc(jc_spec(g), lay))
    lam_qrm, _ = hermitian_eig(build_qrm(qrm_spec(g), lay))
    # counter-rotating corrections enter at order g^2 / Omega_f
    assert np.max(np.abs(lam_jc[:7] - lam_qrm[:7])) < 2.0 * g**2 / WF


def test_qrm_jc_difference_scales_quadratically():
    lay = HilbertLayout(1, 60)

    def low_diff(g):
        lam_jc, _ = hermitian_eig(build_jc(jc_spec(g), lay))
        lam_qrm, _ = hermitian_eig(build_qrm(qrm_spec(g), lay))
        return np.max(np.abs(lam_jc[:7] - lam_qrm[:7]))

    ratio = low_diff(0.02 * WF) / low_diff(0.01 * WF)
    assert 3.5 < ratio < 4.5


def test_qrm_degenerate_qubit_ground_energy():
    # displaced-oscillator oracle: ground energy is exactly -g^2/Omega_f
    g = 0.8 * WF
    h = build_qrm(qrm_spec(g, wd=0.0), HilbertLayout(1, 100))
    lam, _ = hermitian_eig(h)
    assert lam[0] == pytest.approx(-(g**2) / WF, rel=1e-9)


def test_qrm_commutes_with_parity():
    lay = HilbertLayout(1, 30)
    h = build_qrm(qrm_spec(WF), lay).matrix
    p = parity_operator(lay).matrix
    assert np.max(np.abs(h @ p - p @ h)) < 1e-11 * np.max(np.abs(h))


def test_qrm_sign_of_coupling_is_gauge():
    # sigma_z conjugation flips g, so spectra at +-g coincide (units: wf = 1)
    spec_p = ModelSpec(ModelKind.QRM, 1.0, (1.0,), (0.37,))
    spec_m = ModelSpec(ModelKind.QRM, 1.0, (1.0,), (-0.37,))
    lay = HilbertLayout(1, 40)
    lam_p, _ = hermitian_eig(build_qrm(spec_p, lay))
    lam_m, _ = hermitian_eig(build_qrm(spec_m, lay))
    assert np.max(np.abs(lam_p - lam_m)) < 1e-10


def test_dicke_single_qubit_reduces_to_qrm():
    lay = HilbertLayout(1, 15)
    g = 0.4 * WF
    h_dicke = build_dicke(ModelSpec(ModelKind.DICKE, WF, (WF,), (g,)), lay)
    h_qrm = build_qrm(qrm_spec(g), lay)
    assert np.array_equal(h_dicke.matrix, h_qrm.matrix)


def test_dicke_free_spectrum_two_qubits():
    wf = 2 * np.pi * 1000.0
    wd = 0.1 * wf
    cutoff = 6
    spec = ModelSpec(ModelKind.DICKE, wf, (wd, wd), (0.0, 0.0))
    lam, _ = hermitian_eig(build_dicke(spec, HilbertLayout(2, cutoff)))
    expected = np.sort(
        [
            m * wf + (s1 + s2) * wd / 2
            for m in range(cutoff)
            for s1 in (+1, -1)
            for s2 in (+1, -1)
        ]
    )
    assert np.allclose(lam, expected, atol=1e-9 * wf)


def test_dicke_commutes_with_generalized_parity():
    lay = HilbertLayout(2, 12)
    h = build_dicke(fig5_spec(), lay).matrix
    p = parity_operator(lay).matrix
    assert np.max(np.abs(h @ p - p @ h)) < 1e-11 * np.max(np.abs(h))


def test_parity_action_on_basis_states():
    lay = HilbertLayout(1, 5)
    p = parity_operator(lay).matrix
    down0 = basis_index(lay, ["down"], 0)
    up0 = basis_index(lay, ["up"], 0)
    down1 = basis_index(lay, ["down"], 1)
    assert p[down0, down0] == +1
    assert p[up0, up0] == -1
    assert p[down1, down1] == -1


def test_parity_is_hermitian_unitary_involution():
    lay = HilbertLayout(2, 7)
    p = parity_operator(lay).matrix
    assert np.array_equal(p, p.conj().T)
    assert np.array_equal(p @ p, np.eye(lay.dim))


def test_effective_couplings_values():
    # frozen oracle arithmetic for the two-qubit dispersive parameters:
    # detuning = -0.9 wf, sum frequency = 1.1 wf,
    # exchange = 2 g^2 (1/detuning - 1/sum) = -1.1781818e-2 wf
    wf = 2 * np.pi * 1000.0
    eff = effective_couplings(fig5_spec())
    assert eff.detuning[0] == pytest.approx(-0.9 * wf, rel=1e-12)
    assert eff.sum_frequency[0] == pytest.approx(1.1 * wf, rel=1e-12)
    expected_exchange = 2 * (0.054 * wf) ** 2 * (1 / (-0.9 * wf) - 1 / (1.1 * wf))
    assert expected_exchange == pytest.approx(-1.1781818e-2 * wf, rel=1e-6)
    assert eff.exchange[0, 1] == pytest.approx(expected_exchange, rel=1e-12)
    assert eff.exchange[1, 0] == eff.exchange[0, 1]
    assert eff.exchange[0, 0] == 0.0
    expected_shift = 0.5 * (0.054 * wf) ** 2 * (1 / (-0.9 * wf) + 1 / (1.1 * wf))
    assert eff.dispersive_shift[0] == pytest.approx(expected_shift, rel=1e-12)


def test_effective_couplings_zero_coupling_row():
    wf = 2 * np.pi * 1000.0
    spec = ModelSpec(ModelKind.DICKE, wf, (0.1 * wf, 0.1 * wf), (0.0, 0.054 * wf))
    eff = effective_couplings(spec)
    assert np.all(eff.exchange[0, :] == 0.0)
    assert np.all(eff.exchange[:, 0] == 0.0)


def test_effective_couplings_resonance_guard():
    spec = ModelSpec(ModelKind.DICKE, WF, (WF, 0.1 * WF), (0.01 * WF, 0.01 * WF))
    with pytest.raises(ResonanceError):
        effective_couplings(spec)
    # just outside the guard is fine
    spec_ok = ModelSpec(
        ModelKind.DICKE, WF, (WF * (1 + 1e-5), 0.1 * WF), (0.01 * WF, 0.01 * WF)
    )
    effective_couplings(spec_ok)


def test_sw_effective_zero_coupling_is_free():
    wf = 2 * np.pi * 1000.0
    lay = HilbertLayout(2, 8)
    spec = ModelSpec(ModelKind.SW_EFFECTIVE, wf, (0.1 * wf, 0.1 * wf), (0.0, 0.0))
    free = ModelSpec(ModelKind.DICKE, wf, (0.1 * wf, 0.1 * wf), (0.0, 0.0))
    assert np.array_equal(
        build_sw_effective(spec, lay).matrix, build_dicke(free, lay).matrix
    )


def test_sw_effective_single_qubit_structure():
    # oracle: for one qubit the model is free H + shift (a+a')^2 sigma_z
    wf = 2 * np.pi * 1000.0
    spec = ModelSpec(ModelKind.SW_EFFECTIVE, wf, (0.1 * wf,), (0.054 * wf,))
    lay = HilbertLayout(1, 10)
    eff = effective_couplings(spec)
    from aqdsim.operators import annihilation, embed, pauli

    a = annihilation(10)
    disp = embed(a + a.dag(), 1, lay).matrix
    expected = (
        wf * embed(a.dag() @ a, 1, lay).matrix
        + 0.05 * wf * embed(pauli("z"), 0, lay).matrix
        + eff.dispersive_shift[0] * embed(pauli("z"), 0, lay).matrix @ (disp @ disp)
    )
    assert np.allclose(build_sw_effective(spec, lay).matrix, expected, atol=1e-12 * wf)


def test_sw_effective_matches_dicke_low_gaps():
    # energy *differences* agree to second order; the tolerance scales as
    # 5 max(g^2/|detuning|) (g/|detuning|)
    wf = 2 * np.pi * 1000.0
    lay = HilbertLayout(2, 40)
    lam_full, _ = hermitian_eig(build_dicke(fig5_spec(), lay))
    lam_eff, _ = hermitian_eig(build_sw_effective(fig5_spec(ModelKind.SW_EFFECTIVE), lay))
    g, det = 0.054 * wf, 0.9 * wf
    tol = 5 * (g**2 / det) * (g / det)
    gaps_full = lam_full[1:4] - lam_full[0]
    gaps_eff = lam_eff[1:4] - lam_eff[0]
    assert np.max(np.abs(gaps_full - gaps_eff)) < tol


def test_build_hamiltonian_dispatch():
    lay = HilbertLayout(1, 8)
    assert np.array_equal(
        build_hamiltonian(jc_spec(1.0), lay).matrix, build_jc(jc_spec(1.0), lay).matrix
    )
    assert np.array_equal(
        build_hamiltonian(qrm_spec(1.0), lay).matrix, build_qrm(qrm_spec(1.0), lay).matrix
    )


def test_mode_displacement_hermitian():
    lay = HilbertLayout(1, 6)
    d = mode_displacement(lay)
    assert d.hermitian
    a_full = np.diag(np.sqrt(np.arange(1, 6.0)), k=1)
    assert np.array_equal(d.matrix, np.kron(np.eye(2), a_full + a_full.T))


def test_frequency_scale():
    spec = ModelSpec(ModelKind.QRM, 2.0, (5.0,), (-7.0,))
    assert spec.frequency_scale() == 7.0
