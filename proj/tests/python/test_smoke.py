import math

import numpy as np
import pytest

import otocspec as oc


def test_hamiltonian_is_hermitian():
    h = oc.build_hamiltonian(oc.ModelSpec.chaotic_xyz(4))
    assert h.shape == (16, 16)
    assert np.allclose(h, h.conj().T)


def test_evolve_matches_scipy_expm():
    scipy_linalg = pytest.importorskip("scipy.linalg")
    h = oc.build_hamiltonian(oc.ModelSpec.xxz(4, 1.0, 0.5, 0.2))
    assert np.allclose(oc.evolve(h, 0.7), scipy_linalg.expm(-0.7j * h), atol=1e-11)


def test_identity_spectrum_is_bimodal():
    u = np.eye(32, dtype=complex)
    spec = oc.singular_spectrum(u, 0, 4)
    lam = np.sort(spec["lambdas"])
    assert np.allclose(lam[:8], 0.0) and np.allclose(lam[8:], 1.0)
    assert abs(oc.chebyshev_moment(u, 0, 4, 2)) < 1e-12
    assert oc.chebyshev_moment(u, 0, 4, 4) == pytest.approx(1.0)


def test_theorem_on_haar_unitary():
    u = oc.haar_unitary(16, seed=3)
    assert np.allclose(u.conj().T @ u, np.eye(16), atol=1e-12)
    spec = oc.singular_spectrum(u, 1, 2, oc.WeightKind.reference)
    for k in (0.5, 1.0, 2.0):
        predicted = np.sum(spec["weights"] * np.cos(2 * k * spec["thetas"]))
        assert abs(oc.otoc_k(u, 1, 2, k) - predicted) < 1e-10


def test_qsp_harmonic_reduction():
    u = oc.haar_unitary(8, seed=4)
    for d in (2, 4):
        assert abs(oc.qsp_otoc(u, 0, 2, oc.harmonic_phases(d)) - oc.otoc_k(u, 0, 2, d / 2)) < 1e-10
    assert oc.qsp_response(0.4, oc.harmonic_phases(2)).real == pytest.approx(math.cos(0.8))


def test_free_fermion_spectrum_matches_many_body():
    n, t = 5, 1.1
    u = oc.evolve(oc.build_hamiltonian(oc.ModelSpec.xxz(n)), t)
    many = np.sort(oc.singular_spectrum(u, 0, n - 1)["lambdas"])
    exact = np.sort(oc.free_fermion_spectrum(oc.ModelSpec.free_fermion_xx(n), 0, n - 1, t))
    assert np.allclose(many, exact, atol=1e-10)


def test_runners_return_reports():
    report = oc.run_theorem_check(num_qubits=3, trials=4, k_max=2, seed=1)
    assert report["pass"] and report["maxResidual"] < 1e-9
    haar = oc.run_haar_baseline(num_qubits=2, samples=1, orders=[2], seed=1)
    assert haar["assertions"] is False
    sweep = oc.run_moment_sweep({
        "schemaVersion": 1,
        "model": {"family": "FreeFermionXX", "numSites": 4, "couplings": {"J": 1.0}},
        "sites": [[0, 3]],
        "timeGrid": {"start": 0.0, "stop": 1.0, "steps": 3},
        "momentOrders": [4],
    })
    assert len(sweep["series"]) == 1
    assert sweep["series"][0]["values"][0] == pytest.approx(1.0)
    assert sweep["report"]["dropTimes"]["order"] == 8


def test_errors_carry_codes():
    with pytest.raises(oc.OtocspecError) as info:
        oc.chebyshev_moment(np.eye(8, dtype=complex), 0, 1, 3)
    assert info.value.code == "OddOrder"
    with pytest.raises(oc.OtocspecError) as info:
        oc.run_moment_sweep({"schemaVersion": 9})
    assert info.value.code == "ConfigError"
