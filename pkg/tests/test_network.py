import numpy as np
import pytest

import qubitgeom as qg
from qubitgeom import network
from qubitgeom.errors import NotCP, NotUnital, QubitGeomError

from conftest import random_density, random_eta_in_D, random_rotation, trace_distance


def random_cp_unital(rng) -> qg.AffineChannel:
    A = random_rotation(rng) @ np.diag(random_eta_in_D(rng)) @ random_rotation(rng)
    return qg.AffineChannel(A, np.zeros(3))


def test_compile_identity():
    spec = qg.compile_channel(qg.catalog("identity"))
    assert np.allclose(spec.u1, np.eye(3))
    assert np.allclose(spec.u2, np.eye(3))
    assert np.allclose(spec.amplitudes, [1, 0, 0, 0])


def test_compile_depolarizing():
    spec = qg.compile_channel(qg.AffineChannel.from_eta([0, 0, 0]))
    assert np.allclose(spec.amplitudes, [0.5, 0.5, 0.5, 0.5])


def test_compile_best_unot_approximation():
    spec = qg.compile_channel(qg.AffineChannel.from_eta([-1 / 3, -1 / 3, -1 / 3]))
    assert np.allclose(spec.amplitudes, [0, np.sqrt(1 / 3), np.sqrt(1 / 3), np.sqrt(1 / 3)])


def test_compile_rejects_non_cp_and_non_unital():
    with pytest.raises(NotCP):
        qg.compile_channel(qg.catalog("universal_not"))
    with pytest.raises(NotUnital):
        qg.compile_channel(qg.AffineChannel(0.5 * np.eye(3), [0.1, 0, 0]))


def test_run_exact_identity_and_depolarizing(rng):
    rho0 = random_density(rng)
    spec = qg.compile_channel(qg.catalog("identity"))
    assert np.max(np.abs(qg.run_exact(spec, rho0) - rho0)) < 1e-12
    spec = qg.compile_channel(qg.AffineChannel.from_eta([0, 0, 0]))
    assert np.max(np.abs(qg.run_exact(spec, rho0) - np.eye(2) / 2)) < 1e-12


def test_run_exact_diagonal_action():
    spec = qg.compile_channel(qg.AffineChannel.from_eta([2 / 3, 2 / 3, 1 / 3]))
    out = qg.run_exact(spec, qg.bloch_to_density([1.0, 0, 0]))
    assert np.max(np.abs(qg.density_to_bloch(out) - [2 / 3, 0, 0])) < 1e-10


def test_compile_run_roundtrip(rng):
    for _ in range(200):
        ch = random_cp_unital(rng)
        spec = qg.compile_channel(ch)
        induced = network.induced_channel(spec)
        assert np.max(np.abs(qg.choi(induced) - qg.choi(ch))) < 1e-10
        rho0 = random_density(rng)
        expected = qg.bloch_to_density(qg.apply(ch, qg.density_to_bloch(rho0)))
        assert np.max(np.abs(qg.run_exact(spec, rho0) - expected)) < 1e-10


def test_run_sampled_single_branch(rng):
    rho0 = random_density(rng)
    spec = qg.compile_channel(qg.catalog("identity"))
    est, err = qg.run_sampled(spec, rho0, 10, seed=1)
    assert np.max(np.abs(est - rho0)) < 1e-12
    assert err == 0.0


def test_run_sampled_depolarizing_error_bound(rng):
    n = 10**5
    spec = qg.compile_channel(qg.AffineChannel.from_eta([0, 0, 0]))
    rho0 = qg.bloch_to_density([0, 0, 1.0])
    est, _ = qg.run_sampled(spec, rho0, n, seed=11)
    assert trace_distance(est, np.eye(2) / 2) < 5 / np.sqrt(n)


def test_run_sampled_deterministic():
    spec = qg.compile_channel(qg.AffineChannel.from_eta([0.4, 0.2, 0.1]))
    rho0 = qg.bloch_to_density([0.3, -0.2, 0.5])
    out1 = qg.run_sampled(spec, rho0, 5000, seed=42)
    out2 = qg.run_sampled(spec, rho0, 5000, seed=42)
    assert np.array_equal(out1[0], out2[0])
    assert out1[1] == out2[1]


def test_run_sampled_converges():
    spec = qg.compile_channel(qg.AffineChannel.from_eta([0.4, 0.2, 0.1]))
    rho0 = qg.bloch_to_density([0.3, -0.2, 0.5])
    exact = qg.run_exact(spec, rho0)
    e4 = trace_distance(qg.run_sampled(spec, rho0, 10**4, seed=3)[0], exact)
    e6 = trace_distance(qg.run_sampled(spec, rho0, 10**6, seed=3)[0], exact)
    assert e4 < 10 * e6


def test_run_sampled_rejects_bad_count(rng):
    spec = qg.compile_channel(qg.catalog("identity"))
    with pytest.raises(QubitGeomError):
        qg.run_sampled(spec, random_density(rng), 0, seed=0)


def test_network_spec_validation():
    with pytest.raises(QubitGeomError):
        qg.NetworkSpec(np.eye(3), np.eye(3), [1.0, 1.0, 0.0, 0.0])
    with pytest.raises(QubitGeomError):
        qg.NetworkSpec(2 * np.eye(3), np.eye(3), [1.0, 0.0, 0.0, 0.0])


def test_network_spec_json_roundtrip(rng):
    spec = qg.compile_channel(random_cp_unital(rng))
    back = qg.NetworkSpec.from_json(spec.to_json())
    assert np.max(np.abs(back.u1 - spec.u1)) < 1e-15
    assert np.max(np.abs(back.u2 - spec.u2)) < 1e-15
    assert np.max(np.abs(back.amplitudes - spec.amplitudes)) < 1e-15
