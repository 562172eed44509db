import numpy as np
import pytest

import qubitgeom as qg
from qubitgeom.errors import NotUnital, UnknownName, UnphysicalBloch

from conftest import random_eta_in_D, random_rotation


def test_bloch_to_density_basics():
    assert np.allclose(qg.bloch_to_density([0, 0, 0]), np.eye(2) / 2)
    assert np.allclose(qg.bloch_to_density([0, 0, 1]), np.diag([1.0, 0.0]))
    assert np.allclose(qg.bloch_to_density([1, 0, 0]), np.full((2, 2), 0.5))


def test_bloch_to_density_purity(rng):
    for _ in range(20):
        s = rng.standard_normal(3)
        s *= rng.uniform(0, 1) / np.linalg.norm(s)
        rho = qg.bloch_to_density(s)
        purity = np.trace(rho @ rho).real
        assert abs(purity - (1 + s @ s) / 2) < 1e-10


def test_bloch_to_density_rejects_unphysical():
    with pytest.raises(UnphysicalBloch):
        qg.bloch_to_density([1.1, 0, 0])


def test_density_bloch_roundtrip(rng):
    for s in ([0, 0, 0], [0, 0, 1], [1, 0, 0], rng.uniform(-0.5, 0.5, 3)):
        s = np.asarray(s, dtype=float)
        assert np.max(np.abs(qg.density_to_bloch(qg.bloch_to_density(s)) - s)) < 1e-12


def test_apply_identity_and_named_maps(rng):
    s = rng.uniform(-0.5, 0.5, 3)
    assert np.allclose(qg.apply(qg.catalog("identity"), s), s)
    assert np.allclose(qg.apply(qg.catalog("universal_not"), [0, 0, 1]), [0, 0, -1])
    assert np.allclose(qg.apply(qg.catalog("pancake"), [0.3, -0.4, 0.2]), [0.3, -0.4, 0.0])


def test_choi_identity_is_pure_entangled():
    C = qg.choi(qg.catalog("identity"))
    w, _ = qg.hermitian_eig(C)
    assert np.allclose(w, [0, 0, 0, 1], atol=1e-12)
    psi = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert np.max(np.abs(C - np.outer(psi, psi))) < 1e-12


def test_choi_depolarizing_is_maximally_mixed():
    C = qg.choi(qg.AffineChannel.from_eta([0, 0, 0]))
    assert np.max(np.abs(C - np.eye(4) / 4)) < 1e-12


def test_choi_transpose_min_eigenvalue():
    w, _ = qg.hermitian_eig(qg.choi(qg.catalog("transpose")))
    assert abs(w[0] + 0.5) < 1e-12


def test_choi_matches_published_pattern(rng):
    # trace-1 normalisation: quarter of the extended-state pattern
    ex, ey, ez = rng.uniform(-1, 1, 3)
    C = qg.choi(qg.AffineChannel.from_eta([ex, ey, ez]))
    expected = 0.25 * np.array(
        [
            [1 + ez, 0, 0, ex + ey],
            [0, 1 - ez, ex - ey, 0],
            [0, ex - ey, 1 - ez, 0],
            [ex + ey, 0, 0, 1 + ez],
        ]
    )
    assert np.max(np.abs(C - expected)) < 1e-12
    assert abs(np.trace(C) - 1.0) < 1e-12


def test_choi_affine_linear(rng):
    for _ in range(20):
        c1 = qg.AffineChannel(rng.uniform(-1, 1, (3, 3)), rng.uniform(-0.2, 0.2, 3))
        c2 = qg.AffineChannel(rng.uniform(-1, 1, (3, 3)), rng.uniform(-0.2, 0.2, 3))
        lam = rng.uniform()
        mix = qg.AffineChannel(lam * c1.A + (1 - lam) * c2.A, lam * c1.b + (1 - lam) * c2.b)
        lhs = qg.choi(mix)
        rhs = lam * qg.choi(c1) + (1 - lam) * qg.choi(c2)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_is_cp_named_maps():
    flag, me = qg.is_cp(qg.catalog("identity"))
    assert flag and abs(me) < 1e-12
    flag, me = qg.is_cp(qg.catalog("universal_not"))
    assert not flag and me < 0
    flag, me = qg.is_cp(qg.AffineChannel.from_eta([-1 / 3, -1 / 3, -1 / 3]))
    assert flag and abs(me) < 1e-12


def test_is_positive_unital():
    assert qg.is_positive_unital(qg.catalog("universal_not"))
    assert not qg.is_positive_unital(qg.AffineChannel.from_eta([1.5, 0, 0]))
    with pytest.raises(NotUnital):
        qg.is_positive_unital(qg.AffineChannel(np.eye(3), [0.1, 0, 0]))


def test_is_positive_unital_rotation(rng):
    ch = qg.AffineChannel(random_rotation(rng), np.zeros(3))
    assert qg.is_positive_unital(ch)


def test_cp_agrees_with_tetrahedron(rng):
    for eta in rng.uniform(-1, 1, (1000, 3)):
        flag, _ = qg.is_cp(qg.AffineChannel.from_eta(eta))
        assert flag == qg.in_D(eta)


def test_positive_unital_contracts(rng):
    for _ in range(50):
        A = rng.uniform(-1, 1, (3, 3))
        _, sig, _ = qg.svd3(A)
        ch = qg.AffineChannel(A / max(sig[0], 1.0), np.zeros(3))
        assert qg.is_positive_unital(ch)
        s = rng.standard_normal(3)
        s /= np.linalg.norm(s)
        assert np.linalg.norm(qg.apply(ch, s)) <= 1 + 1e-10


def _check_canonical(ch):
    form = qg.canonical_form(ch)
    assert abs(np.linalg.det(form.Q) - 1) < 1e-10
    assert abs(np.linalg.det(form.R) - 1) < 1e-10
    assert np.max(np.abs(form.Q.T @ form.Q - np.eye(3))) < 1e-10
    assert np.max(np.abs(form.R.T @ form.R - np.eye(3))) < 1e-10
    assert np.max(np.abs(form.reconstruct() - ch.A)) < 1e-10
    return form


def test_canonical_form_diagonal():
    form = _check_canonical(qg.AffineChannel.from_eta([0.5, 0.5, 0.5]))
    assert np.allclose(np.abs(form.delta), 0.5)


def test_canonical_form_rotation(rng):
    form = _check_canonical(qg.AffineChannel(random_rotation(rng), np.zeros(3)))
    assert np.allclose(np.abs(form.delta), 1.0, atol=1e-10)


def test_canonical_form_rotated_squeeze():
    th = 0.7
    Rz = np.array(
        [[np.cos(th), -np.sin(th), 0], [np.sin(th), np.cos(th), 0], [0, 0, 1]]
    )
    A = Rz @ np.diag([0.8, 0.5, 0.3])
    form = _check_canonical(qg.AffineChannel(A, np.zeros(3)))
    assert np.allclose(sorted(np.abs(form.delta))[::-1], [0.8, 0.5, 0.3], atol=1e-10)


def test_canonical_form_negative_determinant():
    form = _check_canonical(qg.catalog("transpose"))
    assert np.linalg.det(np.diag(form.delta)) < 0


def test_canonical_form_random_contractions(rng):
    for _ in range(200):
        A = rng.uniform(-1, 1, (3, 3))
        _, sig, _ = qg.svd3(A)
        if sig[0] > 1:
            A = A / sig[0]
        _check_canonical(qg.AffineChannel(A, np.zeros(3)))


def test_catalog_entries():
    assert np.allclose(qg.catalog("transpose").eta, [1, -1, 1])
    assert np.allclose(qg.catalog("universal_not").eta, [-1, -1, -1])
    assert np.allclose(qg.catalog("identity").eta, [1, 1, 1])
    assert np.allclose(qg.catalog("depolarize", 0.4).eta, [0.6, 0.6, 0.6])
    with pytest.raises(UnknownName):
        qg.catalog("hadamard")
    with pytest.raises(UnknownName):
        qg.catalog("depolarize")


def test_channel_json_roundtrip(rng):
    ch = qg.AffineChannel.from_eta([0.2, -0.3, 0.4])
    obj = qg.channel_to_json(ch)
    assert "eta" in obj
    back = qg.channel_from_json(obj)
    assert np.max(np.abs(back.A - ch.A)) < 1e-15

    ch2 = qg.AffineChannel(rng.uniform(-1, 1, (3, 3)), [0.1, 0, 0])
    obj2 = qg.channel_to_json(ch2)
    assert "A" in obj2
    back2 = qg.channel_from_json(obj2)
    assert np.max(np.abs(back2.A - ch2.A)) < 1e-15
    assert np.max(np.abs(back2.b - ch2.b)) < 1e-15
