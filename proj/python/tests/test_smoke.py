import numpy as np
import pytest

import qha


def test_model_properties():
    m = qha.Model("sampled", 256, L=16.0)
    assert m.n == 256
    assert m.dx == pytest.approx(1 / 16)
    assert m.domega == pytest.approx(1 / 16)
    assert qha.Model("finite", 8).weight == pytest.approx(1 / 8)
    with pytest.raises(ValueError):
        qha.Model("finite", 1)
    with pytest.raises(ValueError):
        qha.Model("sampled", 64)


def test_rho_inverts_fourier_wigner():
    m = qha.Model("finite", 7)
    rng = np.random.default_rng(0)
    s = rng.normal(size=(7, 7)) + 1j * rng.normal(size=(7, 7))
    np.testing.assert_allclose(qha.rho(m, qha.fourier_wigner(m, s)), s, atol=1e-12)


def test_fourier_wigner_matches_trace_definition():
    m = qha.Model("finite", 5)
    s = qha.random_density(m, 2, seed=3)
    fw = qha.fourier_wigner(m, s)
    for a in range(5):
        for b in range(5):
            sa = a - 5 if a >= 3 else a
            sb = b - 5 if b >= 3 else b
            expected = np.exp(-1j * np.pi * sa * sb / 5) * np.trace(qha.tf_shift(m, -a, -b) @ s)
            assert abs(fw[a, b] - expected) < 1e-12


def test_product_formula():
    m = qha.Model("finite", 6)
    f = qha.random_function(m, seed=1)
    g = qha.random_function(m, seed=2)
    np.testing.assert_allclose(qha.rho(m, qha.twisted_conv(m, f, g)), qha.rho(m, f) @ qha.rho(m, g), atol=1e-11)


def test_husimi_of_identity_and_trace_integral():
    m = qha.Model("finite", 8)
    sigma = qha.random_density(m, 1, seed=4)
    np.testing.assert_allclose(qha.husimi(m, np.eye(8), sigma), np.ones((8, 8)), atol=1e-12)
    s = qha.random_density(m, 3, seed=5)
    assert qha.husimi(m, s, sigma).sum() * m.weight == pytest.approx(1.0, abs=1e-12)


def test_gaussian_wigner():
    m = qha.Model("sampled", 128, L=12.0)
    phi = qha.gaussian_window(m)
    w = qha.wigner(m, phi)
    x = np.array([m.x_coord(i) for i in range(128)])
    om = np.array([m.omega_coord(i) for i in range(128)])
    expected = 2 * np.exp(-2 * np.pi * (x[:, None] ** 2 + om[None, :] ** 2))
    assert np.max(np.abs(w - expected)) < 1e-6


def test_round_trips_and_infeasibility():
    m = qha.Model("finite", 6)
    sigma = qha.random_density(m, 1, seed=7)
    g = qha.random_function(m, seed=8)
    symbol, residual, zeros = qha.glauber_sudarshan(m, qha.berezin_quantize(m, g, sigma), sigma)
    np.testing.assert_allclose(symbol, g, atol=1e-10)
    assert residual < 1e-10 and zeros["classification"] == "empty"
    s = qha.random_density(m, 3, seed=9)
    np.testing.assert_allclose(qha.reconstruct(m, qha.husimi(m, s, sigma), sigma), s, atol=1e-9)

    fw = qha.fourier_wigner(m, sigma)
    fw[2, :] = 0
    bad = qha.rho(m, fw)
    assert qha.zero_set(m, bad)["classification"] == "full-row-or-column"
    with pytest.raises(qha.InfeasibleError) as info:
        qha.reconstruct(m, qha.husimi(m, s, bad), bad)
    # F_W of the parity-conjugated window vanishes on the reflected line m = -2.
    assert sorted(info.value.report["zero_points"]) == [(4, k) for k in range(6)]


def test_berezin_lieb():
    m = qha.Model("finite", 5)
    s = qha.random_density(m, 2, seed=1)
    t = qha.random_density(m, 5, seed=2) - 0.3 * np.eye(5)
    for phi, p in [("exp", 1.0), ("exp", -1.0), ("pos", 0.0), ("abspow", 2.0)]:
        assert qha.berezin_lieb_operator(m, t, s, phi, p)["passed"]
        f = qha.random_function(m, seed=3).real.astype(complex)
        assert qha.berezin_lieb_function(m, f, s, phi, p)["passed"]


def test_identity_suite():
    names = qha.registered_identities()
    assert len(names) == 10
    for name in names:
        assert qha.verify_identity(name, 1, qha.Model("finite", 4))["passed"]
    with pytest.raises(ValueError):
        qha.verify_identity("no-such", 1, qha.Model("finite", 4))
