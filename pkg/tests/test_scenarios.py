import numpy as np
import pytest

from bispinor import scenarios as sc
from bispinor.ansatz import build_state, compute_invariants, eigenvalue_lambda
from bispinor.correlations import (bloch_decompose, concurrence_wootters, geometric_discord)
from bispinor.errors import ConstraintViolated, DegenerateEnergy
from bispinor.potentials import build_hamiltonian

from oracles import discord_brute_force

SAMPLES = 500


def assert_matches_pipeline(res, s, n, tol=1e-8):
    h = build_hamiltonian(res.config)
    c1, c2, _ = compute_invariants(h)
    assert abs(c1 - res.c1) <= tol * max(1, res.c1)
    assert abs(c2 - res.c2) <= tol * max(1, res.c2)
    st = build_state(h, s, n)
    assert abs(eigenvalue_lambda(res.c1, res.c2, s, n) - res.lam) <= tol * max(1, abs(res.lam))
    assert abs(st.lam - res.lam) <= tol * max(1, abs(res.lam))
    b = bloch_decompose(st.rho)
    if res.bloch_a is not None:
        assert np.allclose(b.a2, res.bloch_a, atol=tol)
    assert abs(concurrence_wootters(st.rho) - res.concurrence) <= tol


def _draw(rng):
    s, n = rng.integers(1, 3, 2)
    return int(s), int(n)


def test_pseudoscalar_oracle(rng):
    for _ in range(SAMPLES):
        m, mu = rng.uniform(-2, 2, 2)
        P = rng.uniform(0, 3)
        n = int(rng.integers(1, 3))
        res = sc.case_pseudoscalar(m, mu, P, n)
        assert res.c2 == 0 and res.concurrence == 0
        st = build_state(res.config, 1, n)
        assert abs(st.c1 - res.c1) <= 1e-10 * max(1, res.c1)
        assert abs(st.lam - res.lam) <= 1e-10
        b = bloch_decompose(st.rho)
        assert abs(geometric_discord(b, 1) - res.measure) < 1e-9
        assert geometric_discord(b, 2) < 1e-12
        assert np.allclose(b.a1, res.extra["parity_bloch"], atol=1e-12)


@pytest.mark.parametrize("pseudotensor", [False, True])
def test_tensor_oracle(rng, pseudotensor):
    done = 0
    while done < SAMPLES:
        m, mu, k = rng.uniform(-2, 2, 3)
        B, P = rng.uniform(0, 2, 2)
        t = rng.uniform(0, np.pi)
        s, n = _draw(rng)
        try:
            res = sc.case_tensor_pseudoscalar(m, mu, k, B, P, t, s, n, pseudotensor=pseudotensor)
        except (DegenerateEnergy, ConstraintViolated):
            continue
        assert_matches_pipeline(res, s, n)
        done += 1


def test_pseudovector_oracle(rng):
    for i in range(SAMPLES):
        m, mu = rng.uniform(-2, 2, 2)
        W, P = rng.uniform(0.05, 2, 2)
        s, n = _draw(rng)
        if i % 2:
            res = sc.case_pseudovector(m, mu, 0.0, W, P, rng.uniform(0, np.pi), s, n)
        else:
            res = sc.case_pseudovector(m, mu, rng.uniform(-2, 2), W, P, np.pi / 2, s, n)
        assert_matches_pipeline(res, s, n)


def test_combined_oracle(rng):
    done = 0
    while done < SAMPLES:
        m, mu = rng.uniform(-2, 2, 2)
        W, B, P = rng.normal(size=(3, 3))
        # pick q so that m W.B + q P.W = 0
        q = -m * (W @ B) / (P @ W)
        if abs(q) > 5:
            continue
        s, n = _draw(rng)
        try:
            res = sc.case_combined(m, mu, q, W, B, P, s, n)
        except (DegenerateEnergy, ConstraintViolated):
            continue
        assert_matches_pipeline(res, s, n, tol=1e-8)
        done += 1


@pytest.mark.parametrize("antiparallel", [False, True])
def test_combined_frames_oracle(rng, antiparallel):
    for _ in range(SAMPLES // 2):
        mu, W, B, P = rng.uniform(0.1, 2, 4)
        s, n = _draw(rng)
        try:
            r1 = sc.case_combined_w_perp(mu, W, P, B, rng.uniform(-np.pi / 2, np.pi / 2),
                                         s, n, antiparallel)
            assert_matches_pipeline(r1, s, n)
        except (DegenerateEnergy, ConstraintViolated):
            pass
        try:
            r2 = sc.case_combined_b_perp(mu, W, P, B, rng.uniform(0, np.pi), s, n, antiparallel)
            assert_matches_pipeline(r2, s, n)
        except (DegenerateEnergy, ConstraintViolated):
            pass


def test_pseudoscalar_examples():
    assert sc.case_pseudoscalar(1.0, 0.0, 2.0).extra["discord_printed"] == 0
    r = sc.case_pseudoscalar(1.0, 1.0, np.sqrt(2))
    assert np.isclose(r.c1, 4) and r.c2 == 0 and np.isclose(abs(r.lam), 2)
    assert np.isclose(r.extra["discord_printed"], 0.5 - np.sqrt(1 / 8))
    # the geometric discord of this state, checked by direct minimisation
    rho = build_state(r.config).rho
    assert abs(r.measure - discord_brute_force(rho, 1)) < 1e-7
    assert np.isclose(r.measure, 0.125)
    with pytest.raises(ValueError):
        sc.case_pseudoscalar(1.0, 1.0, -1.0)


def test_pseudoscalar_discord_peaks_at_P_equal_M():
    for mu in (1, 5, 10, 20):
        Ps = np.linspace(0, 30, 3001)
        d = [sc.case_pseudoscalar(1.0, mu, P).measure for P in Ps]
        assert abs(Ps[int(np.argmax(d))] - np.hypot(1, mu)) <= Ps[1]


def test_tensor_examples():
    for t in (0.0,):
        r = sc.case_tensor_pseudoscalar(1.0, 0.5, 1.0, 1.0, 2.0, t)
        assert r.concurrence == 0
    P = 3.0
    B = sc.tensor_vanishing_field(1.0, P)
    r = sc.case_tensor_pseudoscalar(1.0, 0.7, 1.0, B, P, np.pi / 2, s=1)
    assert r.concurrence < 1e-12
    r = sc.case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, 1.0, np.pi / 2)
    assert abs(r.concurrence - 1 / np.sqrt(2)) < 1e-15
    with pytest.raises(ValueError):
        sc.case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, 1.0, 4.0)
    with pytest.raises(ConstraintViolated):
        sc.case_tensor_pseudoscalar(1.0, 0.0, 0.0, 1.0, 1.0, 1.0)


def test_tensor_monotone_in_sin_theta():
    xs = np.linspace(0, 1, 201)
    for P in (1, 4, 10, 100):
        c = [sc.case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, P, np.arcsin(x)).concurrence
             for x in xs]
        assert np.all(np.diff(c) >= -1e-12)
    for x in np.linspace(0.01, 1, 50):
        r = sc.case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, 1e6, np.arcsin(x))
        assert r.concurrence >= 1 - 1e-3


def test_pseudotensor_swaps_mass_roles():
    a = sc.case_tensor_pseudoscalar(0.3, 1.1, 0.8, 1.2, 0.9, 0.7, 2, 2)
    b = sc.case_tensor_pseudoscalar(1.1, 0.3, 0.8, 1.2, 0.9, 0.7, 2, 2, pseudotensor=True)
    assert np.isclose(a.c1, b.c1) and np.isclose(a.c2, b.c2)
    assert np.isclose(a.a_squared, b.a_squared)


def test_pseudovector_examples():
    r = sc.case_pseudovector(1.0, 0.0, 0.0, 1.0, 2.0, 0.0)
    assert r.concurrence == 0
    with pytest.raises(ConstraintViolated):
        sc.case_pseudovector(1.0, 0.0, 0.5, 1.0, 2.0, 0.3)
    soft = sc.case_pseudovector(1.0, 0.0, 0.5, 1.0, 2.0, 0.3, strict=False)
    assert soft.validity is sc.Validity.CONSTRAINT_VIOLATED
    # W = M gives the largest concurrence at theta = pi/2 for s = 1
    Ws = np.linspace(0.1, 3, 291)
    c = [sc.case_pseudovector(1.0, 0.0, 0.0, W, 1.0, np.pi / 2, 1).concurrence for W in Ws]
    assert abs(Ws[int(np.argmax(c))] - 1.0) < 1e-9
    assert np.isclose(max(c), 1.0)
    big = sc.case_pseudovector(1.0, 0.0, 100.0, 1.0, 1.0, np.pi / 2, 2)
    assert big.concurrence < 1e-3


def test_pseudovector_nonincreasing_in_cos_theta():
    cs = np.linspace(0, 1, 200)
    for s in (1, 2):
        for P, W in ((0.5, 1), (1, 1), (2, 1), (1, 0.5), (1, 2)):
            c = [sc.case_pseudovector(1.0, 0.3, 0.0, W, P, np.arccos(x), s).concurrence
                 for x in cs]
            assert np.all(np.diff(c) <= 1e-10)
            assert c[-1] <= 1e-12


def test_combined_w_perp_examples():
    mu, W, P, B, t = 1.0, 1.0, 1.5, 1.0, 0.3
    r = sc.case_combined_w_perp(mu, W, P, B, t)
    assert np.isclose(r.c2, (mu * W + P * B * np.sin(t)) ** 2)
    # maximal entanglement for s = 1 above -sin(theta_c)
    for x in np.linspace(-0.6, 1, 50):
        assert sc.case_combined_w_perp(1, 1, 1.5, 1, np.arcsin(x), s=1).concurrence > 1 - 1e-12


def test_combined_jump_at_critical_angle():
    for P in (1.2, 1.5, 2.0):
        tc = sc.critical_angle(1.0, 1.0, P, 1.0)
        lo = sc.case_combined_w_perp(1, 1, P, 1, -tc - 1e-4, s=1).a_squared
        hi = sc.case_combined_w_perp(1, 1, P, 1, -tc + 1e-4, s=1).a_squared
        assert abs(hi - lo) > 0.1


def test_mirror_symmetry_between_branches(rng):
    for _ in range(100):
        mu, W, P, B = rng.uniform(0.1, 2, 4)
        t = rng.uniform(-np.pi / 2, np.pi / 2)
        s, n = _draw(rng)
        try:
            a = sc.case_combined_w_perp(mu, W, P, B, t, s, n)
            b = sc.case_combined_w_perp(mu, W, P, B, -t, s, n, antiparallel=True)
        except (DegenerateEnergy, ConstraintViolated):
            continue
        assert np.isclose(a.c2, b.c2) and np.isclose(a.a_squared, b.a_squared)
        assert np.isclose(a.concurrence, b.concurrence, atol=1e-12)


def test_combined_constraint():
    with pytest.raises(ConstraintViolated):
        sc.case_combined(1.0, 0.5, 0.0, (1, 0, 0), (1, 0, 0), (0, 1, 0))
    r = sc.case_combined(1.0, 0.5, 0.0, (1, 0, 0), (1, 0, 0), (0, 1, 0), strict=False)
    assert r.validity is sc.Validity.CONSTRAINT_VIOLATED


def test_critical_angle():
    assert sc.critical_angle(0.0, 1.0, 2.0, 1.0) == 0.0
    assert sc.critical_angle(2.0, 1.0, 2.0, 1.0) is None
    assert np.isclose(sc.critical_angle(1.0, 1.0, 2.0, 1.0), np.pi / 6)
    with pytest.raises(ValueError):
        sc.critical_angle(1.0, 1.0, 0.0, 1.0)


def test_ur_limit():
    assert np.isclose(sc.ur_limit_combined(1.0, 0.3, np.pi / 2), 1.0)
    assert np.isclose(sc.ur_limit_combined(1.0, 0.5, 0.0), np.sqrt(0.2))
    assert np.isclose(sc.ur_limit_a_squared(1.0, 0.5, 0.0), 0.8)
    for t in np.linspace(0, np.pi, 7):
        assert sc.ur_limit_combined(1.0, 1e4, t) > 1 - 1e-8
    with pytest.raises(ValueError):
        sc.ur_limit_combined(0.0, 0.0, 0.1)
    for t in np.linspace(0, np.pi / 2, 9):
        r = sc.case_combined_b_perp(1.0, 1.0, 1e6, 0.5, t)
        assert abs(r.concurrence - sc.ur_limit_combined(1.0, 0.5, t)) < 1e-4


def test_bad_indices():
    with pytest.raises(ValueError):
        sc.case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, 1.0, 0.5, s=3)
