import numpy as np
import pytest
from hypothesis import given

from bispinor.clifford import build_gamma_set
from bispinor.matcore import I4
from bispinor.potentials import (PotentialConfig, build_hamiltonian, check_hamiltonian,
                                 covariant_potentials, field_tensor, su2su2_form,
                                 su2su2_potentials)

from conftest import configs


@given(configs())
def test_su2su2_form_matches_gamma_form(cfg):
    h = build_hamiltonian(cfg, subtract_A0=False)
    assert np.allclose(h.matrix, su2su2_form(cfg, subtract_A0=False), atol=1e-12)


@given(configs())
def test_each_class_maps_to_pauli_products(cfg):
    g0 = build_gamma_set().beta
    cov, su = covariant_potentials(cfg), su2su2_potentials(cfg)
    assert set(cov) == set(su) == {"scalar", "pseudoscalar", "vector", "pseudovector",
                                   "tensor", "pseudotensor"}
    for name in cov:
        assert np.allclose(g0 @ cov[name], su[name], atol=1e-12), name


@given(configs())
def test_hamiltonian_hermitian_and_traceless(cfg):
    h = build_hamiltonian(cfg)
    assert check_hamiltonian(h)
    assert h.is_traceless
    full = build_hamiltonian(cfg, subtract_A0=False)
    assert check_hamiltonian(full)
    assert np.allclose(full.matrix - h.matrix, cfg.A0 * I4)


def test_free_particle_squares_to_energy():
    cfg = PotentialConfig.from_kinetic(m=1.0, P=(0.3, -0.4, 1.2))
    h = build_hamiltonian(cfg).matrix
    assert np.allclose(h @ h, (1.0 + 0.09 + 0.16 + 1.44) * I4)


def test_kinetic_momentum_is_gauge_shifted():
    a = PotentialConfig(pvec=(1.0, 2.0, 3.0), Avec=(0.5, 0.5, 0.5))
    b = PotentialConfig(pvec=(0.5, 1.5, 2.5))
    assert np.array_equal(a.P, b.P)
    assert np.allclose(build_hamiltonian(a).matrix, build_hamiltonian(b).matrix)


def test_effective_tensor_fields():
    cfg = PotentialConfig(kappa=2.0, chi=3.0, Bvec=(1, 0, 0), Evec=(0, 1, 0))
    assert np.array_equal(cfg.X, [3.0, 2.0, 0.0])
    assert np.array_equal(cfg.K, [2.0, -3.0, 0.0])


def test_scalar_potential_shifts_mass():
    a = PotentialConfig(m=1.0, phi_S=0.5)
    b = PotentialConfig(m=1.5)
    assert a.m_eff == 1.5
    assert np.array_equal(build_hamiltonian(a).matrix, build_hamiltonian(b).matrix)


def test_field_tensor_components():
    F = field_tensor((1, 2, 3), (4, 5, 6))
    assert np.allclose(F, -F.T)
    assert np.array_equal(F[0, 1:], [1, 2, 3])
    assert F[1, 2] == -6 and F[2, 3] == -4 and F[3, 1] == -5


def test_config_is_immutable():
    cfg = PotentialConfig.from_kinetic(m=1.0, P=(1, 0, 0))
    with pytest.raises(ValueError):
        cfg.pvec[0] = 3.0
    with pytest.raises(AttributeError):
        cfg.m = 2.0
    assert cfg.replace(m=2.0).m == 2.0 and cfg.m == 1.0


def test_config_validation():
    with pytest.raises(ValueError):
        PotentialConfig(m=np.nan)
    with pytest.raises(ValueError):
        PotentialConfig(Bvec=(1, 2))


def test_equality_and_repr():
    a = PotentialConfig.from_kinetic(m=1.0, P=(1, 0, 0))
    b = PotentialConfig(m=1.0, pvec=np.array([1.0, 0, 0]))
    assert a == b
    assert a != a.replace(mu=1.0)
    assert repr(a) == "PotentialConfig(m=1.0, pvec=[1.0, 0.0, 0.0])"
