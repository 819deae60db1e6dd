"""Dirac-representation gamma matrices and the 16-element Clifford basis.

The representation is fixed::

    beta  = sigma_z (x) I2            gamma^0 = beta
    alpha = sigma_x (x) sigma         gamma^i = beta alpha_i = i sigma_y (x) sigma_i
    gamma5 = i gamma^0 gamma^1 gamma^2 gamma^3 = sigma_x (x) I2

with metric signature (+, -, -, -). The first tensor factor is the intrinsic
parity qubit, the second is the spin qubit.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .matcore import I2, I4, PAULI, SIGMA_X, SIGMA_Z, as_matrix, kron

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

#: (mu, nu) pairs labelling the six tensor elements Gamma_10 .. Gamma_15
TENSOR_PAIRS = tuple(combinations(range(4), 2))


def _frozen(m):
    m = np.array(m, dtype=complex)
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class GammaSet:
    """Gamma matrices together with the derived alpha, beta and spin operators.

    ``gamma[mu]`` holds the contravariant matrices ``gamma^mu = (beta, beta alpha)``;
    ``gamma_lower`` holds ``eta_{mu nu} gamma^nu``.
    """

    gamma: tuple
    gamma_lower: tuple
    gamma5: np.ndarray
    alpha: tuple
    beta: np.ndarray
    Sigma: tuple

    @property
    def gamma_vec(self):
        """Spatial triple ``(gamma^1, gamma^2, gamma^3)``."""
        return self.gamma[1:]

    def sigma_munu(self, mu, nu):
        """``sigma^{mu nu} = (i/2) [gamma^mu, gamma^nu]``."""
        a, b = self.gamma[mu], self.gamma[nu]
        return 0.5j * (a @ b - b @ a)


@lru_cache(maxsize=None)
def build_gamma_set():
    beta = kron(SIGMA_Z, I2)
    alpha = tuple(kron(SIGMA_X, s) for s in PAULI)
    gamma = (beta,) + tuple(beta @ a for a in alpha)
    gamma5 = 1j * gamma[0] @ gamma[1] @ gamma[2] @ gamma[3]
    lower = tuple(METRIC[mu, mu] * gamma[mu] for mu in range(4))
    Sigma = tuple(kron(I2, s) for s in PAULI)
    return GammaSet(
        gamma=tuple(_frozen(g) for g in gamma),
        gamma_lower=tuple(_frozen(g) for g in lower),
        gamma5=_frozen(gamma5),
        alpha=tuple(_frozen(a) for a in alpha),
        beta=_frozen(beta),
        Sigma=tuple(_frozen(s) for s in Sigma),
    )


@dataclass(frozen=True)
class GammaBasis:
    """The 16 irreducible gamma products, ordered

    ``I; gamma^0..gamma^3; gamma5; gamma5 gamma^0..gamma5 gamma^3;
    sigma^{01}, sigma^{02}, sigma^{03}, sigma^{12}, sigma^{13}, sigma^{23}``.

    The tensor group uses the commutator ``(i/2)[gamma^mu, gamma^nu]``; the
    anticommutator of two distinct gammas vanishes.
    """

    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def gram(self):
        """Matrix of ``Tr[Gamma_i^dagger Gamma_j]``; equals ``4 I16``."""
        e = np.array(self.elements)
        return np.einsum("iab,jab->ij", e.conj(), e)


@lru_cache(maxsize=None)
def build_gamma_basis():
    gs = build_gamma_set()
    elements = [I4]
    elements += list(gs.gamma)
    elements.append(gs.gamma5)
    elements += [gs.gamma5 @ g for g in gs.gamma]
    elements += [gs.sigma_munu(mu, nu) for mu, nu in TENSOR_PAIRS]
    return GammaBasis(tuple(_frozen(e) for e in elements))


def decompose_in_basis(m):
    """Coefficients ``x_i`` with ``m = sum_i x_i Gamma_i``.

    Every basis element is unitary and they are trace-orthogonal, so
    ``x_i = Tr[Gamma_i^dagger m] / 4``.
    """
    m = as_matrix(m)
    e = np.array(build_gamma_basis().elements)
    return np.einsum("iab,ab->i", e.conj(), m) / 4.0


def reconstruct_from_basis(coeffs):
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.shape != (16,):
        raise ValueError("expected 16 coefficients")
    e = np.array(build_gamma_basis().elements)
    return np.einsum("i,iab->ab", coeffs, e)
