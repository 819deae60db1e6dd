"""Two-qubit correlation quantifiers for 4x4 density matrices.

Factor 1 of ``C^2 (x) C^2`` is the intrinsic-parity qubit and factor 2 the
spin qubit, matching :mod:`bispinor.clifford`. Logarithms are base 2.
"""
from dataclasses import dataclass

import numpy as np

from .errors import NotAState, NotPure, OutOfRange
from .matcore import (I2, PAULI, SIGMA_Y, clamp_spectrum,
                      general_eigenvalues, hermitian_eigensystem, is_hermitian,
                      kron)
from .tolerances import (ENTROPY_CUTOFF, PURITY_ATOL, TRACE_ATOL,
                         WOOTTERS_IMAG_ATOL)

_SIGMA_Y2 = kron(SIGMA_Y, SIGMA_Y)
# rows: sigma_i (x) sigma_j, stacked as a (3, 3, 4, 4) array
_PAULI_PAIRS = np.array([[np.kron(a, b) for b in PAULI] for a in PAULI])
_LOCAL_1 = np.array([np.kron(a, I2) for a in PAULI])
_LOCAL_2 = np.array([np.kron(I2, b) for b in PAULI])


def check_state(rho, size=None):
    """Validate a density matrix and return it as a complex array.

    ``size`` restricts the dimension; by default 2x2 and 4x4 are accepted.
    """
    rho = np.asarray(rho, dtype=complex)
    shapes = ((4, 4), (2, 2)) if size is None else ((size, size),)
    if rho.shape not in shapes:
        raise NotAState(f"expected a {' or '.join('%dx%d' % s for s in shapes)} matrix, "
                        f"got shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise NotAState("density matrix has non-finite entries")
    if not is_hermitian(rho):
        raise NotAState("density matrix is not Hermitian")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > TRACE_ATOL:
        raise NotAState(f"trace is {tr!r}, expected 1")
    return rho


@dataclass(frozen=True, eq=False)
class BlochDecomposition:
    """Local Bloch vectors and correlation matrix of a two-qubit state.

    ``rho = 1/4 [I + a1 . (sigma (x) I) + a2 . (I (x) sigma) + sum t_ij sigma_i (x) sigma_j]``
    """

    a1: np.ndarray
    a2: np.ndarray
    T: np.ndarray

    @property
    def purity(self):
        return 0.25 * (1.0 + self.a1 @ self.a1 + self.a2 @ self.a2 + np.sum(self.T ** 2))

    def reconstruct(self):
        rho = np.eye(4, dtype=complex)
        rho = rho + np.einsum("i,iab->ab", self.a1, _LOCAL_1)
        rho = rho + np.einsum("j,jab->ab", self.a2, _LOCAL_2)
        rho = rho + np.einsum("ij,ijab->ab", self.T, _PAULI_PAIRS)
        return 0.25 * rho


def bloch_decompose(rho):
    rho = check_state(rho, 4)
    a1 = np.einsum("iab,ba->i", _LOCAL_1, rho).real
    a2 = np.einsum("iab,ba->i", _LOCAL_2, rho).real
    T = np.einsum("ijab,ba->ij", _PAULI_PAIRS, rho).real
    return BlochDecomposition(a1=a1, a2=a2, T=T)


def partial_trace(rho, keep):
    """Reduced state of factor ``keep`` (1 = parity, 2 = spin)."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    if keep == 1:
        return np.einsum("ajbj->ab", r)
    if keep == 2:
        return np.einsum("iaib->ab", r)
    raise ValueError("keep must be 1 or 2")


def concurrence_pure(b):
    """Concurrence ``sqrt(1 - a^2)`` of a pure state from its Bloch data."""
    if b.purity < 1.0 - PURITY_ATOL:
        raise NotPure(f"purity {b.purity:.12f} is below 1")
    a1sq, a2sq = b.a1 @ b.a1, b.a2 @ b.a2
    if abs(a1sq - a2sq) > PURITY_ATOL:
        raise NotPure(f"local Bloch lengths differ: {a1sq} vs {a2sq}")
    return float(np.sqrt(min(1.0, max(0.0, 1.0 - a2sq))))


def wootters_lambdas(rho):
    """Decreasing Wootters spectrum ``lambda_1 >= ... >= lambda_4``.

    These are the singular values of ``tau = Psi^T (sigma_y (x) sigma_y) Psi``
    where the columns of ``Psi`` are the subnormalised eigenvectors of
    ``rho``; their squares are the eigenvalues of ``rho rho~``. Going through
    the SVD keeps the absolute error at machine precision when ``rho`` is
    rank deficient, whereas square roots of the ``rho rho~`` spectrum lose
    half the digits.
    """
    rho = check_state(rho, 4)
    w, v = hermitian_eigensystem(rho)
    psi = v * np.sqrt(clamp_spectrum(w))
    tau = psi.T @ _SIGMA_Y2 @ psi
    return np.linalg.svd(tau, compute_uv=False)


def wootters_spectrum_direct(rho):
    """Square roots of the eigenvalues of ``rho (sy sy) rho* (sy sy)``, decreasing."""
    rho = check_state(rho, 4)
    ev = general_eigenvalues(rho @ _SIGMA_Y2 @ rho.conj() @ _SIGMA_Y2)
    if np.max(np.abs(ev.imag)) > WOOTTERS_IMAG_ATOL:
        raise NotAState("spin-flipped product has a complex spectrum")
    return np.sort(np.sqrt(np.clip(ev.real, 0.0, None)))[::-1]


def concurrence_wootters(rho):
    lam = wootters_lambdas(rho)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def binary_entropy(x):
    """``-x log2 x - (1-x) log2 (1-x)`` with ``0 log 0 = 0``."""
    out = 0.0
    for p in (x, 1.0 - x):
        if p > 0.0:
            out -= p * np.log2(p)
    return out


def entanglement_of_formation(concurrence):
    c = float(concurrence)
    if not (-1e-12 <= c <= 1.0 + 1e-12):
        raise OutOfRange(f"concurrence {c} outside [0, 1]")
    c = min(1.0, max(0.0, c))
    return binary_entropy(0.5 * (1.0 - np.sqrt(1.0 - c * c)))


def von_neumann_entropy(rho):
    """Von Neumann entropy in bits of a 2x2 or 4x4 density matrix."""
    rho = check_state(rho)
    w, _ = hermitian_eigensystem(rho)
    w = w[w > ENTROPY_CUTOFF]
    return float(max(0.0, -np.sum(w * np.log2(w))))


def geometric_discord(b, side=1):
    """Geometric discord for a projective measurement on factor ``side``.

    ``D = (||a||^2 + ||T||^2 - k_max)/4`` with ``k_max`` the largest eigenvalue
    of ``a a^T + T T^T`` (side 1) or ``a a^T + T^T T`` (side 2). A Bell state
    gives 1/2.
    """
    if side == 1:
        a, TT = b.a1, b.T @ b.T.T
    elif side == 2:
        a, TT = b.a2, b.T.T @ b.T
    else:
        raise ValueError("side must be 1 or 2")
    K = np.outer(a, a) + TT
    kmax = np.linalg.eigvalsh(K)[-1]
    return float(max(0.0, 0.25 * (a @ a + np.trace(TT) - kmax)))


@dataclass(frozen=True)
class CorrelationReport:
    concurrence: float
    eof: float
    entropy_total: float
    entropy_sub1: float
    entropy_sub2: float
    discord_geo_1: float
    discord_geo_2: float
    purity: float
    concurrence_pure: float = None


def full_report(rho):
    rho = check_state(rho, 4)
    b = bloch_decompose(rho)
    c = concurrence_wootters(rho)
    purity = float(np.trace(rho @ rho).real)
    c_pure = None
    if purity >= 1.0 - PURITY_ATOL:
        c_pure = concurrence_pure(b)
    return CorrelationReport(
        concurrence=c,
        eof=entanglement_of_formation(c),
        entropy_total=von_neumann_entropy(rho),
        entropy_sub1=von_neumann_entropy(partial_trace(rho, 1)),
        entropy_sub2=von_neumann_entropy(partial_trace(rho, 2)),
        discord_geo_1=geometric_discord(b, 1),
        discord_geo_2=geometric_discord(b, 2),
        purity=purity,
        concurrence_pure=c_pure,
    )
