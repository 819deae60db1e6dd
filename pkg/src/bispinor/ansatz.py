"""Stationary density operators commuting with a traceless Dirac Hamiltonian.

For traceless ``H`` write ``H^2 = c1 I + 2 O``. When ``O^2 = c2 I`` (with
``c2 > 0``) the operator::

    rho = 1/4 (I + (-1)^s O / sqrt(c2)) (I + (-1)^n H / |lam|),
    lam = (-1)^n sqrt(c1 + 2 (-1)^s sqrt(c2))

is a rank-one projector onto an eigenvector of ``H`` with energy ``lam``.
When ``O = 0`` the first factor is dropped and ``rho`` is a rank-two mixed
state with ``lam = (-1)^n sqrt(c1)``. Indices ``s, n`` take values 1 and 2.
"""
import enum
from dataclasses import dataclass

import numpy as np

from .clifford import build_gamma_set
from .errors import DegenerateEnergy, NotTraceless, UnsupportedConfiguration
from .matcore import I4, dot_operators, frobenius
from .potentials import DiracHamiltonian, build_hamiltonian
from .tolerances import (DEGENERATE_ATOL, NULL_O_RTOL, PURE_C2_MIN, PURE_RTOL,
                         TRACELESS_RTOL)


class PurityClass(enum.Enum):
    PURE_PROJECTOR = "PureProjector"
    MIXED_RANK2 = "MixedRank2"
    UNSUPPORTED = "Unsupported"


def _sign(k):
    if k not in (1, 2):
        raise ValueError(f"index must be 1 or 2, got {k!r}")
    return -1.0 if k == 1 else 1.0


def _matrix_and_config(h):
    if isinstance(h, DiracHamiltonian):
        if h.includes_A0:
            h = build_hamiltonian(h.config, subtract_A0=True)
        return h.matrix, h.config
    # a bare PotentialConfig is accepted too
    hh = build_hamiltonian(h)
    return hh.matrix, hh.config


def _require_traceless(mat):
    tr = np.trace(mat)
    if abs(tr) > TRACELESS_RTOL * max(1.0, frobenius(mat)):
        raise NotTraceless(f"Tr[H] = {tr:.3e}")


def compute_invariants(h):
    """Trace invariants ``(c1, c2, delta)`` of a traceless Hamiltonian.

    ``c1 = Tr[H^2]/4`` and ``c2 = Tr[(H^2 - c1)^2]/16``. ``delta`` is the
    coefficient of ``H`` in ``O^2 - c2 I = 2 delta H`` for fields without an
    ``X x K`` component: ``mu (W.X) - m (W.K) - q (P.W)``.
    """
    mat, cfg = _matrix_and_config(h)
    _require_traceless(mat)
    h2 = mat @ mat
    c1 = np.trace(h2).real / 4.0
    d = h2 - c1 * I4
    c2 = np.trace(d @ d).real / 16.0
    return c1, max(c2, 0.0), delta_coefficient(cfg)


def delta_coefficient(cfg):
    W = cfg.Wvec
    return cfg.mu * (W @ cfg.X) - cfg.m_eff * (W @ cfg.K) - cfg.q * (cfg.P @ W)


def closed_form_invariants(cfg):
    """``c1`` and ``c2`` from the field vectors, without forming matrices.

    ``O`` is a combination of 15 mutually trace-orthogonal Hermitian involutions,
    so ``c2 = Tr[O^2]/4`` is the sum of its squared coefficients.
    """
    m, mu, q = cfg.m_eff, cfg.mu, cfg.q
    P, W, X, K = cfg.P, cfg.Wvec, cfg.X, cfg.K
    c1 = P @ P + m * m + mu * mu + q * q + W @ W + X @ X + K @ K
    terms = [
        mu * X - m * K - q * P,
        m * W + np.cross(P, X),
        mu * W + np.cross(P, K),
        q * W + np.cross(X, K),
    ]
    c2 = sum(t @ t for t in terms) + (P @ W) ** 2 + (W @ K) ** 2 + (W @ X) ** 2
    return float(c1), float(c2)


def build_O(h):
    """Explicit gamma/Sigma expansion of ``O = (H^2 - c1 I)/2``."""
    mat, cfg = _matrix_and_config(h)
    _require_traceless(mat)
    gs = build_gamma_set()
    g0, g5, Sig = gs.beta, gs.gamma5, gs.Sigma
    m, mu, q = cfg.m_eff, cfg.mu, cfg.q
    P, W, X, K = cfg.P, cfg.Wvec, cfg.X, cfg.K
    O = dot_operators(mu * X - m * K - q * P, Sig)
    O = O + g0 @ dot_operators(m * W + np.cross(P, X), Sig)
    O = O + 1j * (g0 @ g5) @ dot_operators(mu * W + np.cross(P, K), Sig)
    # with E = 0, X and K are parallel and only the q W part survives here
    O = O - g5 @ dot_operators(q * W + np.cross(X, K), Sig)
    O = O + (P @ W) * g5 - (W @ K) * g0 + 1j * (W @ X) * (g0 @ g5)
    return O


def _classify(O, c1, c2):
    scale = max(1.0, c1)
    if frobenius(O) <= NULL_O_RTOL * scale:
        return PurityClass.MIXED_RANK2
    if c2 > PURE_C2_MIN and frobenius(O @ O - c2 * I4) <= PURE_RTOL * max(1.0, c2):
        return PurityClass.PURE_PROJECTOR
    return PurityClass.UNSUPPORTED


def purity_condition(h):
    """Classify which branch of the ansatz applies to ``h``."""
    mat, _ = _matrix_and_config(h)
    O = build_O(h)
    c1, c2 = _stable_invariants(mat, O)
    return _classify(O, c1, c2)


def _stable_invariants(mat, O):
    # Tr[(H^2 - c1)^2] cancels catastrophically for large momenta; Tr[O^2]
    # from the explicit expansion does not.
    c1 = np.einsum("ij,ij->", mat, mat.conj()).real / 4.0
    c2 = np.einsum("ij,ij->", O, O.conj()).real / 4.0
    return c1, c2


def eigenvalue_lambda(c1, c2, s, n):
    """Energy parameter ``(-1)^n sqrt(c1 + 2 (-1)^s sqrt(c2))``."""
    rad = c1 + 2.0 * _sign(s) * np.sqrt(max(c2, 0.0))
    if rad <= DEGENERATE_ATOL * max(1.0, abs(c1)):
        raise DegenerateEnergy(f"radicand {rad:.3e} too small (c1={c1}, c2={c2}, s={s})")
    return _sign(n) * float(np.sqrt(rad))


def quartic_residual(c1, c2, delta, lam):
    """Residual of ``(lam^2 - c1)^2/4 = c2 + 2 delta lam``; diagnostics only."""
    return (lam * lam - c1) ** 2 / 4.0 - c2 - 2.0 * delta * lam


@dataclass(frozen=True, eq=False)
class AnsatzInputs:
    hamiltonian: DiracHamiltonian
    s: int = 1
    n: int = 2


@dataclass(frozen=True, eq=False)
class AnsatzState:
    rho: np.ndarray
    c1: float
    c2: float
    delta: float
    lam: float
    purity_class: PurityClass
    s: int
    n: int
    hamiltonian: DiracHamiltonian = None

    @property
    def purity(self):
        return float(np.trace(self.rho @ self.rho).real)

    @property
    def is_pure(self):
        return self.purity_class is PurityClass.PURE_PROJECTOR


def build_state(inputs, s=None, n=None):
    """Stationary ansatz state for a Hamiltonian.

    Accepts either an :class:`AnsatzInputs` or a Hamiltonian / config plus the
    ``s`` and ``n`` indices (default ``s=1, n=2``).

    Raises
    ------
    UnsupportedConfiguration
        If ``O`` is neither null nor proportional to an involution.
    DegenerateEnergy
        If the energy parameter vanishes.
    """
    if isinstance(inputs, AnsatzInputs):
        h, s, n = inputs.hamiltonian, inputs.s, inputs.n
    else:
        h = inputs
        s = 1 if s is None else s
        n = 2 if n is None else n
    sig_s, sig_n = _sign(s), _sign(n)
    if not isinstance(h, DiracHamiltonian):
        h = build_hamiltonian(h)
    elif h.includes_A0:
        h = build_hamiltonian(h.config, subtract_A0=True)
    mat = h.matrix
    _require_traceless(mat)
    O = build_O(h)
    c1, c2 = _stable_invariants(mat, O)
    delta = delta_coefficient(h.config)
    kind = _classify(O, c1, c2)
    if kind is PurityClass.UNSUPPORTED:
        raise UnsupportedConfiguration(
            f"O^2 is not proportional to the identity (c2={c2:.6g}, delta={delta:.6g})")
    if kind is PurityClass.MIXED_RANK2:
        if c1 <= DEGENERATE_ATOL:
            raise DegenerateEnergy("Hamiltonian vanishes")
        lam = sig_n * float(np.sqrt(c1))
        rho = 0.25 * (I4 + sig_n * mat / abs(lam))
    else:
        lam = eigenvalue_lambda(c1, c2, s, n)
        rho = 0.25 * (I4 + sig_s * O / np.sqrt(c2)) @ (I4 + sig_n * mat / abs(lam))
    # the factors commute, so rho is Hermitian up to roundoff
    rho = 0.5 * (rho + rho.conj().T)
    rho.setflags(write=False)
    return AnsatzState(rho=rho, c1=c1, c2=c2, delta=delta, lam=lam,
                       purity_class=kind, s=s, n=n, hamiltonian=h)


def mixed_state_purity(c1, lam):
    """``Tr[rho^2]`` of the rank-two branch, ``(1 + c1/lam^2)/4``."""
    return 0.25 * (1.0 + c1 / (lam * lam))
