"""External-field configurations and the reduced Dirac Hamiltonian.

All fields are constant and uniform (natural units, hbar = c = 1). The
Hamiltonian assembled here is::

    H = A0 I + gamma^0 (m + phi_S) + alpha . P + i gamma^0 gamma5 mu
        - gamma5 q + gamma5 alpha . W
        + i gamma . X + gamma5 gamma . K

with kinetic momentum ``P = p - A`` and effective tensor-class fields
``X = chi B + kappa E`` and ``K = kappa B - chi E``.
"""
from dataclasses import dataclass, field, replace

import numpy as np

from .clifford import METRIC, build_gamma_set
from .matcore import (I2, I4, PAULI, SIGMA_X, SIGMA_Y, SIGMA_Z, as_vector3,
                      dot_operators, is_hermitian, kron)
from .tolerances import TRACELESS_RTOL

_ZERO3 = (0.0, 0.0, 0.0)


def _vec(default=_ZERO3):
    return field(default_factory=lambda: np.array(default, dtype=float))


@dataclass(frozen=True, eq=False)
class PotentialConfig:
    """Coupling constants and field vectors defining a Dirac Hamiltonian.

    Scalars: ``m`` mass, ``phi_S`` scalar potential, ``mu`` pseudoscalar
    coupling, ``A0`` vector time component, ``q`` pseudovector time component,
    ``kappa`` tensor (anomalous magnetic moment) coupling, ``chi`` pseudotensor
    (electric moment) coupling. Vectors: ``pvec`` canonical momentum, ``Avec``
    vector potential, ``Wvec`` pseudovector spatial part, ``Bvec`` and ``Evec``
    the magnetic and electric fields.
    """

    m: float = 0.0
    phi_S: float = 0.0
    mu: float = 0.0
    A0: float = 0.0
    Avec: np.ndarray = _vec()
    q: float = 0.0
    Wvec: np.ndarray = _vec()
    kappa: float = 0.0
    chi: float = 0.0
    Bvec: np.ndarray = _vec()
    Evec: np.ndarray = _vec()
    pvec: np.ndarray = _vec()

    def __post_init__(self):
        for name in ("Avec", "Wvec", "Bvec", "Evec", "pvec"):
            v = as_vector3(getattr(self, name)).copy()
            v.setflags(write=False)
            object.__setattr__(self, name, v)
        for name in ("m", "phi_S", "mu", "A0", "q", "kappa", "chi"):
            x = float(getattr(self, name))
            if not np.isfinite(x):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, x)

    @classmethod
    def from_kinetic(cls, m=0.0, mu=0.0, P=_ZERO3, q=0.0, W=_ZERO3,
                     kappa=0.0, chi=0.0, B=_ZERO3, E=_ZERO3):
        """Shortcut taking the kinetic momentum directly (``A = 0``)."""
        return cls(m=m, mu=mu, pvec=P, q=q, Wvec=W, kappa=kappa, chi=chi,
                   Bvec=B, Evec=E)

    def replace(self, **changes):
        return replace(self, **changes)

    @property
    def m_eff(self):
        return self.m + self.phi_S

    @property
    def P(self):
        """Kinetic momentum ``p - A``."""
        return self.pvec - self.Avec

    @property
    def X(self):
        """Field multiplying ``i gamma``: ``chi B + kappa E``."""
        return self.chi * self.Bvec + self.kappa * self.Evec

    @property
    def K(self):
        """Field multiplying ``gamma5 gamma``: ``kappa B - chi E``."""
        return self.kappa * self.Bvec - self.chi * self.Evec

    def __eq__(self, other):
        if not isinstance(other, PotentialConfig):
            return NotImplemented
        return all(np.array_equal(getattr(self, f), getattr(other, f))
                   for f in self.__dataclass_fields__)

    def __repr__(self):
        parts = []
        for f in self.__dataclass_fields__:
            v = getattr(self, f)
            if np.any(v != 0):
                parts.append(f"{f}={v.tolist() if isinstance(v, np.ndarray) else v}")
        return f"PotentialConfig({', '.join(parts)})"


@dataclass(frozen=True, eq=False)
class DiracHamiltonian:
    matrix: np.ndarray
    config: PotentialConfig
    includes_A0: bool

    @property
    def is_traceless(self):
        return abs(np.trace(self.matrix)) <= TRACELESS_RTOL * max(
            1.0, np.linalg.norm(self.matrix))


def _assemble(cfg, *, X, K):
    gs = build_gamma_set()
    g0, g5 = gs.beta, gs.gamma5
    h = g0 * cfg.m_eff
    h = h + dot_operators(cfg.P, gs.alpha)
    h = h + 1j * (g0 @ g5) * cfg.mu
    h = h - g5 * cfg.q
    h = h + g5 @ dot_operators(cfg.Wvec, gs.alpha)
    h = h + 1j * dot_operators(X, gs.gamma_vec)
    h = h + g5 @ dot_operators(K, gs.gamma_vec)
    return h


def build_hamiltonian(config, subtract_A0=True):
    """Assemble the Dirac Hamiltonian of ``config``.

    With ``subtract_A0`` (the default) the ``A0 I`` term is dropped, giving the
    traceless operator the ansatz works with.
    """
    h = _assemble(config, X=config.X, K=config.K)
    if not subtract_A0:
        h = h + config.A0 * I4
    h.setflags(write=False)
    return DiracHamiltonian(matrix=h, config=config, includes_A0=not subtract_A0)


def su2su2_form(config, subtract_A0=True):
    """The same Hamiltonian built only from Pauli Kronecker products."""
    c = config
    sx_s = [kron(SIGMA_X, s) for s in PAULI]
    sy_s = [kron(SIGMA_Y, s) for s in PAULI]
    sz_s = [kron(SIGMA_Z, s) for s in PAULI]
    i_s = [kron(I2, s) for s in PAULI]
    h = kron(SIGMA_Z, I2) * c.m_eff                       # mass + scalar
    h = h - kron(SIGMA_Y, I2) * c.mu                      # pseudoscalar
    h = h + dot_operators(c.pvec, sx_s)                   # kinetic
    h = h - dot_operators(c.Avec, sx_s)                   # vector, spatial
    h = h - kron(SIGMA_X, I2) * c.q + dot_operators(c.Wvec, i_s)   # pseudovector
    h = h - c.kappa * (dot_operators(c.Evec, sy_s) + dot_operators(c.Bvec, sz_s))  # tensor
    h = h - c.chi * dot_operators(c.Bvec, sy_s) + c.chi * dot_operators(c.Evec, sz_s)  # pseudotensor
    if not subtract_A0:
        h = h + c.A0 * kron(I2, I2)
    return h


def field_tensor(E, B):
    """Covariant field-strength ``F_{mu nu}`` with ``F_{0i} = E_i``, ``F_{ij} = -eps_{ijk} B_k``."""
    E = as_vector3(E)
    B = as_vector3(B)
    F = np.zeros((4, 4))
    F[0, 1:] = E
    F[1:, 0] = -E
    F[1, 2], F[2, 3], F[3, 1] = -B[2], -B[0], -B[1]
    F[2, 1], F[3, 2], F[1, 3] = B[2], B[0], B[1]
    return F


def covariant_potentials(config):
    """Covariant potentials ``U`` of each Poincare class.

    Returns a dict keyed by class name; the Hermitian potential of each class
    is ``gamma^0 @ U``.
    """
    gs = build_gamma_set()
    g5 = gs.gamma5
    c = config
    F = field_tensor(c.Evec, c.Bvec)
    sF = sum(gs.sigma_munu(a, b) * F[a, b] for a in range(4) for b in range(4))
    A_up = np.concatenate([[c.A0], c.Avec])
    W_up = np.concatenate([[c.q], c.Wvec])
    gl = gs.gamma_lower
    return {
        "scalar": I4 * c.phi_S,
        "pseudoscalar": 1j * g5 * c.mu,
        "vector": sum(gl[mu] * A_up[mu] for mu in range(4)),
        "pseudovector": sum(g5 @ gl[mu] * W_up[mu] for mu in range(4)),
        "tensor": 0.5 * c.kappa * sF,
        "pseudotensor": -0.5j * c.chi * (g5 @ sF),
    }


def su2su2_potentials(config):
    """Pauli-product form of each Hermitian potential class."""
    c = config
    sy_s = [kron(SIGMA_Y, s) for s in PAULI]
    sz_s = [kron(SIGMA_Z, s) for s in PAULI]
    return {
        "scalar": kron(SIGMA_Z, I2) * c.phi_S,
        "pseudoscalar": -kron(SIGMA_Y, I2) * c.mu,
        "vector": kron(I2, I2) * c.A0 - dot_operators(c.Avec, [kron(SIGMA_X, s) for s in PAULI]),
        "pseudovector": -kron(SIGMA_X, I2) * c.q + dot_operators(c.Wvec, [kron(I2, s) for s in PAULI]),
        "tensor": -c.kappa * dot_operators(c.Evec, sy_s) - c.kappa * dot_operators(c.Bvec, sz_s),
        "pseudotensor": -c.chi * dot_operators(c.Bvec, sy_s) + c.chi * dot_operators(c.Evec, sz_s),
    }


def check_hamiltonian(h):
    """True when ``h.matrix`` is Hermitian and, if ``A0`` was dropped, traceless."""
    ok = is_hermitian(h.matrix, rtol=1e-13)
    if not h.includes_A0:
        ok = ok and h.is_traceless
    return ok


__all__ = [
    "PotentialConfig", "DiracHamiltonian", "build_hamiltonian", "su2su2_form",
    "covariant_potentials", "su2su2_potentials", "field_tensor", "METRIC",
    "check_hamiltonian",
]
