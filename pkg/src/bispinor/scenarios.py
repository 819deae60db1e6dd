"""Closed-form results for the four families of external potentials.

Nothing here calls the numerical pipeline; these are independent evaluations
used to cross-check it. Each case fixes a concrete frame, and the
``*_config`` helpers build the matching :class:`PotentialConfig`:

* momentum ``P`` always points along +x;
* ``tensor`` / ``pseudotensor``: ``B = B (cos t, sin t, 0)``, so the vector
  ``omega_B = P x B = P B sin t z``;
* ``pseudovector``: ``W = W (cos t, sin t, 0)``;
* ``combined_W_perp``: ``B`` as in the tensor case, ``W = +W z`` (parallel to
  ``omega_B`` for ``sin t > 0``) or ``-W z`` when ``antiparallel``;
* ``combined_B_perp``: ``W`` as in the pseudovector case, ``B = +B z`` or
  ``-B z`` when ``antiparallel``.

The Bloch vector reported is the spin-factor vector ``a2``.
"""
import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import ConstraintViolated, DegenerateEnergy
from .potentials import PotentialConfig
from .tolerances import CONSTRAINT_ATOL, DEGENERATE_ATOL, NULL_O_RTOL, PURE_C2_MIN


class Validity(enum.Enum):
    EXACT = "Exact"
    CONSTRAINT_VIOLATED = "ConstraintViolated"


@dataclass(frozen=True, eq=False)
class ScenarioResult:
    c1: float
    c2: float
    lam: float
    a_squared: float
    measure: float
    validity: Validity = Validity.EXACT
    bloch_a: np.ndarray = None
    concurrence: float = 0.0
    config: PotentialConfig = None
    extra: dict = field(default_factory=dict)


def _sgn(k):
    if k not in (1, 2):
        raise ValueError(f"index must be 1 or 2, got {k!r}")
    return -1.0 if k == 1 else 1.0


def _lam(c1, c2, s, n):
    rad = c1 + 2.0 * _sgn(s) * np.sqrt(c2)
    if rad <= DEGENERATE_ATOL * max(1.0, c1):
        raise DegenerateEnergy(f"radicand {rad:.3e} vanishes")
    return _sgn(n) * np.sqrt(rad)


def _require_c2(c1, c2):
    # same thresholds the pipeline uses (||O||_F = 2 sqrt(c2))
    null = (0.5 * NULL_O_RTOL * max(1.0, c1)) ** 2
    if c2 <= max(PURE_C2_MIN, null):
        raise ConstraintViolated("c2 = 0: the pure-state branch does not exist")


def _conc(one_minus_a2):
    return float(np.sqrt(min(1.0, max(0.0, one_minus_a2))))


def _violation(strict, message):
    if strict:
        raise ConstraintViolated(message)


# -- pseudoscalar ------------------------------------------------------------

def pseudoscalar_config(m, mu, P):
    return PotentialConfig.from_kinetic(m=m, mu=mu, P=(P, 0.0, 0.0))


def pseudoscalar_discord_printed(m, mu, P, n=2):
    """``1/2 - sqrt(1/4 - mu^2 P^2 / lam^4)`` as printed for this case.

    Kept for comparison only: it does not equal the geometric discord of the
    rank-two state (see :func:`case_pseudoscalar`).
    """
    lam2 = P * P + m * m + mu * mu
    return 0.5 - np.sqrt(max(0.0, 0.25 - mu * mu * P * P / (lam2 * lam2)))


def case_pseudoscalar(m, mu, P, n=2):
    """Mixed rank-two state of a free particle plus pseudoscalar potential.

    ``O`` vanishes, the state is separable (concurrence 0) and its geometric
    discord for measurements on the parity factor is
    ``min(P^2, m^2 + mu^2) / (4 lam^2)`` with ``lam^2 = P^2 + m^2 + mu^2``;
    for measurements on the spin factor it is zero.
    """
    if P < 0:
        raise ValueError("P must be non-negative")
    M2 = m * m + mu * mu
    c1 = P * P + M2
    if c1 <= DEGENERATE_ATOL:
        raise DegenerateEnergy("all couplings vanish")
    lam = _sgn(n) * np.sqrt(c1)
    parity_a = _sgn(n) * np.array([0.0, -mu, m]) / abs(lam)
    return ScenarioResult(
        c1=c1, c2=0.0, lam=lam, a_squared=0.0,
        measure=min(P * P, M2) / (4.0 * c1),
        bloch_a=np.zeros(3), concurrence=0.0,
        config=pseudoscalar_config(m, mu, P),
        extra={"discord_geo_2": 0.0,
               "discord_printed": pseudoscalar_discord_printed(m, mu, P),
               "parity_bloch": parity_a,
               "purity": 0.25 * (1.0 + c1 / (lam * lam))},
    )


# -- tensor / pseudotensor + pseudoscalar ----------------------------------

def tensor_config(m, mu, kappa, B, P, theta, pseudotensor=False):
    Bv = B * np.array([np.cos(theta), np.sin(theta), 0.0])
    if pseudotensor:
        return PotentialConfig.from_kinetic(m=m, mu=mu, P=(P, 0.0, 0.0), chi=kappa, B=Bv)
    return PotentialConfig.from_kinetic(m=m, mu=mu, P=(P, 0.0, 0.0), kappa=kappa, B=Bv)


def case_tensor_pseudoscalar(m, mu, kappa, B, P, theta, s=1, n=2, pseudotensor=False):
    """Pure state for tensor (or pseudotensor) plus pseudoscalar potentials.

    With ``w = P B sin(theta)`` and ``g`` the coupling (``kappa`` or ``chi``)::

        c1 = P^2 + m^2 + mu^2 + g^2 B^2
        c2 = g^2 (m^2 B^2 + w^2)            tensor
        c2 = g^2 (mu^2 B^2 + w^2)           pseudotensor

    Tensor Bloch vector: ``(-1)^(s+1) kappa/sqrt(c2) [m B - (-1)^n mu omega_B/|lam|]``.
    Pseudotensor: ``(-1)^s chi/sqrt(c2) [mu B + (-1)^n m omega_B/|lam|]``.
    """
    if B < 0 or P < 0:
        raise ValueError("B and P must be non-negative")
    if not (-1e-12 <= theta <= np.pi + 1e-12):
        raise ValueError("theta must lie in [0, pi]")
    g = kappa
    # the pseudotensor case is the tensor case with the roles of m and mu swapped
    ma, mb = (mu, m) if pseudotensor else (m, mu)
    sin_t = np.sin(theta)
    w = P * B * sin_t
    c1 = P * P + m * m + mu * mu + g * g * B * B
    c2 = g * g * (ma * ma * B * B + w * w)
    _require_c2(c1, c2)
    lam = _lam(c1, c2, s, n)
    Bv = B * np.array([np.cos(theta), sin_t, 0.0])
    wv = np.array([0.0, 0.0, w])
    r = np.sqrt(c2)
    if pseudotensor:
        a = _sgn(s) * g / r * (mu * Bv + _sgn(n) * m * wv / abs(lam))
    else:
        a = -_sgn(s) * g / r * (m * Bv - _sgn(n) * mu * wv / abs(lam))
    # 1 - a^2 = w^2 (lam^2 - mb^2) / (lam^2 (ma^2 B^2 + w^2)); for s = 1 the
    # factor lam^2 - mb^2 is a sum of squares, which avoids cancellation
    root = abs(g) * B * np.sqrt(ma * ma + (P * sin_t) ** 2)
    if s == 1:
        lam2_minus = (abs(g) * B - np.sqrt(ma * ma + (P * sin_t) ** 2)) ** 2 \
            + (P * np.cos(theta)) ** 2
    else:
        lam2_minus = P * P + ma * ma + g * g * B * B + 2.0 * root
    lam2 = lam * lam
    one_minus = w * w * lam2_minus / (lam2 * (ma * ma * B * B + w * w))
    conc = _conc(one_minus)
    return ScenarioResult(
        c1=c1, c2=c2, lam=lam, a_squared=float(a @ a), measure=conc,
        bloch_a=a, concurrence=conc,
        config=tensor_config(m, mu, kappa, B, P, theta, pseudotensor),
        extra={"one_minus_a2": one_minus},
    )


def tensor_vanishing_field(m, P, kappa=1.0):
    """Field strength ``B`` with ``kappa B = sqrt(P^2 + m^2)``."""
    return np.sqrt(P * P + m * m) / kappa


# -- pseudovector + pseudoscalar -------------------------------------------

def pseudovector_config(m, mu, q, W, P, theta):
    Wv = W * np.array([np.cos(theta), np.sin(theta), 0.0])
    return PotentialConfig.from_kinetic(m=m, mu=mu, P=(P, 0.0, 0.0), q=q, W=Wv)


def case_pseudovector(m, mu, q, W, P, theta, s=1, n=2, strict=True):
    """Pure state for pseudovector plus pseudoscalar potentials (``B = 0``).

    Valid when ``q = 0`` or ``W . P = 0``. With ``M^2 = m^2 + mu^2``::

        c1 = P^2 + M^2 + q^2 + W^2
        c2 = q^2 P^2 + (M^2 + q^2) W^2 + (P . W)^2
        a  = (-1)^(s+1) q P/sqrt(c2) + (-1)^n W/|lam|
             + (-1)^(s+n) [(M^2 + q^2) W + (P . W) P] / (|lam| sqrt(c2))
        1 - a^2 = M^2 |P x W|^2 / (lam^2 c2)
    """
    M2 = m * m + mu * mu
    Pv = np.array([P, 0.0, 0.0])
    Wv = W * np.array([np.cos(theta), np.sin(theta), 0.0])
    pw = Pv @ Wv
    validity = Validity.EXACT
    if abs(q) > CONSTRAINT_ATOL and abs(pw) > CONSTRAINT_ATOL * max(1.0, P * abs(W)):
        _violation(strict, "needs q = 0 or W . P = 0")
        validity = Validity.CONSTRAINT_VIOLATED
    c1 = P * P + M2 + q * q + W * W
    c2 = q * q * P * P + (M2 + q * q) * W * W + pw * pw
    _require_c2(c1, c2)
    lam = _lam(c1, c2, s, n)
    r, L = np.sqrt(c2), abs(lam)
    ss, sn = _sgn(s), _sgn(n)
    a = (-ss * q * Pv / r + sn * Wv / L
         + ss * sn * ((M2 + q * q) * Wv + pw * Pv) / (L * r))
    cross2 = (P * W * np.sin(theta)) ** 2
    one_minus = M2 * cross2 / (lam * lam * c2)
    conc = _conc(one_minus)
    return ScenarioResult(
        c1=c1, c2=c2, lam=lam, a_squared=float(a @ a), measure=conc,
        validity=validity, bloch_a=a, concurrence=conc,
        config=pseudovector_config(m, mu, q, W, P, theta),
        extra={"one_minus_a2": one_minus},
    )


# -- pseudovector + tensor + pseudoscalar ----------------------------------

def case_combined(m, mu, q, W, B, P, s=1, n=2, kappa=1.0, strict=True):
    """Pure state with pseudoscalar, pseudovector and tensor potentials (``chi = 0``).

    Requires ``m W.B + q P.W = 0``. Writing ``b = kappa B`` and
    ``w = P x b``::

        c1 = P^2 + m^2 + mu^2 + q^2 + W^2 + b^2
        c2 = (m b + q P)^2 + (m^2 + mu^2 + q^2) W^2 + 2 mu W.w + w^2
             + (P.W)^2 + (W.b)^2
        a  = (-1)^(s+1) (m b + q P)/sqrt(c2) + (-1)^n W/|lam|
             + (-1)^(s+n) [(m^2 + mu^2 + q^2) W + mu w + (P.W) P + (W.b) b]
               / (|lam| sqrt(c2))
    """
    W = np.asarray(W, dtype=float)
    Bv = np.asarray(B, dtype=float)
    Pv = np.asarray(P, dtype=float)
    b = kappa * Bv
    validity = Validity.EXACT
    resid = m * (W @ b) + q * (Pv @ W)
    if abs(resid) > CONSTRAINT_ATOL * max(1.0, np.linalg.norm(W) * (
            abs(m) * np.linalg.norm(b) + abs(q) * np.linalg.norm(Pv))):
        _violation(strict, f"m W.B + q P.W = {resid:.3e} must vanish")
        validity = Validity.CONSTRAINT_VIOLATED
    w = np.cross(Pv, b)
    M2q = m * m + mu * mu + q * q
    u = m * b + q * Pv
    pw, wb = Pv @ W, W @ b
    c1 = Pv @ Pv + M2q + W @ W + b @ b
    c2 = u @ u + M2q * (W @ W) + 2.0 * mu * (W @ w) + w @ w + pw * pw + wb * wb
    _require_c2(c1, c2)
    lam = _lam(c1, c2, s, n)
    r, L = np.sqrt(c2), abs(lam)
    ss, sn = _sgn(s), _sgn(n)
    a = (-ss * u / r + sn * W / L
         + ss * sn * (M2q * W + mu * w + pw * Pv + wb * b) / (L * r))
    a2 = float(a @ a)
    conc = _conc(1.0 - a2)
    cfg = PotentialConfig.from_kinetic(m=m, mu=mu, P=Pv, q=q, W=W, kappa=kappa, B=Bv)
    return ScenarioResult(
        c1=float(c1), c2=float(c2), lam=lam, a_squared=a2, measure=conc,
        validity=validity, bloch_a=a, concurrence=conc, config=cfg)


def combined_w_perp_config(mu, W, P, B, theta, antiparallel=False, kappa=1.0):
    Wv = (-W if antiparallel else W) * np.array([0.0, 0.0, 1.0])
    Bv = B * np.array([np.cos(theta), np.sin(theta), 0.0])
    return PotentialConfig.from_kinetic(mu=mu, P=(P, 0.0, 0.0), W=Wv, kappa=kappa, B=Bv)


def combined_b_perp_config(mu, W, P, B, theta, antiparallel=False, kappa=1.0):
    Wv = W * np.array([np.cos(theta), np.sin(theta), 0.0])
    Bv = (-B if antiparallel else B) * np.array([0.0, 0.0, 1.0])
    return PotentialConfig.from_kinetic(mu=mu, P=(P, 0.0, 0.0), W=Wv, kappa=kappa, B=Bv)


def case_combined_w_perp(mu, W, P, B, theta, s=1, n=2, antiparallel=False, kappa=1.0):
    """Massless, ``q = 0`` combined case with ``W`` normal to the ``P``-``B`` plane.

    With ``x = sin(theta)`` and ``e = +1`` (``-1`` when antiparallel)::

        c2  = (mu W + e P b x)^2
        a^2 = (W + (-1)^s mu sign(mu W + e P b x))^2 / lam^2
        1 - a^2 = (P^2 + b^2 + 2 (-1)^s sign(.) e P b x) / lam^2
    """
    b = kappa * B
    e = -1.0 if antiparallel else 1.0
    x = np.sin(theta)
    inner = mu * W + e * P * b * x
    c1 = mu * mu + P * P + W * W + b * b
    c2 = inner * inner
    _require_c2(c1, c2)
    lam = _lam(c1, c2, s, n)
    sg = np.sign(inner)
    ss = _sgn(s)
    a_z = _sgn(n) / abs(lam) * e * (W + ss * mu * sg)
    one_minus = (P * P + b * b + 2.0 * ss * sg * e * P * b * x) / (lam * lam)
    conc = _conc(one_minus)
    return ScenarioResult(
        c1=c1, c2=c2, lam=lam, a_squared=a_z * a_z, measure=conc,
        bloch_a=np.array([0.0, 0.0, a_z]), concurrence=conc,
        config=combined_w_perp_config(mu, W, P, B, theta, antiparallel, kappa),
        extra={"one_minus_a2": one_minus},
    )


def case_combined_b_perp(mu, W, P, B, theta, s=1, n=2, antiparallel=False, kappa=1.0):
    """Massless, ``q = 0`` combined case with ``B`` normal to the ``P``-``W`` plane."""
    cfg = combined_b_perp_config(mu, W, P, B, theta, antiparallel, kappa)
    res = case_combined(0.0, mu, 0.0, cfg.Wvec, cfg.Bvec, cfg.P, s, n, kappa=kappa)
    return res


def critical_angle(mu, W, P, B):
    """Angle where the combined-case Bloch length jumps: ``sin t_c = mu W / (P B)``.

    Returns ``None`` unless ``|mu W| < P B``.
    """
    if P * B <= 0:
        raise ValueError("P * B must be positive")
    ratio = mu * W / (P * B)
    if not (-1.0 < ratio < 1.0):
        return None
    return float(np.arcsin(ratio))


def ur_limit_combined(W, B, theta):
    """Ultra-relativistic concurrence of the ``B``-normal combined case.

    ``a^2 -> W^2 cos^2 t / (B^2 + W^2 cos^2 t)``, so ``C = |B| / sqrt(B^2 + W^2 cos^2 t)``.
    """
    if W == 0 and B == 0:
        raise ValueError("W and B cannot both vanish")
    wc2 = (W * np.cos(theta)) ** 2
    return float(abs(B) / np.sqrt(B * B + wc2))


def ur_limit_a_squared(W, B, theta):
    wc2 = (W * np.cos(theta)) ** 2
    return float(wc2 / (B * B + wc2))
