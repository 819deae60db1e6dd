"""Small dense complex linear algebra on 2x2 and 4x4 matrices.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``; real
3-vectors are ``float64`` arrays of shape ``(3,)``. The eigen-solvers are thin,
checked wrappers around LAPACK (via :mod:`numpy.linalg`).
"""
import numpy as np

from .errors import NegativeSpectrum, NoConvergence, NonFinite, NotHermitian
from .tolerances import HERMITIAN_RTOL, PSD_CLAMP

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

for _m in (I2, I4, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _m.setflags(write=False)


def _finite(m, name="matrix"):
    m = np.asarray(m)
    if not np.all(np.isfinite(m)):
        raise NonFinite(f"{name} has non-finite entries")
    return m


def as_matrix(m, n=4):
    """Return ``m`` as a finite complex ``(n, n)`` array."""
    m = _finite(np.asarray(m, dtype=complex))
    if m.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got shape {m.shape}")
    return m


def as_vector3(v):
    """Return ``v`` as a finite real array of shape ``(3,)``."""
    v = _finite(np.asarray(v, dtype=float), "vector")
    if v.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {v.shape}")
    return v


def kron(a, b):
    """Kronecker product of two 2x2 matrices; block ``(i, j)`` is ``a[i, j] * b``."""
    return np.kron(as_matrix(a, 2), as_matrix(b, 2))


def dagger(m):
    return np.conj(np.swapaxes(m, -1, -2))


def frobenius(m):
    return float(np.linalg.norm(m))


def commutator(a, b):
    return a @ b - b @ a


def anticommutator(a, b):
    return a @ b + b @ a


def dot_operators(v, ops):
    """Contract a 3-vector with a triple of operators, ``sum_i v[i] * ops[i]``."""
    return v[0] * ops[0] + v[1] * ops[1] + v[2] * ops[2]


def hermiticity_defect(m):
    return frobenius(m - dagger(m))


def is_hermitian(m, rtol=HERMITIAN_RTOL):
    m = np.asarray(m)
    return hermiticity_defect(m) <= rtol * max(1.0, frobenius(m))


def _check_hermitian(m):
    if not is_hermitian(m):
        raise NotHermitian(
            f"matrix is not Hermitian (defect {hermiticity_defect(m):.3e})")


def hermitian_eigensystem(m):
    """Eigen-decomposition of a Hermitian matrix.

    Parameters
    ----------
    m : array_like, shape (n, n)
        Hermitian matrix (n is 2 or 4 in practice).

    Returns
    -------
    eigenvalues : ndarray, shape (n,)
        Real eigenvalues in ascending order.
    eigenvectors : ndarray, shape (n, n)
        Orthonormal eigenvectors stored as columns.

    Raises
    ------
    NotHermitian
        If ``||m - m^dagger||_F`` exceeds the Hermiticity tolerance.
    NoConvergence
        If LAPACK fails to converge.
    """
    m = _finite(np.asarray(m, dtype=complex))
    _check_hermitian(m)
    # symmetrise so roundoff in the input cannot leak into the spectrum
    h = 0.5 * (m + dagger(m))
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return w, v


def general_eigenvalues(m):
    """Eigenvalues (as complex numbers) of an arbitrary square matrix."""
    m = _finite(np.asarray(m, dtype=complex))
    try:
        return np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def clamp_spectrum(w, clamp=PSD_CLAMP):
    """Zero eigenvalues in ``[-clamp, 0)``; raise on anything more negative."""
    w = np.asarray(w, dtype=float)
    if w.size and w.min() < -clamp:
        raise NegativeSpectrum(f"eigenvalue {w.min():.3e} below -{clamp:g}")
    return np.clip(w, 0.0, None)


def sqrt_psd(m):
    """Principal square root of a Hermitian positive semi-definite matrix."""
    w, v = hermitian_eigensystem(m)
    w = clamp_spectrum(w)
    return (v * np.sqrt(w)) @ dagger(v)


def matrix_function(m, f):
    """Apply a scalar function to a Hermitian matrix through its spectrum."""
    w, v = hermitian_eigensystem(m)
    return (v * f(w)) @ dagger(v)
