"""
Dense complex linear algebra used for every operator and state in the package.

Matrices are plain numpy arrays of dtype complex128; the helpers here only add the
checks and conventions the rest of the package relies on.
"""

import numpy as np
import numpy.typing as npt

from dipising.errors import NonHermitianInputError

ComplexMatrix = npt.NDArray[np.complex128]

HERMITIAN_TOLERANCE = 1e-10


def as_matrix(values) -> ComplexMatrix:
    """
    Converts nested sequences or arrays into a 2-D complex128 matrix.
    """
    matrix = np.asarray(values, dtype=np.complex128)
    if matrix.ndim == 0:
        matrix = matrix.reshape(1, 1)
    if matrix.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {matrix.shape}")
    return matrix


def adjoint(a: ComplexMatrix) -> ComplexMatrix:
    return np.conj(a).T


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    return np.kron(as_matrix(a), as_matrix(b))


def hermiticity_error(a: ComplexMatrix) -> float:
    """
    Returns max|A - A^dagger| relative to max|A| (0 for the zero matrix).
    Non-square matrices have no adjoint of the same shape and report inf.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return float("inf")
    scale = np.max(np.abs(a)) if a.size else 0.0
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(a - adjoint(a))) / scale)


def is_hermitian(a: ComplexMatrix, tolerance: float = HERMITIAN_TOLERANCE) -> bool:
    a = as_matrix(a)
    return a.shape[0] == a.shape[1] and hermiticity_error(a) <= tolerance


def expm_hermitian(h: ComplexMatrix, scale: float) -> ComplexMatrix:
    """
    Computes exp(i * scale * h) for a Hermitian h by unitary diagonalization.

    The time-evolution operator exp(-i H t / hbar) is obtained with scale = -t / hbar.
    """
    h = as_matrix(h)
    if not is_hermitian(h):
        raise NonHermitianInputError(
            f"generator of shape {h.shape} is not Hermitian (relative error {hermiticity_error(h):.3e})"
        )
    # symmetrize so eigh sees exactly the Hermitian part
    eigenvalues, eigenvectors = np.linalg.eigh(0.5 * (h + adjoint(h)))
    phases = np.exp(1j * scale * eigenvalues)
    return (eigenvectors * phases) @ adjoint(eigenvectors)


def operator_norm(a: ComplexMatrix) -> float:
    """
    Spectral norm, the largest singular value of a.
    """
    a = as_matrix(a)
    if not np.any(a):
        return 0.0
    return float(np.linalg.norm(a, ord=2))
