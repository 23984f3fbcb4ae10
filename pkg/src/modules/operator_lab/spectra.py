import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg
from scipy import sparse

from src.modules.errors import DenseCapExceededError

from .sparse_operator import SparseOperator, restrict_unmasked

logger = logging.getLogger(__name__)

DEFAULT_DENSE_CAP = 2000
DEFAULT_COMMUTANT_CAP = 40
SPECTRUM_TOLERANCE = 1e-9
NULL_SPACE_THRESHOLD = 1e-8


@dataclass(frozen=True)
class Spectrum:
    # sorted by (real, imaginary), both rounded to the tolerance
    eigenvalues: tuple[complex, ...]
    tolerance: float
    hermitian: bool

    def __len__(self):
        return len(self.eigenvalues)

    def to_rows(self) -> list[tuple[float, float]]:
        return [(z.real, z.imag) for z in self.eigenvalues]


@dataclass(frozen=True)
class CommutantEstimate:
    dimension: int
    # size of the restricted basis the estimate was computed on
    size: int
    smallest_retained: float | None
    largest_discarded: float | None
    threshold: float

    def to_text(self) -> str:
        retained = "-" if self.smallest_retained is None else f"{self.smallest_retained:.6e}"
        discarded = "-" if self.largest_discarded is None else f"{self.largest_discarded:.6e}"
        return (
            f"commutant_dimension: {self.dimension}\n"
            f"restricted_size: {self.size}\n"
            f"threshold: {self.threshold:.3e}\n"
            f"smallest_retained_singular_value: {retained}\n"
            f"largest_discarded_singular_value: {discarded}\n"
        )


def _is_hermitian(matrix: np.ndarray, tolerance: float) -> bool:
    return matrix.size == 0 or bool(np.max(np.abs(matrix - matrix.conj().T)) <= tolerance)


def spectrum(
    op: SparseOperator,
    dense_cap: int = DEFAULT_DENSE_CAP,
    unmasked_only: bool = False,
    tolerance: float = SPECTRUM_TOLERANCE,
) -> Spectrum:
    """
    Eigenvalues of an operator by a dense solve. Hermitian operators use the symmetric solver and have an exactly
    real spectrum.

    :param unmasked_only: Use the principal restriction to the unmasked indices.
    :raises DenseCapExceededError: If the (restricted) dimension exceeds ``dense_cap``.
    """
    if unmasked_only:
        _, (matrix,) = restrict_unmasked([op])
    else:
        matrix = op.matrix
    dimension = matrix.shape[0]
    if dimension > dense_cap:
        raise DenseCapExceededError(dimension, dense_cap)
    dense = matrix.toarray()
    hermitian = _is_hermitian(dense, tolerance)
    if dimension == 0:
        values = np.zeros(0, dtype=np.complex128)
    elif hermitian:
        values = scipy.linalg.eigvalsh(dense).astype(np.complex128)
    else:
        values = scipy.linalg.eigvals(dense)
    decimals = int(round(-np.log10(tolerance)))
    order = np.lexsort((np.round(values.imag, decimals), np.round(values.real, decimals)))
    eigenvalues = tuple(complex(z) for z in values[order])
    logger.debug(f"Spectrum of a {dimension}-dimensional operator, hermitian={hermitian}")
    return Spectrum(eigenvalues=eigenvalues, tolerance=tolerance, hermitian=hermitian)


def commutant_dim_estimate(
    generators: Sequence[SparseOperator],
    cap: int = DEFAULT_COMMUTANT_CAP,
    threshold: float = NULL_SPACE_THRESHOLD,
) -> CommutantEstimate:
    """
    Dimension of {X : [A, X] = 0 for every generator A} on the unmasked indices.

    With column-major vectorization, vec(AX - XA) = (I (x) A - A^T (x) I) vec(X). The constraints of all
    generators are stacked and the null space dimension is read off the singular values, using a threshold
    relative to the largest one.

    :raises DenseCapExceededError: If the restricted dimension exceeds ``cap``.
    """
    if not generators:
        raise ValueError("commutant_dim_estimate needs at least one generator")
    indices, restricted = restrict_unmasked(generators)
    m = len(indices)
    if m > cap:
        raise DenseCapExceededError(m, cap)
    if m == 0:
        return CommutantEstimate(0, 0, None, None, threshold)
    identity = sparse.eye_array(m, format="csr", dtype=np.complex128)
    blocks = [sparse.kron(identity, a) - sparse.kron(a.T, identity) for a in restricted]
    constraints = sparse.vstack(blocks).toarray()
    singular_values = scipy.linalg.svd(constraints, compute_uv=False)
    largest = float(singular_values[0]) if singular_values.size else 0.0
    cutoff = threshold * largest if largest > 0 else threshold
    retained = singular_values[singular_values > cutoff]
    discarded = singular_values[singular_values <= cutoff]
    dimension = m * m - retained.size
    logger.info(f"Commutant dimension {dimension} on {m} unmasked indices ({len(generators)} generator(s))")
    return CommutantEstimate(
        dimension=int(dimension),
        size=m,
        smallest_retained=float(retained.min()) if retained.size else None,
        largest_discarded=float(discarded.max()) if discarded.size else None,
        threshold=cutoff,
    )
