import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Generic, Hashable, Iterable, Sequence, TypeVar

import numpy as np
from scipy import sparse
from typeguard import typechecked

from src.modules.errors import BasisTagMismatchError, DimensionMismatchError

logger = logging.getLogger(__name__)

TState = TypeVar("TState", bound=Hashable)


@dataclass(frozen=True)
class StateBasis(Generic[TState]):
    """An enumerated basis: states in a fixed order plus a tag identifying the enumeration."""

    states: tuple[TState, ...]
    tag: str

    @cached_property
    def index(self) -> dict[TState, int]:
        return {state: i for i, state in enumerate(self.states)}

    def __len__(self):
        return len(self.states)

    def __getitem__(self, i: int) -> TState:
        return self.states[i]

    def __iter__(self):
        return iter(self.states)


class SparseOperator:
    """
    A square complex matrix over an enumerated basis.

    ``mask`` holds the columns whose images were cut off by the truncation; algebraic statements only hold on the
    other columns. Operators are immutable; all arithmetic goes through :func:`combine`.
    """

    def __init__(self, matrix, basis_tag: str, mask: Iterable[int] = ()):
        m = sparse.csr_array(matrix, dtype=np.complex128)
        if m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(list(m.shape))
        m.sum_duplicates()
        m.eliminate_zeros()
        m.sort_indices()
        self._matrix = m
        self._basis_tag = basis_tag
        self._mask = frozenset(int(i) for i in mask)
        bad = [i for i in self._mask if not 0 <= i < m.shape[0]]
        if bad:
            raise ValueError(f"Mask indices {sorted(bad)} are outside of 0..{m.shape[0] - 1}")

    @classmethod
    def from_entries(
        cls,
        dimension: int,
        entries: Iterable[tuple[int, int, complex]],
        basis_tag: str,
        mask: Iterable[int] = (),
    ) -> "SparseOperator":
        entries = list(entries)
        rows = [e[0] for e in entries]
        cols = [e[1] for e in entries]
        data = np.array([e[2] for e in entries], dtype=np.complex128)
        matrix = sparse.coo_array((data, (rows, cols)), shape=(dimension, dimension))
        return cls(matrix, basis_tag, mask)

    @classmethod
    def from_column_images(cls, images: Sequence[int | None], basis_tag: str) -> "SparseOperator":
        """0/1 operator mapping basis vector j to basis vector images[j]; ``None`` images become masked columns."""
        entries = [(row, col, 1.0) for col, row in enumerate(images) if row is not None]
        mask = [col for col, row in enumerate(images) if row is None]
        return cls.from_entries(len(images), entries, basis_tag, mask)

    @classmethod
    def identity(cls, dimension: int, basis_tag: str) -> "SparseOperator":
        return cls(sparse.eye_array(dimension, format="csr"), basis_tag)

    @classmethod
    def zero(cls, dimension: int, basis_tag: str) -> "SparseOperator":
        return cls(sparse.csr_array((dimension, dimension)), basis_tag)

    @property
    def matrix(self) -> sparse.csr_array:
        return self._matrix.copy()

    @property
    def dimension(self) -> int:
        return self._matrix.shape[0]

    @property
    def basis_tag(self) -> str:
        return self._basis_tag

    @property
    def mask(self) -> frozenset[int]:
        return self._mask

    @property
    def nnz(self) -> int:
        return self._matrix.nnz

    def unmasked_columns(self) -> list[int]:
        return [j for j in range(self.dimension) if j not in self._mask]

    def entries(self) -> list[tuple[int, int, complex]]:
        """(row, col, value) triples sorted by row, then column."""
        coo = self._matrix.tocoo()
        triples = [(int(r), int(c), complex(v)) for r, c, v in zip(coo.row, coo.col, coo.data)]
        return sorted(triples, key=lambda t: (t[0], t[1]))

    def column(self, j: int) -> dict[int, complex]:
        col = self._matrix[:, [j]].tocoo()
        return {int(r): complex(v) for r, v in zip(col.row, col.data)}

    def to_dense(self) -> np.ndarray:
        return self._matrix.toarray()

    def with_mask(self, mask: Iterable[int]) -> "SparseOperator":
        return SparseOperator(self._matrix, self._basis_tag, self._mask | frozenset(mask))

    def without_masked_columns(self) -> "SparseOperator":
        """Same operator and mask with the entries of masked columns removed."""
        keep = np.ones(self.dimension)
        keep[sorted(self._mask)] = 0
        return SparseOperator(self._matrix @ sparse.diags_array(keep), self._basis_tag, self._mask)

    def allclose(self, other: "SparseOperator", atol: float = 1e-12) -> bool:
        if self.dimension != other.dimension:
            return False
        difference = abs(self._matrix - other._matrix)
        return difference.nnz == 0 or float(difference.max()) <= atol

    def __eq__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return (
            self._basis_tag == other._basis_tag
            and self._mask == other._mask
            and self.dimension == other.dimension
            and (self._matrix - other._matrix).count_nonzero() == 0
        )

    def __hash__(self):
        return hash((self._basis_tag, self._mask, self.dimension, self.nnz))

    def __repr__(self):
        return (
            f"SparseOperator(dimension={self.dimension}, nnz={self.nnz}, masked={len(self._mask)}, "
            f"tag={self._basis_tag!r})"
        )


@typechecked
class CombineKind(Enum):
    ADD = "add"
    SCALE = "scale"
    COMPOSE = "compose"
    ADJOINT = "adjoint"
    COMMUTATOR = "commutator"

    @staticmethod
    def from_str(s: str):
        s = s.lower()
        for kind in CombineKind:
            if kind.value == s:
                return kind
        raise ValueError(f"{s} is not a valid combination kind.")


def _check_compatible(operands: Sequence[SparseOperator]):
    tags = sorted({op.basis_tag for op in operands})
    if len(tags) > 1:
        raise BasisTagMismatchError(tags)
    dimensions = [op.dimension for op in operands]
    if len(set(dimensions)) > 1:
        raise DimensionMismatchError(dimensions)


def _compose_pair(left: SparseOperator, right: SparseOperator) -> SparseOperator:
    product = left._matrix @ right._matrix
    mask = set(left.mask | right.mask)
    if left.mask:
        # columns of the right factor that reach a truncated column of the left factor
        touched = right._matrix[sorted(left.mask), :].tocoo().col
        mask.update(int(c) for c in touched)
    return SparseOperator(product, left.basis_tag, mask)


def combine(kind: CombineKind, *operands: SparseOperator, scalar: complex | None = None) -> SparseOperator:
    """
    Exact arithmetic on operators over a common basis.

    ``ADD`` sums any number of operands, ``COMPOSE`` multiplies them left to right (the rightmost acts first),
    ``SCALE`` multiplies one operand by ``scalar``, ``ADJOINT`` is the conjugate transpose and ``COMMUTATOR`` is
    AB - BA. Masks are unioned; composition also masks every column whose intermediate image touches a masked
    column.

    :raises BasisTagMismatchError: If the operands live on different bases.
    :raises DimensionMismatchError: If the operands have different dimensions.
    """
    if not operands:
        raise ValueError("combine needs at least one operand")
    _check_compatible(operands)
    tag = operands[0].basis_tag

    if kind == CombineKind.ADD:
        total = operands[0]._matrix
        for op in operands[1:]:
            total = total + op._matrix
        return SparseOperator(total, tag, frozenset().union(*(op.mask for op in operands)))
    if kind == CombineKind.COMPOSE:
        result = operands[-1]
        for op in reversed(operands[:-1]):
            result = _compose_pair(op, result)
        return result
    if kind == CombineKind.SCALE:
        if len(operands) != 1 or scalar is None:
            raise ValueError("scale takes exactly one operand and a scalar")
        return SparseOperator(operands[0]._matrix * complex(scalar), tag, operands[0].mask)
    if kind == CombineKind.ADJOINT:
        if len(operands) != 1:
            raise ValueError("adjoint takes exactly one operand")
        return SparseOperator(operands[0]._matrix.conj().T, tag, operands[0].mask)
    if kind == CombineKind.COMMUTATOR:
        if len(operands) != 2:
            raise ValueError("commutator takes exactly two operands")
        a, b = operands
        ab, ba = _compose_pair(a, b), _compose_pair(b, a)
        return SparseOperator(ab._matrix - ba._matrix, tag, ab.mask | ba.mask)
    raise ValueError(f"Unsupported combination {kind}")


def add(*operands: SparseOperator) -> SparseOperator:
    return combine(CombineKind.ADD, *operands)


def scale(operand: SparseOperator, scalar: complex) -> SparseOperator:
    return combine(CombineKind.SCALE, operand, scalar=scalar)


def compose(*operands: SparseOperator) -> SparseOperator:
    return combine(CombineKind.COMPOSE, *operands)


def adjoint(operand: SparseOperator) -> SparseOperator:
    return combine(CombineKind.ADJOINT, operand)


def commutator(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return combine(CombineKind.COMMUTATOR, a, b)


def restrict_unmasked(operands: Sequence[SparseOperator]) -> tuple[list[int], list[sparse.csr_array]]:
    """Principal restriction of the operands to the indices unmasked in all of them."""
    _check_compatible(operands)
    masked = frozenset().union(*(op.mask for op in operands))
    dimension = operands[0].dimension if operands else 0
    indices = [i for i in range(dimension) if i not in masked]
    restricted = [op._matrix[indices, :][:, indices] for op in operands]
    logger.debug(f"Restricted {len(operands)} operator(s) to {len(indices)} of {dimension} indices")
    return indices, restricted
