"""
Matrix Market interchange for :class:`SparseOperator`.

Operators are written as ``coordinate complex general`` files. The basis tag and the truncation mask are stored in
structured comment lines directly after the header::

    %%MatrixMarket matrix coordinate complex general
    %%basis-tag: ball:<s|>:r3:n7
    %%mask: 0 2

Mask indices are 0-based basis positions, separated by single spaces; an empty mask gives ``%%mask:``. The reader
accepts any number of leading ``%`` on these lines.
"""

import io
import logging
import os
import re
from enum import Enum

import numpy as np
import scipy.io
from typeguard import typechecked

from src.modules.errors import MatrixMarketFormatError

from .sparse_operator import SparseOperator

logger = logging.getLogger(__name__)

DEFAULT_BASIS_TAG = "matrix-market"

_HEADER_RE = re.compile(
    r"%%MatrixMarket\s+matrix\s+coordinate\s+(real|complex|integer|pattern)\s+"
    r"(general|symmetric|hermitian|skew-symmetric)\s*$",
    re.IGNORECASE,
)
_VALUES_PER_FIELD = {"pattern": 0, "real": 1, "integer": 1, "complex": 2}


def to_matrix_market(op: SparseOperator) -> str:
    comment = f"%basis-tag: {op.basis_tag}\n%mask:" + "".join(f" {i}" for i in sorted(op.mask))
    buffer = io.BytesIO()
    scipy.io.mmwrite(
        buffer, op.matrix.tocoo(), comment=comment, field="complex", precision=17, symmetry="general"
    )
    return buffer.getvalue().decode("ascii")


def _validate(text: str) -> tuple[str, set[int]]:
    """Checks the structure of a coordinate file and returns its basis tag and mask."""
    lines = text.splitlines()
    if not lines:
        raise MatrixMarketFormatError(1, 1, "empty file")
    header = _HEADER_RE.match(lines[0].strip())
    if not header:
        raise MatrixMarketFormatError(1, 1, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'")
    values_per_entry = _VALUES_PER_FIELD[header.group(1).lower()]

    tag, mask, mask_line = DEFAULT_BASIS_TAG, set(), 0
    line_no = 1
    size = None
    for line_no, line in enumerate(lines[1:], start=2):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("%"):
            content = stripped.lstrip("%").strip()
            if content.startswith("basis-tag:"):
                tag = content[len("basis-tag:") :].strip()
            elif content.startswith("mask:"):
                mask_line = line_no
                for token in content[len("mask:") :].split():
                    if not token.isdigit():
                        raise MatrixMarketFormatError(line_no, line.find(token) + 1, f"invalid mask index {token!r}")
                    mask.add(int(token))
            continue
        size = stripped
        break
    if size is None:
        raise MatrixMarketFormatError(line_no + 1, 1, "missing size line")
    tokens = size.split()
    if len(tokens) != 3 or not all(t.isdigit() for t in tokens):
        raise MatrixMarketFormatError(line_no, 1, "expected '<rows> <columns> <entries>'")
    rows, cols, count = map(int, tokens)
    if rows != cols:
        raise MatrixMarketFormatError(line_no, 1, f"operators are square, got {rows}x{cols}")
    if any(i >= rows for i in mask):
        raise MatrixMarketFormatError(mask_line, 1, f"mask index out of range 0..{rows - 1}")

    seen = 0
    for entry_no, line in enumerate(lines[line_no:], start=line_no + 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2 + values_per_entry:
            raise MatrixMarketFormatError(entry_no, 1, f"expected {2 + values_per_entry} fields, got {len(tokens)}")
        for position, token in enumerate(tokens[:2]):
            if not token.isdigit() or not 1 <= int(token) <= rows:
                column = line.find(token) + 1 if position == 0 else line.rfind(" " + token) + 2
                raise MatrixMarketFormatError(entry_no, column, f"index {token!r} outside of 1..{rows}")
        for token in tokens[2:]:
            try:
                float(token)
            except ValueError:
                raise MatrixMarketFormatError(entry_no, line.find(token) + 1, f"invalid number {token!r}")
        seen += 1
    if seen != count:
        raise MatrixMarketFormatError(len(lines), 1, f"size line announces {count} entries, found {seen}")
    return tag, mask


def from_matrix_market(text: str) -> SparseOperator:
    """
    Parses a coordinate Matrix Market file.

    :raises MatrixMarketFormatError: With line and column of the first problem found.
    """
    tag, mask = _validate(text)
    matrix = scipy.io.mmread(io.BytesIO(text.encode("ascii")))
    return SparseOperator(matrix.astype(np.complex128), tag, mask)


@typechecked
class MatrixIODirection(Enum):
    READ = "read"
    WRITE = "write"


def write_operator(op: SparseOperator, path: str) -> str:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(to_matrix_market(op))
    logger.info(f"Wrote {op.dimension}x{op.dimension} operator with {op.nnz} entries to {path}")
    return path


def read_operator(path: str) -> SparseOperator:
    with open(path, "r", encoding="ascii") as f:
        return from_matrix_market(f.read())


def matrix_io(direction: MatrixIODirection, path: str | os.PathLike, op: SparseOperator | None = None):
    """Writes ``op`` to ``path`` (returns the path) or reads an operator from ``path``."""
    path = os.fspath(path)
    if direction == MatrixIODirection.WRITE:
        if op is None:
            raise ValueError("Writing needs an operator")
        return write_operator(op, path)
    return read_operator(path)
