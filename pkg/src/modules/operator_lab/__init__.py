__all__ = [
    "CombineKind",
    "CommutantEstimate",
    "DEFAULT_COMMUTANT_CAP",
    "DEFAULT_DENSE_CAP",
    "MatrixIODirection",
    "SparseOperator",
    "Spectrum",
    "StateBasis",
    "add",
    "adjoint",
    "combine",
    "commutant_dim_estimate",
    "commutator",
    "compose",
    "from_matrix_market",
    "matrix_io",
    "read_operator",
    "restrict_unmasked",
    "scale",
    "spectrum",
    "to_matrix_market",
    "write_operator",
]

from .matrix_market import (
    MatrixIODirection,
    from_matrix_market,
    matrix_io,
    read_operator,
    to_matrix_market,
    write_operator,
)
from .sparse_operator import (
    CombineKind,
    SparseOperator,
    StateBasis,
    add,
    adjoint,
    combine,
    commutator,
    compose,
    restrict_unmasked,
    scale,
)
from .spectra import (
    DEFAULT_COMMUTANT_CAP,
    DEFAULT_DENSE_CAP,
    CommutantEstimate,
    Spectrum,
    commutant_dim_estimate,
    spectrum,
)
