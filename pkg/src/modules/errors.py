class WorkbenchError(Exception):
    """Base class of every error raised by the workbench packages."""


# Input and domain errors


class InputError(WorkbenchError):
    """Raised when user supplied text or values do not describe a valid object."""


class EnvironmentVariableError(InputError):
    def __init__(self, name: str, raw: str, expected: str):
        super().__init__(f"Environment variable {name} must be {expected}, got {raw!r}.")


class PresentationParseError(InputError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"Cannot parse {text!r} at column {position + 1}: {reason}")


class NotReducedError(InputError):
    def __init__(self, word: str):
        super().__init__(f"Word {word} is not freely reduced.")


class NeighborCountOutOfRangeError(InputError):
    def __init__(self, type_index: int, value: int, neighbor_count: int):
        super().__init__(
            f"Neighbor count {value} for cell type {type_index} is outside of the range 0..{neighbor_count}."
        )


class InadmissibleRuleError(InputError):
    def __init__(self, type_indices: list[int]):
        super().__init__(
            f"The rule is not admissible: 0 is a birth count for cell type(s) {', '.join(map(str, type_indices))}."
        )


class BlockDimensionError(InputError):
    def __init__(self, left: int, right: int):
        super().__init__(f"Blocks of dimension {left} and {right} cannot be composed.")


class BlockCompositionError(InputError):
    """The symmetric difference of two blocks is not a block."""


class BlockParseError(InputError):
    def __init__(self, text: str, position: int, reason: str):
        self.position = position
        super().__init__(f"Cannot parse block {text!r} at column {position + 1}: {reason}")


class DocumentFormatError(InputError):
    def __init__(self, line: int, reason: str):
        self.line = line
        super().__init__(f"Malformed document at line {line}: {reason}")


class UnknownCellError(InputError):
    def __init__(self, cell: str):
        super().__init__(f"Cell {cell} does not belong to any known cell type.")


# Cap violations


class CapExceededError(WorkbenchError):
    def __init__(self, what: str, cap: int):
        self.cap = cap
        super().__init__(f"{what} exceeded the configured cap of {cap}.")


class BallSizeExceededError(CapExceededError):
    def __init__(self, radius: int, cap: int):
        super().__init__(f"Ball of radius {radius}", cap)


class RewritingBudgetExceededError(CapExceededError):
    def __init__(self, budget: str, cap: int):
        super().__init__(f"Knuth-Bendix completion ({budget})", cap)


class EnumerationCapExceededError(CapExceededError):
    def __init__(self, cap: int):
        super().__init__("Admissible state enumeration", cap)


class BlockSizeCapExceededError(CapExceededError):
    def __init__(self, dimension: int, cap: int, pruned: int):
        self.pruned = pruned
        super().__init__(f"Block search at dimension {dimension} ({pruned} branches cut)", cap)


class DenseCapExceededError(CapExceededError):
    def __init__(self, dimension: int, cap: int):
        self.dimension = dimension
        super().__init__(f"Dense solve of dimension {dimension}", cap)


# Truncation windows


class WindowError(WorkbenchError):
    """Raised when a computation needs vertices outside of its finite window."""


class WindowBoundaryError(WindowError):
    def __init__(self, what: str):
        super().__init__(f"{what} leaves the window interior; use a larger radius.")


class WindowTooSmallError(WindowError):
    def __init__(self, radius: int, required: int):
        super().__init__(f"Window radius {radius} is too small, at least {required} is required.")


# Operators


class OperatorError(WorkbenchError):
    pass


class BasisTagMismatchError(OperatorError):
    def __init__(self, tags: list[str]):
        super().__init__(f"Operators live on different bases: {', '.join(repr(t) for t in tags)}.")


class DimensionMismatchError(OperatorError):
    def __init__(self, dimensions: list[int]):
        super().__init__(f"Operator dimensions do not match: {dimensions}.")


class MatrixMarketFormatError(WorkbenchError):
    def __init__(self, line: int, column: int, reason: str):
        self.line = line
        self.column = column
        super().__init__(f"Malformed Matrix Market file at line {line}, column {column}: {reason}")
