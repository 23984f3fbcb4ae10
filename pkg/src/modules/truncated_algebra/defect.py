import logging
from dataclasses import dataclass

from src.modules.errors import WindowTooSmallError
from src.modules.group_core import Element, MarkedGroup, Window, format_element
from src.modules.operator_lab import SparseOperator, add, adjoint, scale

from .operators import generator_operators, length_raising, letter_name

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DefectReport:
    """
    D = X_s + X_{s^-1}* - I - U_s on the interior columns of a window, next to the defect the word-length law
    predicts for the same columns.
    """

    letter: int
    window: Window
    defect: SparseOperator
    predicted: SparseOperator

    @property
    def support(self) -> list[Element]:
        """Interior elements g with D e_g != 0, in window order."""
        columns = sorted({col for _, col, _ in self.defect.entries()})
        return [self.window.elements[col] for col in columns]

    @property
    def identity_only(self) -> bool:
        support = self.support
        return len(support) == 1 and support[0].is_identity() and self.defect.column(0) == {0: -1}

    @property
    def matches_prediction(self) -> bool:
        return self.defect == self.predicted

    def to_text(self, group: MarkedGroup) -> str:
        lines = [
            f"# group: {group.presentation_text}",
            f"# generator: {letter_name(group, self.letter)}",
            f"# radius: {self.window.radius}",
            f"# interior_columns: {self.defect.dimension - len(self.defect.mask)}",
            f"# support_size: {len(self.support)}",
            f"# identity_only: {str(self.identity_only).lower()}",
            f"# matches_prediction: {str(self.matches_prediction).lower()}",
            "column\trow\tvalue",
        ]
        elements = self.window.elements
        for row, col, value in sorted(self.defect.entries(), key=lambda t: (t[1], t[0])):
            lines.append(
                f"{format_element(group, elements[col])}\t{format_element(group, elements[row])}\t{value.real:g}"
            )
        return "\n".join(lines) + "\n"


def _non_interior(window: Window) -> list[int]:
    return [i for i, g in enumerate(window.elements) if not window.is_interior(g)]


def predicted_defect(group: MarkedGroup, letter: int, window: Window) -> SparseOperator:
    """
    The defect column of each interior g from word lengths alone. With l0 = l(g), l+ = l(gs) and l- = l(gs^-1):
    -e_g if l+ = l- = l0 + 1; e_g if l+ = l0 - 1 and l- != l0 + 1; e_g - e_{gs} if l+ = l0 and l- != l0 + 1;
    -e_{gs} if l+ = l0 and l- = l0 + 1; zero otherwise.
    """
    entries = []
    for j, g in enumerate(window.elements):
        if not window.is_interior(g):
            continue
        gs, gs_inverse = group.times_letter(g, letter), group.times_letter(g, -letter)
        length, up, down = len(g), len(gs), len(gs_inverse)
        if up == length + 1:
            if down == length + 1:
                entries.append((j, j, -1.0))
        elif up == length - 1:
            if down != length + 1:
                entries.append((j, j, 1.0))
        else:
            if down != length + 1:
                entries.append((j, j, 1.0))
            entries.append((window.index[gs], j, -1.0))
    return SparseOperator.from_entries(len(window), entries, window.tag, _non_interior(window))


def predicted_defect_support(group: MarkedGroup, letter: int, window: Window) -> list[Element]:
    columns = sorted({col for _, col, _ in predicted_defect(group, letter, window).entries()})
    return [window.elements[col] for col in columns]


def identity_defect(group: MarkedGroup, letter: int, window: Window) -> DefectReport:
    """
    Measures how far X_s + X_{s^-1}* - I falls short of U_s. Columns outside the interior are masked and emptied;
    on interior columns every operand is exact.

    :raises WindowTooSmallError: If the window radius is below 2.
    """
    if window.radius < 2:
        raise WindowTooSmallError(window.radius, 2)
    u, x = generator_operators(group, letter, window)
    x_inverse = length_raising(group, -letter, window)
    identity = SparseOperator.identity(len(window), window.tag)
    defect = add(x, adjoint(x_inverse), scale(identity, -1), scale(u, -1))
    defect = defect.with_mask(_non_interior(window)).without_masked_columns()
    report = DefectReport(letter, window, defect, predicted_defect(group, letter, window))
    logger.info(
        f"Defect of {letter_name(group, letter)} on {window.tag}: {len(report.support)} interior columns, "
        f"identity only: {report.identity_only}"
    )
    if not report.matches_prediction:
        logger.warning("The measured defect differs from the word-length prediction")
    return report
