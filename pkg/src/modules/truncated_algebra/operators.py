import logging

from src.modules.errors import InputError, WindowTooSmallError
from src.modules.group_core import MarkedGroup, Window, format_element, parse_word
from src.modules.operator_lab import SparseOperator

logger = logging.getLogger(__name__)


def parse_letter(group: MarkedGroup, text: str) -> int:
    """
    A generator or the inverse of one, e.g. ``s2`` or ``s2^-1``, as a signed letter.

    :raises InputError: If the text does not name a single generator letter.
    """
    word = parse_word(group, text).word
    if len(word) != 1:
        raise InputError(f"{text!r} is not a generator or the inverse of a generator.")
    return word[0]


def letter_name(group: MarkedGroup, letter: int) -> str:
    return format_element(group, group.letter_element(letter))


def right_translation(group: MarkedGroup, letter: int, window: Window) -> SparseOperator:
    """U_s e_g = e_{gs}; columns with gs outside the window are masked."""
    images = [window.index.get(group.times_letter(g, letter)) for g in window.elements]
    return SparseOperator.from_column_images(images, window.tag)


def length_raising(group: MarkedGroup, letter: int, window: Window) -> SparseOperator:
    """
    X_s e_g = e_{gs} if l(gs) = l(g) + 1 and e_g otherwise. Columns with a raising step leaving the window are
    masked.
    """
    images = []
    for g in window.elements:
        gs = group.times_letter(g, letter)
        images.append(window.index.get(gs) if len(gs) == len(g) + 1 else window.index[g])
    return SparseOperator.from_column_images(images, window.tag)


def generator_operators(group: MarkedGroup, letter: int, window: Window) -> tuple[SparseOperator, SparseOperator]:
    """
    The pair (U_s, X_s) on the ball basis of ``window``. Adjoints come from
    :func:`src.modules.operator_lab.adjoint`.

    :raises WindowTooSmallError: If the window radius is 0.
    """
    if window.radius < 1:
        raise WindowTooSmallError(window.radius, 1)
    u, x = right_translation(group, letter, window), length_raising(group, letter, window)
    logger.debug(
        f"Built U and X for {letter_name(group, letter)} on {window.tag}: {len(u.mask)} and {len(x.mask)} masked"
    )
    return u, x
