import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from src.modules.errors import InputError, NotReducedError
from src.modules.group_core import Word, format_word, parse_word_text
from src.modules.group_core.words import invert_word, is_freely_reduced

logger = logging.getLogger(__name__)

GOLDEN_THETA = (5**0.5 - 1) / 2


def circle_generators(rank: int) -> tuple[str, ...]:
    """``a`` acts by squaring, the ``b`` letters by rotations: ``a, b`` for rank 2, ``a, b1, .., b{n-1}`` above."""
    if rank < 2:
        raise ValueError(f"The circle action needs rank >= 2, got {rank}")
    if rank == 2:
        return "a", "b"
    return ("a",) + tuple(f"b{k}" for k in range(1, rank))


@dataclass(frozen=True)
class CircleWord:
    """
    A freely reduced word in a and the rotation letters. Letter 1 is a, letter k + 1 is b_k; negative letters
    are inverses. Words act right to left.
    """

    letters: Word = ()
    rank: int = 2

    def __post_init__(self):
        generators = circle_generators(self.rank)
        bad = [letter for letter in self.letters if not 0 < abs(letter) <= self.rank]
        if bad:
            raise InputError(f"Letters {bad} do not belong to the rank {self.rank} circle action.")
        if not is_freely_reduced(self.letters):
            raise NotReducedError(format_word(self.letters, generators))

    @property
    def generators(self) -> tuple[str, ...]:
        return circle_generators(self.rank)

    @property
    def uses_inverse_square(self) -> bool:
        """Whether the word needs the square root branch for a^-1."""
        return -1 in self.letters

    def inverse(self) -> "CircleWord":
        return CircleWord(invert_word(self.letters), self.rank)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_word(self.letters, self.generators)


def parse_circle_word(text: str, rank: int = 2) -> CircleWord:
    """
    Reads a word such as ``a*b*a^-1*b^-1`` without reducing it.

    :raises PresentationParseError: If the text is not a word over the generators.
    :raises NotReducedError: If the word contains a letter next to its inverse.
    """
    return CircleWord(parse_word_text(text, circle_generators(rank), reduce=False), rank)


@lru_cache(maxsize=None)
def _multipliers(count: int) -> tuple[int, ...]:
    """1 followed by the first count - 1 primes."""
    found = [1]
    candidate = 1
    while len(found) < count:
        candidate += 1
        if all(candidate % p for p in found[1:] if p * p <= candidate):
            found.append(candidate)
    return tuple(found)


def rotation_angles(theta: float, rank: int) -> np.ndarray:
    """Angles of b_1 .. b_{rank-1}: the fractional parts of theta * sqrt(p) for p = 1, 2, 3, 5, 7, ..."""
    if not 0 < theta < 1:
        raise InputError(f"The rotation angle must lie in (0, 1), got {theta}.")
    multipliers = np.sqrt(np.array(_multipliers(rank - 1), dtype=np.float64))
    return np.mod(theta * multipliers, 1.0)


def random_reduced_word(rng: np.random.Generator, length: int, rank: int = 2) -> CircleWord:
    letters: list[int] = []
    choices = [sign * k for k in range(1, rank + 1) for sign in (1, -1)]
    while len(letters) < length:
        letter = int(rng.choice(choices))
        if letters and letter == -letters[-1]:
            continue
        letters.append(letter)
    return CircleWord(tuple(letters), rank)
