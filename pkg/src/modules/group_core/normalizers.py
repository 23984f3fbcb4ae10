from overrides import override

from .abstract_normalizer import AbstractNormalizer
from .words import Word, free_reduce


class FreeNormalizer(AbstractNormalizer):
    """Free reduction. Normal forms of free groups are the freely reduced words."""

    def __init__(self, rank: int):
        self._indices = frozenset(range(1, rank + 1))

    @property
    @override
    def generator_indices(self) -> frozenset[int]:
        return self._indices

    @override
    def normalize(self, word: Word) -> Word:
        return free_reduce(word)

    @override
    def multiply(self, left: Word, right: Word) -> Word:
        # Both factors are reduced, so cancellation only happens at the junction.
        cut = 0
        while cut < len(left) and cut < len(right) and left[-1 - cut] == -right[cut]:
            cut += 1
        return left[: len(left) - cut] + right[cut:]

    @override
    def describe(self) -> str:
        rank = len(self._indices)
        return "Z" if rank == 1 else f"F{rank}"


class CyclicNormalizer(AbstractNormalizer):
    """Infinite cyclic group on one generator; the normal form is s^n written out."""

    def __init__(self, index: int):
        self._index = index

    @property
    @override
    def generator_indices(self) -> frozenset[int]:
        return frozenset({self._index})

    @override
    def normalize(self, word: Word) -> Word:
        exponent = sum(1 if letter > 0 else -1 for letter in word)
        letter = self._index if exponent >= 0 else -self._index
        return (letter,) * abs(exponent)

    @override
    def describe(self) -> str:
        return "Z"


class DirectProductNormalizer(AbstractNormalizer):
    """
    Direct product of factors on disjoint generator sets. Letters of different factors commute, so the normal form
    is the concatenation of the factors' normal forms in factor order.
    """

    def __init__(self, factors: list[AbstractNormalizer]):
        self._factors = factors
        self._factor_of = {index: pos for pos, factor in enumerate(factors) for index in factor.generator_indices}
        self._indices = frozenset(self._factor_of)

    @property
    def factors(self) -> list[AbstractNormalizer]:
        return self._factors

    @property
    @override
    def generator_indices(self) -> frozenset[int]:
        return self._indices

    @override
    def normalize(self, word: Word) -> Word:
        parts: list[list[int]] = [[] for _ in self._factors]
        for letter in word:
            parts[self._factor_of[abs(letter)]].append(letter)
        result: tuple[int, ...] = ()
        for factor, part in zip(self._factors, parts):
            if part:
                result += factor.normalize(tuple(part))
        return result

    @override
    def describe(self) -> str:
        names = [factor.describe() for factor in self._factors]
        if all(name == "Z" for name in names):
            return f"Z^{len(names)}"
        return " x ".join(name if " " not in name else f"({name})" for name in names)


class FreeProductNormalizer(AbstractNormalizer):
    """
    Free product of factors on disjoint generator sets. The normal form is the alternating sequence of nontrivial
    syllables, each syllable a normal form of its factor.
    """

    def __init__(self, factors: list[AbstractNormalizer]):
        self._factors = factors
        self._factor_of = {index: pos for pos, factor in enumerate(factors) for index in factor.generator_indices}
        self._indices = frozenset(self._factor_of)

    @property
    def factors(self) -> list[AbstractNormalizer]:
        return self._factors

    @property
    @override
    def generator_indices(self) -> frozenset[int]:
        return self._indices

    def _syllables(self, word: Word) -> list[tuple[int, Word]]:
        runs: list[tuple[int, list[int]]] = []
        for letter in word:
            pos = self._factor_of[abs(letter)]
            if runs and runs[-1][0] == pos:
                runs[-1][1].append(letter)
            else:
                runs.append((pos, [letter]))
        return [(pos, tuple(letters)) for pos, letters in runs]

    @override
    def normalize(self, word: Word) -> Word:
        # Adjacent stack entries always belong to different factors.
        stack: list[tuple[int, Word]] = []
        for pos, syllable in self._syllables(word):
            factor = self._factors[pos]
            if stack and stack[-1][0] == pos:
                merged = factor.normalize(stack.pop()[1] + syllable)
            else:
                merged = factor.normalize(syllable)
            if merged:
                stack.append((pos, merged))
        return tuple(letter for _, syllable in stack for letter in syllable)

    @override
    def describe(self) -> str:
        names = [factor.describe() for factor in self._factors]
        return " * ".join(name if " " not in name else f"({name})" for name in names)
