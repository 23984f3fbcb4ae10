from abc import ABC, abstractmethod

from .words import Word


class AbstractNormalizer(ABC):
    """
    Computes canonical normal forms of words in a marked group.

    Implementations must return geodesic normal forms: the normal form of an element is a shortest word for it, so
    that word length is the length of the normal form.
    """

    @property
    @abstractmethod
    def generator_indices(self) -> frozenset[int]:
        """Indices (1-based) of the generators whose letters this normalizer handles."""
        raise NotImplementedError

    @abstractmethod
    def normalize(self, word: Word) -> Word:
        """Returns the normal form of the element represented by ``word``."""
        raise NotImplementedError

    def multiply(self, left: Word, right: Word) -> Word:
        """Normal form of the product of two normal forms."""
        return self.normalize(left + right)

    @abstractmethod
    def describe(self) -> str:
        """Short human readable description of the group structure, e.g. ``Z^2 * Z``."""
        raise NotImplementedError

    def __str__(self):
        return self.describe()
