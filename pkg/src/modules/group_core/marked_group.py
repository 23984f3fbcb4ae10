import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import networkx as nx
from typeguard import typechecked

from .abstract_normalizer import AbstractNormalizer
from .knuth_bendix import (
    DEFAULT_MAX_PASSES,
    DEFAULT_MAX_RULE_LENGTH,
    DEFAULT_MAX_RULES,
    RewritingNormalizer,
    RewritingSystem,
    complete,
    group_equations,
)
from .normalizers import CyclicNormalizer, DirectProductNormalizer, FreeNormalizer, FreeProductNormalizer
from .presentation import Presentation, format_word, parse_presentation, parse_word_text
from .words import Word, invert_word, letters_of_rank, word_key

logger = logging.getLogger(__name__)


@typechecked
class GroupClass(Enum):
    FREE = "free"
    FREE_ABELIAN = "free-abelian"
    DIRECT_PRODUCT = "direct-product"
    FREE_PRODUCT = "free-product"
    GENERIC_REWRITING = "generic-rewriting"

    @staticmethod
    def from_str(s: str):
        s = s.lower()
        for group_class in GroupClass:
            if group_class.value == s:
                return group_class
        raise ValueError(f"{s} is not a valid group class.")


@dataclass(frozen=True)
class Element:
    """A group element, stored as its normal form (a tuple of signed generator indices)."""

    word: tuple[int, ...]

    @property
    def key(self):
        """Sort key: (length, lexicographic normal form)."""
        return word_key(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __len__(self):
        return len(self.word)


@dataclass(frozen=True)
class MarkedGroup:
    """A finitely presented group together with its generating set and a normal form algorithm."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    group_class: GroupClass
    presentation_text: str
    normalizer: AbstractNormalizer = field(compare=False, repr=False)
    rewriting_system: RewritingSystem | None = field(default=None, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.generators)

    @cached_property
    def letters(self) -> tuple[int, ...]:
        """All signed letters in canonical order s1, s1^-1, s2, ..."""
        return letters_of_rank(self.rank)

    @cached_property
    def identity(self) -> Element:
        return Element(())

    def element(self, word: Word) -> Element:
        """Element represented by an arbitrary word."""
        return Element(self.normalizer.normalize(tuple(word)))

    def letter_element(self, letter: int) -> Element:
        return self.element((letter,))

    def multiply(self, a: Element, b: Element) -> Element:
        return Element(self.normalizer.multiply(a.word, b.word))

    def inverse(self, a: Element) -> Element:
        return self.element(invert_word(a.word))

    def times_letter(self, a: Element, letter: int) -> Element:
        return Element(self.normalizer.multiply(a.word, (letter,)))

    def conjugate(self, h: Element, g: Element) -> Element:
        """h g h^-1"""
        return self.element(h.word + g.word + invert_word(h.word))

    def describe(self) -> str:
        return f"{self.presentation_text} [{self.group_class.value}: {self.normalizer.describe()}]"


def _commutation_graph(presentation: Presentation) -> nx.Graph | None:
    """Returns the commutation graph when every relator is a commutator of two distinct generators."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, presentation.rank + 1))
    for relator in presentation.relators:
        if len(relator) != 4:
            return None
        x, y, x_inv, y_inv = relator
        if x_inv != -x or y_inv != -y or abs(x) == abs(y):
            return None
        graph.add_edge(abs(x), abs(y))
    return graph


def _decompose(graph: nx.Graph, vertices: list[int]) -> AbstractNormalizer | None:
    """
    Builds a normalizer for the right-angled group on ``vertices`` when the induced commutation graph is a
    cograph: disconnected graphs split as free products, graphs with disconnected complement as direct products.
    """
    if len(vertices) == 1:
        return CyclicNormalizer(vertices[0])
    subgraph = graph.subgraph(vertices)
    components = sorted(sorted(c) for c in nx.connected_components(subgraph))
    if len(components) > 1:
        factors = [_decompose(graph, component) for component in components]
        return None if any(f is None for f in factors) else FreeProductNormalizer(factors)
    co_components = sorted(sorted(c) for c in nx.connected_components(nx.complement(subgraph)))
    if len(co_components) > 1:
        factors = [_decompose(graph, component) for component in co_components]
        return None if any(f is None for f in factors) else DirectProductNormalizer(factors)
    return None


def make_group(
    presentation_text: str,
    force_rewriting: bool = False,
    max_rules: int = DEFAULT_MAX_RULES,
    max_rule_length: int = DEFAULT_MAX_RULE_LENGTH,
    max_passes: int = DEFAULT_MAX_PASSES,
) -> MarkedGroup:
    """
    Parses a presentation and selects a normal form algorithm.

    Free groups use free reduction. Right-angled presentations (all relators commutators of generators) whose
    commutation graph is a cograph are decomposed into free and direct products of infinite cyclic groups. Every
    other presentation goes through Knuth-Bendix completion within the given budgets.

    :param force_rewriting: Use Knuth-Bendix completion even if a structural normalizer exists.
    :raises PresentationParseError: If the text cannot be parsed.
    :raises RewritingBudgetExceededError: If completion does not finish within the budgets.
    """
    presentation = parse_presentation(presentation_text)
    rank = presentation.rank
    normalizer: AbstractNormalizer | None = None
    group_class = GroupClass.GENERIC_REWRITING
    system = None

    if not force_rewriting:
        if not presentation.relators:
            normalizer, group_class = FreeNormalizer(rank), GroupClass.FREE
        else:
            graph = _commutation_graph(presentation)
            if graph is not None:
                normalizer = _decompose(graph, list(range(1, rank + 1)))
                if isinstance(normalizer, DirectProductNormalizer):
                    all_cyclic = all(isinstance(f, CyclicNormalizer) for f in normalizer.factors)
                    group_class = GroupClass.FREE_ABELIAN if all_cyclic else GroupClass.DIRECT_PRODUCT
                elif isinstance(normalizer, FreeProductNormalizer):
                    group_class = GroupClass.FREE_PRODUCT

    if normalizer is None:
        logger.info(f"No structural normal form for {presentation.text}, running Knuth-Bendix completion")
        system = complete(
            group_equations(rank, presentation.relators),
            max_rules=max_rules,
            max_rule_length=max_rule_length,
            max_passes=max_passes,
        )
        normalizer = RewritingNormalizer(rank, system)
        group_class = GroupClass.GENERIC_REWRITING

    group = MarkedGroup(
        generators=presentation.generators,
        relators=presentation.relators,
        group_class=group_class,
        presentation_text=presentation.text,
        normalizer=normalizer,
        rewriting_system=system,
    )
    logger.debug(f"Built group {group.describe()}")
    return group


def multiply(group: MarkedGroup, a: Element, b: Element) -> Element:
    return group.multiply(a, b)


def inverse(group: MarkedGroup, a: Element) -> Element:
    return group.inverse(a)


def word_length(group: MarkedGroup, a: Element) -> int:
    """Word length; normal forms are geodesic, so this is the length of the normal form."""
    return len(a.word)


def parse_word(group: MarkedGroup, text: str) -> Element:
    return group.element(parse_word_text(text, group.generators))


def format_element(group: MarkedGroup, a: Element) -> str:
    return format_word(a.word, group.generators)
