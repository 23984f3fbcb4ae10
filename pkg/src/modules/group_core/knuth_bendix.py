"""
Knuth-Bendix completion for group presentations under the shortlex order.

Words are encoded as strings (one character per letter, see ``words.encode_word``) so that rewriting is plain
``str.replace``. A rule ``(lhs, rhs)`` always satisfies ``rhs < lhs`` in shortlex order, hence irreducible words
are the shortlex-least representatives of their elements and in particular geodesic.
"""

import logging
from dataclasses import dataclass

from overrides import override

from src.modules.errors import RewritingBudgetExceededError

from .abstract_normalizer import AbstractNormalizer
from .words import Word, decode_word, encode_word, letters_of_rank

logger = logging.getLogger(__name__)

Rule = tuple[str, str]

DEFAULT_MAX_RULES = 400
DEFAULT_MAX_RULE_LENGTH = 32
DEFAULT_MAX_PASSES = 40


def shortlex_ordered(a: str, b: str) -> Rule:
    if (len(a), a) > (len(b), b):
        return a, b
    return b, a


def _rule_key(rule: Rule) -> tuple[int, str, int, str]:
    return len(rule[0]), rule[0], len(rule[1]), rule[1]


def reduce_word(word: str, rules: list[Rule]) -> str:
    while True:
        before = word
        for lhs, rhs in rules:
            word = word.replace(lhs, rhs)
        if word == before:
            return word


@dataclass(frozen=True)
class RewritingSystem:
    """A confluent, shortlex-decreasing rewriting system."""

    rules: tuple[Rule, ...]

    def reduce(self, word: str) -> str:
        return reduce_word(word, list(self.rules))

    def __len__(self):
        return len(self.rules)


def _interreduce(rules: list[Rule]) -> list[Rule]:
    """Returns an equivalent rule list in which no left side contains another and right sides are irreducible."""
    queue = sorted(set(rules), key=_rule_key)
    system: list[Rule] = []
    while queue:
        lhs, rhs = queue.pop(0)
        lhs, rhs = reduce_word(lhs, system), reduce_word(rhs, system)
        if lhs == rhs:
            continue
        lhs, rhs = shortlex_ordered(lhs, rhs)
        kept = []
        for old in system:
            if lhs in old[0]:
                queue.append(old)
            else:
                kept.append(old)
        system = kept + [(lhs, rhs)]
        system = [(old_lhs, reduce_word(old_rhs, system)) for old_lhs, old_rhs in system]
    return sorted(system, key=_rule_key)


def _unresolved_critical_pairs(rules: list[Rule]) -> set[Rule]:
    pairs = set()
    for lhs1, rhs1 in rules:
        for lhs2, rhs2 in rules:
            for overlap in range(1, min(len(lhs1), len(lhs2))):
                if lhs1[-overlap:] != lhs2[:overlap]:
                    continue
                # lhs1[:-overlap] + overlap + lhs2[overlap:] rewrites in two ways
                left = reduce_word(rhs1 + lhs2[overlap:], rules)
                right = reduce_word(lhs1[:-overlap] + rhs2, rules)
                if left != right:
                    pairs.add(shortlex_ordered(left, right))
    return pairs


def complete(
    rules: list[Rule],
    max_rules: int = DEFAULT_MAX_RULES,
    max_rule_length: int = DEFAULT_MAX_RULE_LENGTH,
    max_passes: int = DEFAULT_MAX_PASSES,
) -> RewritingSystem:
    """
    Completes a list of equations into a confluent rewriting system.

    :param rules: Pairs of encoded words declared equal.
    :param max_rules: Maximal number of rules after interreduction.
    :param max_rule_length: Maximal length of a left hand side.
    :param max_passes: Maximal number of critical pair passes.
    :raises RewritingBudgetExceededError: If any of the budgets is exhausted before the system is confluent.
    """
    system = [shortlex_ordered(lhs, rhs) for lhs, rhs in rules if lhs != rhs]
    for pass_no in range(1, max_passes + 1):
        system = _interreduce(system)
        if len(system) > max_rules:
            raise RewritingBudgetExceededError("number of rules", max_rules)
        longest = max((len(lhs) for lhs, _ in system), default=0)
        if longest > max_rule_length:
            raise RewritingBudgetExceededError("rule length", max_rule_length)
        pairs = _unresolved_critical_pairs(system)
        logger.debug(f"Completion pass {pass_no}: {len(system)} rules, {len(pairs)} unresolved critical pairs")
        if not pairs:
            logger.info(f"Rewriting system is confluent after {pass_no} pass(es) with {len(system)} rules")
            return RewritingSystem(tuple(system))
        system.extend(pairs)
    raise RewritingBudgetExceededError("number of passes", max_passes)


def group_equations(rank: int, relators: tuple[Word, ...]) -> list[Rule]:
    """Monoid equations of a group presentation: x x^-1 = 1 for every letter and r = 1 for every relator."""
    equations = [(encode_word((letter, -letter)), "") for letter in letters_of_rank(rank)]
    equations.extend((encode_word(relator), "") for relator in relators)
    return equations


class RewritingNormalizer(AbstractNormalizer):
    """Normal forms from a completed rewriting system (shortlex-least representatives)."""

    def __init__(self, rank: int, system: RewritingSystem):
        self._indices = frozenset(range(1, rank + 1))
        self._system = system

    @property
    def system(self) -> RewritingSystem:
        return self._system

    @property
    @override
    def generator_indices(self) -> frozenset[int]:
        return self._indices

    @override
    def normalize(self, word: Word) -> Word:
        return decode_word(self._system.reduce(encode_word(word)))

    @override
    def describe(self) -> str:
        return f"rewriting system with {len(self._system)} rules"
