import logging
import re
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

import pandas as pd

from src.modules.errors import DocumentFormatError, NeighborCountOutOfRangeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TypeRule:
    birth: frozenset[int]
    survival: frozenset[int]

    def next_alive(self, alive: bool, count: int) -> bool:
        return count in (self.survival if alive else self.birth)


@dataclass(frozen=True)
class LifeRule:
    """Birth and survival sets per cell type, in type index order."""

    types: tuple[TypeRule, ...]
    neighbor_counts: tuple[int, ...]

    @property
    def inadmissible_types(self) -> list[int]:
        return [i for i, t in enumerate(self.types) if 0 in t.birth]

    @property
    def admissible(self) -> bool:
        """A dead cell without alive neighbors stays dead, so finite states stay finite."""
        return not self.inadmissible_types

    def __len__(self):
        return len(self.types)

    def __getitem__(self, type_index: int) -> TypeRule:
        return self.types[type_index]


def _checked(type_index: int, values: Iterable[int], neighbor_count: int) -> frozenset[int]:
    values = frozenset(int(v) for v in values)
    for v in sorted(values):
        if not 0 <= v <= neighbor_count:
            raise NeighborCountOutOfRangeError(type_index, v, neighbor_count)
    return values


def make_rule(type_rules: Sequence[tuple[Iterable[int], Iterable[int]]], neighbor_counts: Sequence[int]) -> LifeRule:
    """
    Builds a rule from one (birth, survival) pair per cell type. Inadmissible rules are built too; check
    :attr:`LifeRule.admissible`.

    :raises NeighborCountOutOfRangeError: If a count lies outside 0..n_i for its type.
    """
    if len(type_rules) != len(neighbor_counts):
        raise ValueError(f"Expected rules for {len(neighbor_counts)} cell types, got {len(type_rules)}")
    types = tuple(
        TypeRule(_checked(i, birth, n), _checked(i, survival, n))
        for i, ((birth, survival), n) in enumerate(zip(type_rules, neighbor_counts))
    )
    rule = LifeRule(types, tuple(neighbor_counts))
    if not rule.admissible:
        logger.warning(f"Rule is not admissible for cell type(s) {rule.inadmissible_types}")
    return rule


def uniform_rule(birth: Iterable[int], survival: Iterable[int], neighbor_counts: Sequence[int]) -> LifeRule:
    """The same birth and survival sets for every cell type."""
    birth, survival = frozenset(birth), frozenset(survival)
    return make_rule([(birth, survival)] * len(neighbor_counts), neighbor_counts)


def _format_set(values: frozenset[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def format_rule(rule: LifeRule) -> str:
    return "".join(
        f"type_{i}: B={_format_set(t.birth)} S={_format_set(t.survival)}\n" for i, t in enumerate(rule.types)
    )


_RULE_LINE = re.compile(r"^(?:type_(\d+)\s*:\s*)?B\s*=\s*\{([\d,\s]*)\}\s+S\s*=\s*\{([\d,\s]*)\}$")


def _parse_set(text: str, line_no: int) -> frozenset[int]:
    items = [item.strip() for item in text.split(",")]
    if items == [""]:
        return frozenset()
    bad = [item for item in items if not item.isdigit()]
    if bad:
        raise DocumentFormatError(line_no, f"invalid neighbor count(s) {bad}")
    return frozenset(int(item) for item in items)


def parse_rule(text: str, neighbor_counts: Sequence[int]) -> LifeRule:
    """
    Reads the lines written by :func:`format_rule`. A single line without the ``type_i:`` prefix applies to every
    cell type. Blank lines and ``#`` comments are skipped.

    :raises DocumentFormatError: On malformed lines, repeated or missing types.
    :raises NeighborCountOutOfRangeError: If a count lies outside 0..n_i for its type.
    """
    by_type: dict[int, tuple[frozenset[int], frozenset[int]]] = {}
    uniform = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        match = _RULE_LINE.match(line)
        if match is None:
            raise DocumentFormatError(line_no, "expected 'type_i: B={...} S={...}'")
        sets = (_parse_set(match.group(2), line_no), _parse_set(match.group(3), line_no))
        if match.group(1) is None:
            if uniform is not None or by_type:
                raise DocumentFormatError(line_no, "a rule without type prefix must be the only line")
            uniform = sets
            continue
        if uniform is not None:
            raise DocumentFormatError(line_no, "a rule without type prefix must be the only line")
        type_index = int(match.group(1))
        if type_index in by_type:
            raise DocumentFormatError(line_no, f"type_{type_index} appears twice")
        if type_index >= len(neighbor_counts):
            raise DocumentFormatError(line_no, f"the complex has only {len(neighbor_counts)} cell type(s)")
        by_type[type_index] = sets
    if uniform is not None:
        return make_rule([uniform] * len(neighbor_counts), neighbor_counts)
    missing = [i for i in range(len(neighbor_counts)) if i not in by_type]
    if missing:
        raise DocumentFormatError(len(text.splitlines()), f"no rule for cell type(s) {missing}")
    return make_rule([by_type[i] for i in range(len(neighbor_counts))], neighbor_counts)


@dataclass(frozen=True)
class RuleSpaceReport:
    """
    Size of the rule space for the given neighbor counts.

    ``encoded`` and ``admissible`` count birth and survival sets inside {0..n_i}; ``stated`` and
    ``stated_admissible`` are the closed forms 2^(2n) and 2^n (2^n - 1) commonly quoted for this game, which
    do not agree with that encoding.
    """

    neighbor_counts: tuple[int, ...]
    encoded: tuple[int, ...]
    admissible: tuple[int, ...]
    stated: tuple[int, ...]
    stated_admissible: tuple[int, ...]

    @property
    def total_encoded(self) -> int:
        return prod(self.encoded)

    @property
    def total_admissible(self) -> int:
        return prod(self.admissible)

    @property
    def total_stated(self) -> int:
        return prod(self.stated)

    @property
    def total_stated_admissible(self) -> int:
        return prod(self.stated_admissible)

    @property
    def counts_agree(self) -> bool:
        return self.encoded == self.stated and self.admissible == self.stated_admissible

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "cell_type": range(len(self.neighbor_counts)),
                "neighbor_count": self.neighbor_counts,
                "encoded": self.encoded,
                "admissible": self.admissible,
                "stated": self.stated,
                "stated_admissible": self.stated_admissible,
            }
        )


def rule_space_report(neighbor_counts: Sequence[int]) -> RuleSpaceReport:
    counts = tuple(int(n) for n in neighbor_counts)
    report = RuleSpaceReport(
        neighbor_counts=counts,
        encoded=tuple(2 ** (2 * (n + 1)) for n in counts),
        admissible=tuple(2**n * 2 ** (n + 1) for n in counts),
        stated=tuple(2 ** (2 * n) for n in counts),
        stated_admissible=tuple(2**n * (2**n - 1) for n in counts),
    )
    if not report.counts_agree:
        logger.info(
            f"Rule counts for {list(counts)}: {report.total_encoded} encoded, {report.total_admissible} admissible; "
            f"the closed forms give {report.total_stated} and {report.total_stated_admissible}"
        )
    return report
