import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from typeguard import typechecked

from .ball import DEFAULT_BALL_SIZE_CAP, ball
from .marked_group import Element, MarkedGroup, format_element

logger = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 256


@typechecked
class IccVerdict(Enum):
    NOT_ICC = "not ICC"
    ICC_CONSISTENT = "ICC-consistent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConjugacyEvidence:
    element: Element
    # counts[r - 1] = number of distinct h g h^-1 with l(h) <= r
    counts: tuple[int, ...]
    # size of the conjugacy class when the closure under generator conjugation terminated, else None
    finite_class_size: int | None

    @property
    def growing(self) -> bool:
        if len(self.counts) == 1:
            return self.counts[0] > 1
        nondecreasing = all(a <= b for a, b in zip(self.counts, self.counts[1:]))
        return nondecreasing and self.counts[-1] > self.counts[-2]


@dataclass(frozen=True)
class IccReport:
    radius: int
    entries: tuple[ConjugacyEvidence, ...]
    verdict: IccVerdict

    def to_text(self, group: MarkedGroup) -> str:
        lines = [
            f"# group: {group.presentation_text}",
            f"# radius: {self.radius}",
            f"# verdict: {self.verdict.value}",
            "element\t" + "\t".join(f"r{r}" for r in range(1, self.radius + 1)) + "\tfinite_class",
        ]
        for entry in self.entries:
            finite = "-" if entry.finite_class_size is None else str(entry.finite_class_size)
            counts = "\t".join(str(c) for c in entry.counts)
            lines.append(f"{format_element(group, entry.element)}\t{counts}\t{finite}")
        return "\n".join(lines) + "\n"


def conjugacy_closure(group: MarkedGroup, g: Element, cap: int = DEFAULT_CLOSURE_CAP) -> int | None:
    """
    Size of the conjugacy class of ``g`` if closing {g} under conjugation by generators stops below ``cap``.
    A terminating closure is the whole class, which is then provably finite.
    """
    seen = {g}
    frontier = [g]
    while frontier:
        next_frontier = []
        for x in frontier:
            for letter in group.letters:
                y = group.conjugate(group.letter_element(letter), x)
                if y not in seen:
                    seen.add(y)
                    next_frontier.append(y)
                    if len(seen) > cap:
                        return None
        frontier = next_frontier
    return len(seen)


def icc_evidence(
    group: MarkedGroup,
    radius: int,
    elements: Sequence[Element] | None = None,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
    size_cap: int = DEFAULT_BALL_SIZE_CAP,
) -> IccReport:
    """
    Counts conjugates h g h^-1 with l(h) <= r for r = 1..radius.

    :param elements: Elements to examine; defaults to every nontrivial element of the ball of the same radius.
    :return: Report with verdict "not ICC" when some class is provably finite, "ICC-consistent" when every count
        still grows at the largest radius, and "inconclusive" otherwise.
    """
    if radius < 1:
        raise ValueError(f"ICC evidence needs radius >= 1, got {radius}")
    conjugators = ball(group, radius, size_cap=size_cap)
    layer_ends = [sum(1 for h in conjugators if len(h) <= r) for r in range(1, radius + 1)]
    if elements is None:
        elements = [g for g in conjugators if not g.is_identity()]

    entries = []
    for g in elements:
        if g.is_identity():
            continue
        conjugates: set[Element] = set()
        counts = []
        start = 0
        for end in layer_ends:
            conjugates.update(group.conjugate(h, g) for h in conjugators[start:end])
            counts.append(len(conjugates))
            start = end
        entries.append(ConjugacyEvidence(g, tuple(counts), conjugacy_closure(group, g, closure_cap)))

    if any(entry.finite_class_size is not None for entry in entries):
        verdict = IccVerdict.NOT_ICC
    elif entries and all(entry.growing for entry in entries):
        verdict = IccVerdict.ICC_CONSISTENT
    else:
        verdict = IccVerdict.INCONCLUSIVE
    logger.info(f"ICC evidence at radius {radius} over {len(entries)} elements: {verdict.value}")
    return IccReport(radius=radius, entries=tuple(entries), verdict=verdict)
