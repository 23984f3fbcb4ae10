import itertools
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from src.modules.cayley_complex import Block, CayleyComplex, format_block
from src.modules.errors import EnumerationCapExceededError, InadmissibleRuleError, WindowBoundaryError
from src.modules.group_core import Window
from src.modules.operator_lab import SparseOperator, StateBasis

from .life_state import LifeState, cell_order
from .rules import LifeRule, TypeRule

logger = logging.getLogger(__name__)

DEFAULT_LIFE_STATE_CAP = 200_000


class LifeStepper:
    """
    Applies an admissible rule on a Cayley complex. Cell types and neighbor lists are looked up once per cell
    and cached, so one stepper should be reused for many steps.

    With a ``region``, every examined cell must have its support inside the region's ball.
    """

    def __init__(
        self, cayley_complex: CayleyComplex, rule: LifeRule, region: Window | None = None, threads: int = 1
    ):
        if not rule.admissible:
            raise InadmissibleRuleError(rule.inadmissible_types)
        if len(rule) != len(cayley_complex.cell_types):
            types = len(cayley_complex.cell_types)
            raise ValueError(f"The rule covers {len(rule)} cell types, the complex has {types}")
        self._complex = cayley_complex
        self._rule = rule
        self._region = region
        self._threads = threads
        # both caches are filled from worker threads without a lock; racing writers store equal values
        self._neighbors: dict[Block, frozenset[Block]] = {}
        self._type_rules: dict[Block, TypeRule] = {}

    def _check_region(self, cell: Block):
        if self._region is not None and not all(g in self._region.index for g in cell.support):
            raise WindowBoundaryError(f"Cell {format_block(self._complex.group, cell)}")

    def neighbors(self, cell: Block) -> frozenset[Block]:
        found = self._neighbors.get(cell)
        if found is None:
            found = frozenset(self._complex.neighbors(cell))
            self._neighbors[cell] = found
        return found

    def _type_rule(self, cell: Block) -> TypeRule:
        found = self._type_rules.get(cell)
        if found is None:
            cell_type, _ = self._complex.type_of(cell)
            found = self._rule[cell_type.index]
            self._type_rules[cell] = found
        return found

    def _next_alive(self, cell: Block, alive: frozenset[Block]) -> bool:
        count = len(self.neighbors(cell) & alive)
        return self._type_rule(cell).next_alive(cell in alive, count)

    def step(self, state: LifeState) -> LifeState:
        """
        One generation. Only the alive cells and their neighbors are examined; any other cell has no alive
        neighbor and stays dead under an admissible rule.

        :raises UnknownCellError: If a cell is not of a known type.
        :raises WindowBoundaryError: If an examined cell leaves the region.
        """
        alive = state.alive
        candidates = set(alive)
        for cell in alive:
            candidates.update(self.neighbors(cell))
        ordered = sorted(candidates, key=cell_order)
        for cell in ordered:
            self._check_region(cell)
        if self._threads > 1 and len(ordered) > 1:
            with ThreadPoolExecutor(max_workers=self._threads) as executor:
                verdicts = list(executor.map(lambda c: self._next_alive(c, alive), ordered))
        else:
            verdicts = [self._next_alive(c, alive) for c in ordered]
        return LifeState(frozenset(c for c, verdict in zip(ordered, verdicts) if verdict))

    def run(self, state: LifeState, generations: int) -> list[LifeState]:
        """The states of generations 0..``generations``; stops early once the state is empty."""
        if generations < 0:
            raise ValueError(f"Generations must be non-negative, got {generations}")
        history = [state]
        for generation in range(1, generations + 1):
            state = self.step(state)
            history.append(state)
            logger.debug(f"Generation {generation}: {len(state)} alive cells")
            if state.is_empty():
                break
        return history


def step(
    state: LifeState, rule: LifeRule, cayley_complex: CayleyComplex, region: Window | None = None, threads: int = 1
) -> LifeState:
    """
    A cell is alive in the next generation iff it is dead with an alive-neighbor count in the birth set of its
    type, or alive with a count in the survival set.

    :raises InadmissibleRuleError: If 0 is a birth count of some type.
    """
    return LifeStepper(cayley_complex, rule, region, threads).step(state)


def run(
    state: LifeState,
    rule: LifeRule,
    cayley_complex: CayleyComplex,
    generations: int,
    region: Window | None = None,
    threads: int = 1,
) -> list[LifeState]:
    return LifeStepper(cayley_complex, rule, region, threads).run(state, generations)


def enumerate_life_states(
    cells: Sequence[Block], max_alive: int, cap: int = DEFAULT_LIFE_STATE_CAP, label: str = "cells"
) -> StateBasis[LifeState]:
    """
    Every state with at most ``max_alive`` alive cells among ``cells``, ordered by size and then
    lexicographically in canonical cell order. The empty state has index 0.

    :raises EnumerationCapExceededError: If there are more than ``cap`` such states.
    """
    if max_alive < 0:
        raise ValueError(f"max_alive must be non-negative, got {max_alive}")
    ordered = sorted(set(cells), key=cell_order)
    total = sum(comb(len(ordered), k) for k in range(min(max_alive, len(ordered)) + 1))
    if total > cap:
        raise EnumerationCapExceededError(cap)
    states = tuple(
        LifeState(frozenset(alive))
        for k in range(min(max_alive, len(ordered)) + 1)
        for alive in itertools.combinations(ordered, k)
    )
    logger.info(f"Enumerated {len(states)} life states on {len(ordered)} cells with at most {max_alive} alive")
    return StateBasis(states, f"life:{label}:c{len(ordered)}:k{max_alive}:n{len(states)}")


def step_matrix(
    rule: LifeRule,
    basis: StateBasis[LifeState],
    cayley_complex: CayleyComplex,
    region: Window | None = None,
    threads: int = 1,
) -> SparseOperator:
    """
    The step operator on the span of ``basis``: column j is the basis vector of step(state j). Columns whose
    image leaves the basis or the region are masked.
    """
    stepper = LifeStepper(cayley_complex, rule, region, threads)
    images = []
    escaped = 0
    for state in basis.states:
        try:
            images.append(basis.index.get(stepper.step(state)))
        except WindowBoundaryError:
            escaped += 1
            images.append(None)
    outside = sum(1 for image in images if image is None) - escaped
    if escaped or outside:
        logger.warning(
            f"{escaped} columns leave the region and {outside} leave the basis out of {len(images)} life states"
        )
    return SparseOperator.from_column_images(images, basis.tag)


@dataclass(frozen=True)
class FiberReport:
    """Row sums of a 0/1 step matrix: how many basis states step onto each state."""

    max_fiber: int
    # fiber size -> number of rows with that size, empty rows left out
    histogram: dict[int, int]
    masked_columns: int

    @property
    def injective(self) -> bool:
        return self.max_fiber <= 1


def fiber_report(operator: SparseOperator) -> FiberReport:
    sums = np.rint(np.asarray(abs(operator.matrix).sum(axis=1)).ravel()).astype(int)
    histogram = Counter(int(s) for s in sums if s > 0)
    return FiberReport(
        max_fiber=int(sums.max()) if sums.size else 0,
        histogram=dict(sorted(histogram.items())),
        masked_columns=len(operator.mask),
    )
