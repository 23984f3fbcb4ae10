import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import groupby

from src.modules.errors import BlockSizeCapExceededError
from src.modules.group_core import MarkedGroup, Window

from .block import Block, edge, vertex

logger = logging.getLogger(__name__)

DEFAULT_BLOCK_SIZE_CAP = 12


@dataclass(frozen=True)
class LevelResult:
    dimension: int
    # irreducible blocks, sorted by key
    blocks: tuple[Block, ...]
    # every block found by the search, reducible ones included
    found: tuple[Block, ...]
    # branches abandoned because every completion would exceed the size cap
    pruned: int

    @property
    def cap_reached(self) -> bool:
        return self.pruned > 0


class _Search:
    """
    Backtracking search for the blocks built from a list of candidate members.

    A port is a pair (member, c) with c in member; its partners are the candidates b' with member & b' = {c}. A
    set of candidates is a block when every port has exactly one partner inside the set.
    """

    def __init__(self, candidates: list[Block], size_cap: int, group: MarkedGroup):
        self.candidates = candidates
        self.size_cap = size_cap
        self.group = group
        self.ports_per_member = max((len(b) for b in candidates), default=1)
        containing: dict = {}
        for i, b in enumerate(candidates):
            for c in b.members:
                containing.setdefault(c, []).append(i)
        self.partners: list[dict] = []
        for i, b in enumerate(candidates):
            self.partners.append(
                {
                    c: [j for j in containing[c] if j != i and b.member_set & candidates[j].member_set == {c}]
                    for c in b.members
                }
            )
        self.alive = self._peel()

    def _peel(self) -> set[int]:
        """Drops candidates with a port that has no partner, until none is left."""
        alive = set(range(len(self.candidates)))
        changed = True
        while changed:
            changed = False
            for i in sorted(alive):
                if any(not any(j in alive for j in partners) for partners in self.partners[i].values()):
                    alive.discard(i)
                    changed = True
        logger.debug(f"{len(alive)} of {len(self.candidates)} candidates survive peeling")
        return alive

    def _distance(self, u, v) -> int:
        return len(self.group.multiply(self.group.inverse(u), v))

    def from_seed(self, seed: int) -> tuple[list[Block], int]:
        found: list[Block] = []
        pruned = 0
        chosen: list[int] = []
        chosen_set: set[int] = set()
        counts: dict[tuple[int, object], int] = {}

        def add(j: int) -> bool:
            """Adds candidate j; returns False if some port gets a second partner."""
            ok = True
            chosen.append(j)
            chosen_set.add(j)
            for c, partners in self.partners[j].items():
                own = 0
                for k in partners:
                    if k in chosen_set:
                        own += 1
                        counts[(k, c)] = counts.get((k, c), 0) + 1
                        if counts[(k, c)] > 1:
                            ok = False
                counts[(j, c)] = own
                if own > 1:
                    ok = False
            return ok

        def remove(j: int):
            chosen.pop()
            chosen_set.discard(j)
            for c, partners in self.partners[j].items():
                for k in partners:
                    if k in chosen_set:
                        counts[(k, c)] -= 1
                del counts[(j, c)]

        def grow():
            nonlocal pruned
            open_ports = [(i, c) for i in chosen for c in self.candidates[i].members if counts[(i, c)] == 0]
            if not open_ports:
                found.append(Block(self.candidates[seed].dimension + 1, (self.candidates[i] for i in chosen)))
                return
            needed = math.ceil(len(open_ports) / self.ports_per_member)
            if self.candidates[seed].dimension == 1 and len(open_ports) == 2:
                needed = max(needed, self._distance(open_ports[0][1], open_ports[1][1]))
            if len(chosen) + needed > self.size_cap:
                pruned += 1
                return
            i, c = open_ports[0]
            for k in self.partners[i][c]:
                if k <= seed or k in chosen_set or k not in self.alive:
                    continue
                if add(k):
                    grow()
                remove(k)

        add(seed)
        grow()
        remove(seed)
        return found, pruned

    def run(self, threads: int = 1) -> tuple[list[Block], int]:
        seeds = sorted(self.alive)
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                results = list(executor.map(self.from_seed, seeds))
        else:
            results = [self.from_seed(seed) for seed in seeds]
        found = [b for blocks, _ in results for b in blocks]
        return found, sum(p for _, p in results)


def _insert(basis: dict[int, int], vector: int) -> bool:
    """Gaussian elimination over GF(2); returns True if ``vector`` was independent of ``basis``."""
    while vector:
        top = vector.bit_length() - 1
        if top not in basis:
            basis[top] = vector
            return True
        vector ^= basis[top]
    return False


def _in_span(basis: dict[int, int], vector: int) -> bool:
    while vector:
        top = vector.bit_length() - 1
        if top not in basis:
            return False
        vector ^= basis[top]
    return True


def _bitset(block: Block, position: dict[Block, int]) -> int:
    return sum(1 << position[m] for m in block.members)


def irreducible_blocks(found: list[Block], candidates: list[Block]) -> list[Block]:
    """
    Keeps the blocks that are not a product of strictly smaller blocks. Products are symmetric differences, so
    this is a span test over GF(2), done size by size.
    """
    position = {b: i for i, b in enumerate(candidates)}
    basis: dict[int, int] = {}
    irreducible = []
    for _, same_size in groupby(sorted(found, key=lambda b: (len(b), b.key)), key=len):
        same_size = list(same_size)
        vectors = [_bitset(b, position) for b in same_size]
        irreducible.extend(b for b, v in zip(same_size, vectors) if not _in_span(basis, v))
        for v in vectors:
            _insert(basis, v)
    return sorted(irreducible, key=lambda b: b.key)


def is_admissible_block(block: Block, irreducibles: list[Block]) -> bool:
    """Whether ``block`` is a product of irreducible blocks of its dimension."""
    members = sorted({m for b in irreducibles for m in b.members} | set(block.members), key=lambda m: m.key)
    position = {m: i for i, m in enumerate(members)}
    basis: dict[int, int] = {}
    for b in irreducibles:
        _insert(basis, _bitset(b, position))
    return _in_span(basis, _bitset(block, position))


class BlockHierarchy:
    """Irreducible blocks of every dimension inside a window, computed level by level on demand."""

    def __init__(
        self,
        group: MarkedGroup,
        window: Window,
        size_cap: int = DEFAULT_BLOCK_SIZE_CAP,
        threads: int = 1,
        strict: bool = False,
    ):
        self.group = group
        self.window = window
        self.size_cap = size_cap
        self.threads = threads
        self.strict = strict
        self._levels: dict[int, LevelResult] = {}

    def _compute(self, n: int) -> LevelResult:
        if n == 0:
            vertices = tuple(vertex(g) for g in self.window)
            return LevelResult(0, vertices, vertices, 0)
        if n == 1:
            edges = {edge(g, h) for g in self.window for h in self.window.neighbors(g) if h in self.window}
            edges = tuple(sorted(edges, key=lambda b: b.key))
            return LevelResult(1, edges, edges, 0)
        candidates = list(self.level(n - 1).blocks)
        if not candidates:
            return LevelResult(n, (), (), 0)
        found, pruned = _Search(candidates, self.size_cap, self.group).run(self.threads)
        if pruned:
            if self.strict:
                raise BlockSizeCapExceededError(n, self.size_cap, pruned)
            logger.warning(f"Dimension {n}: {pruned} search branches cut at the size cap {self.size_cap}")
        blocks = irreducible_blocks(found, candidates)
        logger.debug(f"Dimension {n}: {len(found)} blocks found, {len(blocks)} irreducible")
        return LevelResult(n, tuple(blocks), tuple(sorted(found, key=lambda b: b.key)), pruned)

    @property
    def pruned(self) -> int:
        """Search branches cut at the size cap over the levels computed so far."""
        return sum(result.pruned for result in self._levels.values())

    def level(self, n: int) -> LevelResult:
        if n < 0:
            raise ValueError(f"Block dimensions are non-negative, got {n}")
        if n not in self._levels:
            self._levels[n] = self._compute(n)
        return self._levels[n]


def enumerate_level(
    group: MarkedGroup,
    n: int,
    window: Window,
    size_cap: int = DEFAULT_BLOCK_SIZE_CAP,
    threads: int = 1,
    strict: bool = False,
) -> list[Block]:
    """
    Irreducible n-blocks inside ``window``: edges for n = 1, otherwise connected blocks of at most ``size_cap``
    irreducible (n-1)-blocks that are not a product of strictly smaller blocks.

    :raises BlockSizeCapExceededError: With ``strict``, if the search had to cut branches at the size cap.
    """
    if n < 1:
        raise ValueError(f"Levels start at dimension 1, got {n}")
    return list(BlockHierarchy(group, window, size_cap, threads, strict).level(n).blocks)
