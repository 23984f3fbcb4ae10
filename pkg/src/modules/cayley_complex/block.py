import logging
from collections import defaultdict
from functools import reduce
from typing import Iterable

from src.modules.errors import BlockCompositionError, BlockDimensionError
from src.modules.group_core import Element, MarkedGroup

logger = logging.getLogger(__name__)


class Block:
    """
    An n-block of the Cayley complex.

    A 0-block holds one element and a 1-block an unordered pair of distinct elements. For n >= 2 an n-block is a
    finite set of (n-1)-blocks in which, for every member b and every c in b, exactly one other member b' has
    b & b' = {c}. That condition is not checked here; see :func:`satisfies_matching`.

    Members are stored sorted by their keys, so equal blocks have equal keys and encodings.
    """

    __slots__ = ("_dimension", "_members", "_member_set", "_key", "_hash", "_support")

    def __init__(self, dimension: int, members: Iterable["Element | Block"]):
        members = tuple(members)
        if dimension == 0:
            if len(members) != 1 or not isinstance(members[0], Element):
                raise ValueError("A 0-block holds exactly one element")
        elif dimension == 1:
            if len(members) != 2 or not all(isinstance(m, Element) for m in members) or members[0] == members[1]:
                raise ValueError("A 1-block is a pair of distinct elements")
            members = tuple(sorted(members, key=lambda g: g.key))
        elif dimension >= 2:
            if not members:
                raise ValueError("Blocks of dimension >= 2 need members")
            for m in members:
                if not isinstance(m, Block) or m.dimension != dimension - 1:
                    raise BlockDimensionError(dimension - 1, m.dimension if isinstance(m, Block) else 0)
            members = tuple(sorted(set(members), key=lambda b: b.key))
        else:
            raise ValueError(f"Block dimensions are non-negative, got {dimension}")
        self._dimension = dimension
        self._members = members
        self._member_set = frozenset(members)
        self._key = tuple(m.key for m in members)
        self._hash = hash((dimension, self._key))
        self._support: frozenset[Element] | None = None

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def members(self) -> tuple:
        return self._members

    @property
    def member_set(self) -> frozenset:
        return self._member_set

    @property
    def key(self) -> tuple:
        return self._key

    @property
    def support(self) -> frozenset[Element]:
        """The group elements reached by recursively flattening the members."""
        if self._support is None:
            if self._dimension <= 1:
                self._support = frozenset(self._members)
            else:
                self._support = frozenset().union(*(m.support for m in self._members))
        return self._support

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __contains__(self, item) -> bool:
        return item in self._member_set

    def __eq__(self, other):
        if not isinstance(other, Block):
            return NotImplemented
        return self._hash == other._hash and self._dimension == other._dimension and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Block(dimension={self._dimension}, members={len(self._members)})"


def vertex(g: Element) -> Block:
    return Block(0, (g,))


def edge(g: Element, h: Element) -> Block:
    return Block(1, (g, h))


def is_edge(group: MarkedGroup, block: Block) -> bool:
    """Whether a 1-block joins two elements at word distance 1."""
    g, h = block.members
    return len(group.multiply(group.inverse(g), h)) == 1


def satisfies_matching(members: Iterable[Block]) -> bool:
    """For every member b and every c in b, exactly one other member b' has b & b' = {c}."""
    members = list(members)
    containing = defaultdict(list)
    for b in members:
        for c in b.members:
            containing[c].append(b)
    for b in members:
        for c in b.members:
            partners = sum(1 for other in containing[c] if other is not b and b.member_set & other.member_set == {c})
            if partners != 1:
                return False
    return True


def symmetric_difference(blocks: Iterable[Block]) -> frozenset:
    """Raw product b1.b2...br of a family of blocks, as a member set."""
    return reduce(lambda acc, b: acc ^ b.member_set, blocks, frozenset())


def compose_blocks(a: Block, b: Block) -> Block | None:
    """
    The product a.b: the symmetric difference of the member sets. ``None`` stands for the empty product.

    :raises BlockDimensionError: If the dimensions differ or are 0.
    :raises BlockCompositionError: If the symmetric difference is not a block.
    """
    if a.dimension != b.dimension or a.dimension == 0:
        raise BlockDimensionError(a.dimension, b.dimension)
    difference = a.member_set ^ b.member_set
    if not difference:
        return None
    if a.dimension == 1:
        if len(difference) != 2:
            raise BlockCompositionError(f"The product of two 1-blocks has {len(difference)} elements, not 2.")
    elif not satisfies_matching(difference):
        raise BlockCompositionError("The symmetric difference violates the matching condition of a block.")
    return Block(a.dimension, difference)


def act(group: MarkedGroup, g: Element, block: Block, _cache: dict | None = None) -> Block:
    """Left translation g.block, applied recursively to the members."""
    if g.is_identity():
        return block
    cache = {} if _cache is None else _cache

    def translate(h: Element) -> Element:
        image = cache.get(h)
        if image is None:
            image = group.multiply(g, h)
            cache[h] = image
        return image

    if block.dimension <= 1:
        return Block(block.dimension, (translate(h) for h in block.members))
    return Block(block.dimension, (act(group, g, m, cache) for m in block.members))


def diameter(group: MarkedGroup, block: Block) -> int:
    support = sorted(block.support, key=lambda h: h.key)
    return max((len(group.multiply(group.inverse(u), v)) for u in support for v in support), default=0)
