"""
Bracketed text form of blocks: a 0-block is a word, a 1-block ``[g h]`` and a higher block the concatenation of its
members in brackets, e.g. ``[[e s1][e s2][s1 s1*s2][s2 s1*s2]]`` for the unit square of Z^2. Members appear in
canonical order, so equal blocks have equal text.
"""

from src.modules.errors import BlockParseError, InputError
from src.modules.group_core import MarkedGroup, format_element, parse_word

from .block import Block


def format_block(group: MarkedGroup, block: Block) -> str:
    if block.dimension == 0:
        return format_element(group, block.members[0])
    if block.dimension == 1:
        return "[" + " ".join(format_element(group, g) for g in block.members) + "]"
    return "[" + "".join(format_block(group, m) for m in block.members) + "]"


class _BlockParser:
    def __init__(self, group: MarkedGroup, text: str):
        self._group = group
        self._text = text
        self._pos = 0

    def _error(self, reason: str):
        raise BlockParseError(self._text, self._pos, reason)

    def _skip_spaces(self):
        while self._pos < len(self._text) and self._text[self._pos].isspace():
            self._pos += 1

    def _peek(self) -> str:
        self._skip_spaces()
        return self._text[self._pos] if self._pos < len(self._text) else ""

    def _word(self):
        start = self._pos
        while self._pos < len(self._text) and self._text[self._pos] not in "[] \t\n":
            self._pos += 1
        if start == self._pos:
            self._error("expected a word")
        try:
            return parse_word(self._group, self._text[start : self._pos])
        except InputError as e:
            self._pos = start
            self._error(str(e))

    def item(self):
        if self._peek() != "[":
            return self._word()
        self._pos += 1
        start = self._pos
        items = []
        while self._peek() not in ("]", ""):
            items.append(self.item())
        if self._peek() != "]":
            self._error("missing ']'")
        self._pos += 1
        if not items:
            self._pos = start
            self._error("empty brackets")
        if all(isinstance(i, Block) for i in items):
            dimensions = {i.dimension for i in items}
            if len(dimensions) != 1:
                self._error("members of different dimensions")
            return Block(dimensions.pop() + 1, items)
        if any(isinstance(i, Block) for i in items):
            self._error("words and blocks cannot be mixed")
        if len(items) != 2 or items[0] == items[1]:
            self._pos = start
            self._error("a 1-block is a pair of distinct words")
        return Block(1, items)

    def parse(self) -> Block:
        result = self.item()
        if self._peek():
            self._error("unexpected trailing text")
        return result if isinstance(result, Block) else Block(0, (result,))


def parse_block(group: MarkedGroup, text: str) -> Block:
    """
    Reads the bracketed form written by :func:`format_block`.

    :raises BlockParseError: With the position of the first problem.
    """
    return _BlockParser(group, text).parse()
