import logging
import re
from dataclasses import dataclass

from typeguard import typechecked

from src.modules.errors import PresentationParseError
from src.modules.helpers import replace_many, split_top_level

from .words import Word, commutator, free_reduce, power

logger = logging.getLogger(__name__)

IDENTITY_SYMBOL = "e"

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_INT_RE = re.compile(r"\s*\{?\s*([+-]?)\s*(\d+)\s*\}?")
_SEPARATORS = " \t*."
_UNICODE_REPLACEMENTS = {
    "⟨": "<",
    "⟩": ">",
    "〈": "<",
    "〉": ">",
    "⁻¹": "^-1",
    "−": "-",
    "·": "*",
}


@typechecked
@dataclass(frozen=True)
class Presentation:
    """Generators and relators of a finite presentation, relators as freely reduced words."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    text: str

    @property
    def rank(self) -> int:
        return len(self.generators)


def normalize_text(text: str) -> str:
    """Maps the unicode notation of presentations to the ASCII one."""
    return replace_many(text, _UNICODE_REPLACEMENTS)


def parse_presentation(text: str) -> Presentation:
    """
    Parses ``<a,b,c | w1, w2>``.

    Relators may use juxtaposition or ``*`` for products, ``^n`` and ``^-n`` for powers, parentheses for grouping
    and ``[x,y]`` for the commutator x y x^-1 y^-1. The unicode form ``⟨a,b | w⟩`` with ``⁻¹`` is accepted too.

    :raises PresentationParseError: If the text is not a presentation.
    """
    normalized = normalize_text(text).strip()
    if not normalized.startswith("<"):
        raise PresentationParseError(normalized, 0, "a presentation starts with '<'")
    if not normalized.endswith(">"):
        raise PresentationParseError(normalized, max(len(normalized) - 1, 0), "a presentation ends with '>'")
    body = normalized[1:-1]
    bar = body.find("|")
    if bar < 0:
        raise PresentationParseError(normalized, len(normalized) - 1, "missing '|' between generators and relators")

    generators = tuple(name.strip() for name in body[:bar].split(","))
    offset = 1
    for name in generators:
        position = normalized.find(name, offset) if name else offset
        if not _NAME_RE.match(name):
            raise PresentationParseError(normalized, position, f"invalid generator name {name!r}")
        if name == IDENTITY_SYMBOL:
            raise PresentationParseError(normalized, position, f"{IDENTITY_SYMBOL!r} is reserved for the identity")
        offset = position + len(name)
    duplicates = sorted({name for name in generators if generators.count(name) > 1})
    if duplicates:
        raise PresentationParseError(normalized, 1, f"duplicate generators {duplicates}")

    relator_offset = 1 + bar + 1
    try:
        parts = split_top_level(body[bar + 1 :])
    except ValueError as e:
        raise PresentationParseError(normalized, relator_offset, str(e))
    relators = []
    for part in parts:
        if part.strip():
            word = free_reduce(_WordParser(part, generators, normalized, relator_offset).parse())
            if word:
                relators.append(word)
            else:
                logger.warning(f"Relator {part.strip()!r} is freely trivial and is dropped.")
        relator_offset += len(part) + 1
    return Presentation(generators=generators, relators=tuple(relators), text=normalized)


def parse_word_text(text: str, generators: tuple[str, ...], reduce: bool = True) -> Word:
    """
    Parses a word such as ``s1^2 s2^-1`` or ``[a,b]a`` over the given generator names. ``e`` is the identity.

    :param reduce: When false, the letters are returned exactly as written (after expanding powers).
    :raises PresentationParseError: If the text is not a word over the generators.
    """
    normalized = normalize_text(text)
    word = _WordParser(normalized, generators, normalized, 0).parse()
    return free_reduce(word) if reduce else word


def format_word(word: Word, generators: tuple[str, ...]) -> str:
    """Formats a word with runs collapsed into powers, e.g. ``s1^2*s2^-1``; the empty word is ``e``."""
    if not word:
        return IDENTITY_SYMBOL
    tokens = []
    run_letter, run_length = word[0], 0
    for letter in word + (0,):
        if letter == run_letter:
            run_length += 1
            continue
        name = generators[abs(run_letter) - 1]
        exponent = run_length if run_letter > 0 else -run_length
        tokens.append(name if exponent == 1 else f"{name}^{exponent}")
        run_letter, run_length = letter, 1
    return "*".join(tokens)


class _WordParser:
    def __init__(self, text: str, generators: tuple[str, ...], source: str, offset: int):
        self._text = text
        self._source = source
        self._offset = offset
        self._pos = 0
        self._names = sorted(generators + (IDENTITY_SYMBOL,), key=len, reverse=True)
        self._letter = {name: idx + 1 for idx, name in enumerate(generators)}

    def parse(self) -> Word:
        word = self._sequence()
        if self._pos < len(self._text):
            self._fail(f"unexpected {self._text[self._pos]!r}")
        return word

    def _fail(self, reason: str):
        raise PresentationParseError(self._source, self._offset + self._pos, reason)

    def _skip(self, characters: str = _SEPARATORS):
        while self._pos < len(self._text) and self._text[self._pos] in characters:
            self._pos += 1

    def _expect(self, char: str):
        self._skip(" \t")
        if self._pos >= len(self._text) or self._text[self._pos] != char:
            self._fail(f"expected {char!r}")
        self._pos += 1

    def _sequence(self) -> Word:
        letters: list[int] = []
        while True:
            self._skip()
            if self._pos >= len(self._text) or self._text[self._pos] in ")],":
                return tuple(letters)
            letters.extend(self._factor())

    def _factor(self) -> Word:
        atom = self._atom()
        self._skip(" \t")
        if self._pos < len(self._text) and self._text[self._pos] == "^":
            self._pos += 1
            match = _INT_RE.match(self._text, self._pos)
            if not match:
                self._fail("expected an integer exponent")
            self._pos = match.end()
            exponent = int(match.group(2))
            return power(atom, -exponent if match.group(1) == "-" else exponent)
        return atom

    def _atom(self) -> Word:
        char = self._text[self._pos]
        if char == "(":
            self._pos += 1
            inner = self._sequence()
            self._expect(")")
            return inner
        if char == "[":
            self._pos += 1
            left = self._sequence()
            self._expect(",")
            right = self._sequence()
            self._expect("]")
            return commutator(left, right)
        for name in self._names:
            if self._text.startswith(name, self._pos):
                self._pos += len(name)
                return () if name == IDENTITY_SYMBOL else (self._letter[name],)
        self._fail(f"unknown symbol starting with {char!r}")
