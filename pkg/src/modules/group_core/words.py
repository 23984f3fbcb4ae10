"""
Words over a symmetric generating set.

A letter is a signed generator index: ``+(i + 1)`` is the i-th generator and ``-(i + 1)`` its formal inverse.
Words are tuples of letters. The canonical letter order is s1 < s1^-1 < s2 < s2^-1 < ..., and words are compared
in shortlex order (length first, then letter by letter).
"""

Word = tuple[int, ...]

_CHAR_OFFSET = 0x100


def letter_key(letter: int) -> tuple[int, int]:
    return abs(letter), 0 if letter > 0 else 1


def word_key(word: Word) -> tuple[int, tuple[tuple[int, int], ...]]:
    return len(word), tuple(letter_key(letter) for letter in word)


def invert_word(word: Word) -> Word:
    return tuple(-letter for letter in reversed(word))


def free_reduce(word: Word) -> Word:
    stack: list[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def is_freely_reduced(word: Word) -> bool:
    return all(word[i] != -word[i + 1] for i in range(len(word) - 1))


def power(word: Word, exponent: int) -> Word:
    if exponent >= 0:
        return word * exponent
    return invert_word(word) * (-exponent)


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x y x^-1 y^-1"""
    return x + y + invert_word(x) + invert_word(y)


def letters_of_rank(rank: int) -> tuple[int, ...]:
    """All letters over ``rank`` generators in canonical order."""
    return tuple(letter for i in range(1, rank + 1) for letter in (i, -i))


# Letters are mapped to single characters whose code point order equals the canonical letter order, so that
# shortlex order of encoded strings is shortlex order of words.
def letter_to_char(letter: int) -> str:
    return chr(_CHAR_OFFSET + 2 * (abs(letter) - 1) + (0 if letter > 0 else 1))


def char_to_letter(char: str) -> int:
    code = ord(char) - _CHAR_OFFSET
    index = code // 2 + 1
    return index if code % 2 == 0 else -index


def encode_word(word: Word) -> str:
    return "".join(letter_to_char(letter) for letter in word)


def decode_word(text: str) -> Word:
    return tuple(char_to_letter(char) for char in text)
