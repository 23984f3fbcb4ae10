def replace_many(s: str, replacements: dict[str, str]) -> str:
    """
    Replace multiple substrings in a string. There is no guarantee on the order of replacements.
    """
    for old, new in replacements.items():
        s = s.replace(old, new)
    return s


def split_top_level(s: str, separator: str = ",", brackets: tuple[str, str] = ("[(", "])")) -> list[str]:
    """
    Splits a string at separators that are not enclosed in brackets.

    Example:
        split_top_level("[a,b], c, (a,b)")
          returns
        ["[a,b]", " c", " (a,b)"]

    :raises ValueError: If the brackets are unbalanced.
    """
    openers, closers = brackets
    depth = 0
    parts, current = [], []
    for idx, char in enumerate(s):
        if char in openers:
            depth += 1
        elif char in closers:
            depth -= 1
            if depth < 0:
                raise ValueError(f"Unbalanced bracket at column {idx + 1} of {s!r}")
        if char == separator and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(char)
    if depth != 0:
        raise ValueError(f"Unbalanced brackets in {s!r}")
    parts.append("".join(current))
    return parts

