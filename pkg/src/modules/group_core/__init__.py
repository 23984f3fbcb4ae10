__all__ = [
    "AbstractNormalizer",
    "ConjugacyEvidence",
    "DEFAULT_BALL_SIZE_CAP",
    "Element",
    "GroupClass",
    "IccReport",
    "IccVerdict",
    "MarkedGroup",
    "Presentation",
    "RewritingSystem",
    "Window",
    "Word",
    "ball",
    "conjugacy_closure",
    "format_element",
    "format_word",
    "icc_evidence",
    "inverse",
    "make_group",
    "multiply",
    "parse_presentation",
    "parse_word",
    "parse_word_text",
    "word_length",
]

from .abstract_normalizer import AbstractNormalizer
from .ball import DEFAULT_BALL_SIZE_CAP, Window, ball
from .icc import ConjugacyEvidence, IccReport, IccVerdict, conjugacy_closure, icc_evidence
from .knuth_bendix import RewritingSystem
from .marked_group import (
    Element,
    GroupClass,
    MarkedGroup,
    format_element,
    inverse,
    make_group,
    multiply,
    parse_word,
    word_length,
)
from .presentation import Presentation, format_word, parse_presentation, parse_word_text
from .words import Word
