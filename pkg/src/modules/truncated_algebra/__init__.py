__all__ = [
    "DefectReport",
    "generator_operators",
    "identity_defect",
    "length_raising",
    "letter_name",
    "parse_letter",
    "predicted_defect",
    "predicted_defect_support",
    "right_translation",
]

from .defect import DefectReport, identity_defect, predicted_defect, predicted_defect_support
from .operators import generator_operators, length_raising, letter_name, parse_letter, right_translation
