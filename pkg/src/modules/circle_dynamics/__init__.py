__all__ = [
    "CircleWord",
    "DEFAULT_ORBIT_SIZES",
    "DEFAULT_SAMPLES",
    "DEFAULT_SCAN_GRID",
    "FixedPointScan",
    "GOLDEN_THETA",
    "MeasureReport",
    "STATED_RATIO",
    "arc_mass",
    "circle_distance",
    "circle_generators",
    "eval_word",
    "faithfulness_sweep",
    "fixed_point_scan",
    "halton_points",
    "image_mass",
    "measure_experiments",
    "orbit_discrepancy",
    "parse_circle_word",
    "preimage_mass",
    "random_reduced_word",
    "relation_defect",
    "rotation_angles",
    "signed_offset",
]

from .action import (
    DEFAULT_SAMPLES,
    DEFAULT_SCAN_GRID,
    FixedPointScan,
    circle_distance,
    eval_word,
    faithfulness_sweep,
    fixed_point_scan,
    halton_points,
    relation_defect,
    signed_offset,
)
from .circle_word import (
    GOLDEN_THETA,
    CircleWord,
    circle_generators,
    parse_circle_word,
    random_reduced_word,
    rotation_angles,
)
from .measures import (
    DEFAULT_ORBIT_SIZES,
    STATED_RATIO,
    MeasureReport,
    arc_mass,
    image_mass,
    measure_experiments,
    orbit_discrepancy,
    preimage_mass,
)
