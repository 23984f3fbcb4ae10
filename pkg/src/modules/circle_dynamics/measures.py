import logging
import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import pandas as pd

from .circle_word import rotation_angles

logger = logging.getLogger(__name__)

DEFAULT_ORBIT_SIZES = (100, 1000, 10_000)
DEFAULT_INTERVAL_COUNT = 16
# ratio m([1/4, 1/2]) / m([1/16, 1/4]) asserted for a measure proportional to Lebesgue
STATED_RATIO = 2.0


def arc_mass(left, right):
    """Lebesgue mass of the arc running forward from ``left`` to ``right`` on the circle."""
    return np.mod(np.asarray(right) - np.asarray(left), 1.0)


def preimage_mass(left, right):
    """Lebesgue mass of the preimage of [left, right] under squaring, i.e. the pushforward of Lebesgue."""
    return np.sqrt(right) - np.sqrt(left)


def image_mass(left, right):
    """Lebesgue mass of the image of [left, right] under squaring."""
    return np.asarray(right) ** 2 - np.asarray(left) ** 2


def orbit_discrepancy(theta: float, n: int) -> float:
    """Star discrepancy of the rotation orbit 0, theta, .., (n - 1) theta, computed exactly from the sorted points."""
    if n <= 0:
        raise ValueError(f"The orbit needs at least one point, got {n}")
    points = np.sort(np.mod(theta * np.arange(n), 1.0))
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - points), np.max(points - (i - 1) / n)))


@dataclass(frozen=True)
class MeasureReport:
    theta: float
    quarter_half_mass: float
    image_mass: float
    mass_ratio: float
    stated_ratio: float
    intervals: pd.DataFrame = field(compare=False, repr=False)
    orbit: pd.DataFrame = field(compare=False, repr=False)

    @property
    def ratio_flagged(self) -> bool:
        """Whether the derived ratio disagrees with the stated one."""
        return not np.isclose(self.mass_ratio, self.stated_ratio)

    def summary(self) -> pd.DataFrame:
        rows = [
            ("theta", self.theta),
            ("mass_quarter_half", self.quarter_half_mass),
            ("mass_image", self.image_mass),
            ("mass_ratio", self.mass_ratio),
            ("stated_ratio", self.stated_ratio),
            ("ratio_flagged", float(self.ratio_flagged)),
            ("max_preimage_defect", float(self.intervals["preimage_defect"].max())),
            ("max_rotation_defect", float(self.intervals["rotation_defect"].max())),
        ]
        return pd.DataFrame(rows, columns=["quantity", "value"])

    def write_csv(self, directory: str, prefix: str = "measure") -> list[str]:
        os.makedirs(directory, exist_ok=True)
        paths = []
        for name, frame in (("summary", self.summary()), ("intervals", self.intervals), ("orbit", self.orbit)):
            path = os.path.join(directory, f"{prefix}_{name}.csv")
            frame.to_csv(path, index=False, float_format="%.17g")
            paths.append(path)
        logger.info(f"Wrote the measure report to {', '.join(paths)}")
        return paths


def measure_experiments(
    theta: float,
    interval_count: int = DEFAULT_INTERVAL_COUNT,
    orbit_sizes: Sequence[int] = DEFAULT_ORBIT_SIZES,
) -> MeasureReport:
    """
    Measure-theoretic checks of the circle action for Lebesgue measure: the masses of [1/4, 1/2] and its square
    image [1/16, 1/4], the pushforward under squaring and the invariance defects under squaring and under the
    rotation on ``interval_count`` equal intervals, and the discrepancy of the rotation orbit of 0.
    """
    (angle,) = rotation_angles(theta, 2)
    quarter_half = float(arc_mass(0.25, 0.5))
    image = float(image_mass(0.25, 0.5))

    left = np.arange(interval_count) / interval_count
    right = np.arange(1, interval_count + 1) / interval_count
    lebesgue = right - left
    pushforward = preimage_mass(left, right)
    rotated = arc_mass(np.mod(left - angle, 1.0), np.mod(right - angle, 1.0))
    intervals = pd.DataFrame(
        {
            "left": left,
            "right": right,
            "lebesgue": lebesgue,
            "pushforward": pushforward,
            "preimage_defect": np.abs(lebesgue - pushforward),
            "rotation_defect": np.abs(lebesgue - rotated),
        }
    )
    orbit = pd.DataFrame(
        {"n": list(orbit_sizes), "star_discrepancy": [orbit_discrepancy(angle, n) for n in orbit_sizes]}
    )
    report = MeasureReport(theta, quarter_half, image, quarter_half / image, STATED_RATIO, intervals, orbit)
    if report.ratio_flagged:
        logger.warning(
            f"Lebesgue gives m([1/4,1/2]) / m([1/16,1/4]) = {report.mass_ratio:.6f}, not the stated {STATED_RATIO}"
        )
    return report
