import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.stats import qmc

from .circle_word import CircleWord, random_reduced_word, rotation_angles

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 10_000
DEFAULT_SCAN_GRID = 100_000
DEFAULT_TOUCH_TOLERANCE = 1e-3


def _wrap(values: np.ndarray) -> np.ndarray:
    values = np.mod(values, 1.0)
    return np.where(values >= 1.0, 0.0, values)


def eval_word(word: CircleWord, theta: float, x):
    """
    Applies the word to points of [0, 1), rightmost letter first: a squares, a^-1 takes the square root and the
    b letters rotate. ``x`` may be a float or an array; the result has the same shape.
    """
    angles = rotation_angles(theta, word.rank)
    values = _wrap(np.asarray(x, dtype=np.float64))
    for letter in reversed(word.letters):
        if letter == 1:
            values = values * values
        elif letter == -1:
            values = np.sqrt(values)
        else:
            angle = angles[abs(letter) - 2]
            values = _wrap(values + angle if letter > 0 else values - angle)
    return float(values) if np.ndim(x) == 0 else values


def circle_distance(x, y):
    d = np.mod(np.abs(np.asarray(x) - np.asarray(y)), 1.0)
    return np.minimum(d, 1.0 - d)


def signed_offset(values):
    """Representative of values mod 1 in [-1/2, 1/2)."""
    return np.mod(np.asarray(values) + 0.5, 1.0) - 0.5


def halton_points(count: int) -> np.ndarray:
    """The first ``count`` points of the unscrambled one-dimensional Halton sequence, starting at 0."""
    return qmc.Halton(d=1, scramble=False).random(count).ravel()


def relation_defect(word: CircleWord, theta: float, samples: int = DEFAULT_SAMPLES) -> float:
    """
    Largest circle distance between x and word(x) over a deterministic low-discrepancy sample. A nontrivial
    relation of the action would give 0.
    """
    if not word.letters:
        return 0.0
    points = halton_points(samples)
    return float(np.max(circle_distance(eval_word(word, theta, points), points)))


def faithfulness_sweep(
    theta: float,
    count: int = 100,
    max_length: int = 8,
    rank: int = 2,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> pd.DataFrame:
    """Relation defects of ``count`` random nonempty reduced words of length at most ``max_length``."""
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(count):
        word = random_reduced_word(rng, int(rng.integers(1, max_length + 1)), rank)
        rows.append({"word": str(word), "length": len(word), "defect": relation_defect(word, theta, samples)})
    frame = pd.DataFrame(rows, columns=["word", "length", "defect"])
    if not frame.empty:
        logger.info(f"Smallest relation defect over {count} random words: {frame['defect'].min():.3e}")
    return frame


@dataclass(frozen=True)
class FixedPointScan:
    # approximate fixed points in [0, 1), ascending
    points: tuple[float, ...]
    crossings: int
    touches: int
    # sign changes of word(x) - x caused by wrapping around the circle, not by a fixed point
    wraps: int
    grid: int


def fixed_point_scan(
    word: CircleWord, theta: float, grid: int = DEFAULT_SCAN_GRID, touch_tolerance: float = DEFAULT_TOUCH_TOLERANCE
) -> FixedPointScan:
    """
    Locates fixed points of a nonempty word on a uniform grid. Sign changes of the offset word(x) - x between
    neighboring grid points give crossings, refined by linear interpolation; local minima of its absolute value
    below ``touch_tolerance`` give touching fixed points such as 0 for a. This is sampled evidence, not root
    isolation.
    """
    if not word.letters:
        raise ValueError("The empty word fixes every point")
    xs = np.arange(grid) / grid
    offset = signed_offset(eval_word(word, theta, xs) - xs)
    following = np.roll(offset, -1)
    sign_change = offset * following < 0
    continuous = sign_change & (np.abs(following - offset) < 0.5)
    wraps = int(np.count_nonzero(sign_change & ~continuous))

    idx = np.nonzero(continuous)[0]
    roots = np.mod(xs[idx] + offset[idx] / (offset[idx] - following[idx]) / grid, 1.0)

    size = np.abs(offset)
    touch = (size <= touch_tolerance) & (size <= np.roll(size, 1)) & (size < np.roll(size, -1))
    touch &= ~(continuous | np.roll(continuous, 1))
    touches = xs[touch]

    points = tuple(sorted(float(p) for p in np.concatenate([roots, touches])))
    logger.debug(f"Fixed point scan of {word}: {len(roots)} crossings, {len(touches)} touches, {wraps} wraps")
    return FixedPointScan(points, len(roots), len(touches), wraps, grid)
