"""Dynamic time warping over complexity-vector time series.

The cost matrix holds pairwise feature costs; the cumulative matrix is the
classic dynamic programme D(i, j) = C(i, j) + min of the three predecessors,
whose corner equals the minimum total cost over all warping paths. Warping
paths are reported 1-based, matching the usual boundary conditions
``path[0] == (1, 1)`` and ``path[-1] == (n, m)``.

Both the raw minimal total cost and a per-step figure (raw divided by the
optimal path length) are reported; pick whichever normalisation a comparison
needs.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from .errors import DtwError
from .leading import ComplexityVector

Feature = tuple[float, ...]
CostFunction = Callable[[Feature, Feature], float]

FEATURE_WIDTH = 5


@dataclass(frozen=True)
class FeatureSeries:
    """A titled, non-empty sequence of 5-component feature vectors.

    Four-component vectors embed by appending a zero fifth component.
    """

    title: str
    features: tuple[Feature, ...]

    def __post_init__(self) -> None:
        normalised = []
        for feature in self.features:
            values = tuple(float(component) for component in feature)
            if len(values) == FEATURE_WIDTH - 1:
                values += (0.0,)
            if len(values) != FEATURE_WIDTH:
                raise DtwError(
                    f"features must have 4 or 5 components, got {len(values)}"
                )
            normalised.append(values)
        if not normalised:
            raise DtwError(f"series {self.title!r} is empty")
        object.__setattr__(self, "features", tuple(normalised))

    @classmethod
    def from_vectors(
        cls, title: str, vectors: Sequence[ComplexityVector]
    ) -> "FeatureSeries":
        return cls(title=title, features=tuple(tuple(v) for v in vectors))

    def __len__(self) -> int:
        return len(self.features)


def euclidean_cost(a: Feature, b: Feature) -> float:
    """Euclidean distance between equal-width feature vectors."""
    if len(a) != len(b):
        raise DtwError(f"feature widths differ: {len(a)} vs {len(b)}")
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))


def _spot_check_cost(cost: CostFunction, x: FeatureSeries, y: FeatureSeries) -> None:
    """Sample the cost function against the three required axioms."""
    sample = list(dict.fromkeys(x.features[:4] + y.features[:4]))
    for feature in sample:
        if cost(feature, feature) != 0:
            raise DtwError("cost function violates cost(x, x) == 0")
    for a, b in combinations(sample, 2):
        forward, backward = cost(a, b), cost(b, a)
        if forward < 0 or backward < 0:
            raise DtwError("cost function produced a negative value")
        if abs(forward - backward) > 1e-12:
            raise DtwError("cost function is not symmetric")
        if forward == 0:
            raise DtwError("cost function returned 0 for distinct features")


def cost_matrix(x: FeatureSeries, y: FeatureSeries, cost: CostFunction) -> np.ndarray:
    grid = np.empty((len(x), len(y)))
    for i, a in enumerate(x.features):
        for j, b in enumerate(y.features):
            grid[i, j] = cost(a, b)
    return grid


def accumulate_cost(costs: np.ndarray) -> np.ndarray:
    """Cumulative matrix; first row and column accumulate along their only
    legal predecessor."""
    n, m = costs.shape
    cumulative = np.empty_like(costs)
    cumulative[0, 0] = costs[0, 0]
    for i in range(1, n):
        cumulative[i, 0] = costs[i, 0] + cumulative[i - 1, 0]
    for j in range(1, m):
        cumulative[0, j] = costs[0, j] + cumulative[0, j - 1]
    for i in range(1, n):
        for j in range(1, m):
            cumulative[i, j] = costs[i, j] + min(
                cumulative[i - 1, j - 1],
                cumulative[i - 1, j],
                cumulative[i, j - 1],
            )
    return cumulative


def backtrack_path(cumulative: np.ndarray) -> tuple[tuple[int, int], ...]:
    """Optimal warping path through a cumulative matrix, 1-based.

    Ties prefer the diagonal step, then the step that advances the first
    series, then the step that advances the second; the result is
    deterministic and among the shortest optimal paths.
    """
    i, j = cumulative.shape[0] - 1, cumulative.shape[1] - 1
    path = [(i + 1, j + 1)]
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            best = cumulative[i - 1, j - 1]
            move = (i - 1, j - 1)
            if cumulative[i - 1, j] < best:
                best = cumulative[i - 1, j]
                move = (i - 1, j)
            if cumulative[i, j - 1] < best:
                move = (i, j - 1)
            i, j = move
            path.append((i + 1, j + 1))
            continue
        path.append((i + 1, j + 1))
    path.reverse()
    return tuple(path)


def is_legal_path(path: Sequence[tuple[int, int]], n: int, m: int) -> bool:
    """Mechanical check of the four warping-path conditions (1-based)."""
    if not path:
        return False
    if any(not (1 <= i <= n and 1 <= j <= m) for i, j in path):
        return False
    if path[0] != (1, 1) or path[-1] != (n, m):
        return False
    for (i1, j1), (i2, j2) in zip(path, path[1:]):
        if i2 < i1 or j2 < j1:
            return False
        if (i2 - i1, j2 - j1) not in {(1, 0), (0, 1), (1, 1)}:
            return False
    return True


@dataclass(frozen=True)
class DtwResult:
    distance: float
    normalised: float
    path: tuple[tuple[int, int], ...]


def dtw(
    x: FeatureSeries, y: FeatureSeries, cost: CostFunction = euclidean_cost
) -> DtwResult:
    """Minimum total cost over all warping paths, with the optimal path.

    ``normalised`` divides the raw total cost by the optimal path length.
    """
    if len(x) == 0 or len(y) == 0:
        raise DtwError("cannot warp an empty series")
    _spot_check_cost(cost, x, y)
    cumulative = accumulate_cost(cost_matrix(x, y, cost))
    path = backtrack_path(cumulative)
    distance = float(cumulative[-1, -1])
    return DtwResult(distance=distance, normalised=distance / len(path), path=path)


@dataclass(frozen=True)
class CorpusDistances:
    """Symmetric pairwise distance matrices for a corpus of series."""

    titles: tuple[str, ...]
    raw: tuple[tuple[float, ...], ...]
    normalised: tuple[tuple[float, ...], ...]

    def matrix(self, normalised: bool = False) -> tuple[tuple[float, ...], ...]:
        return self.normalised if normalised else self.raw

    def to_csv(self, normalised: bool = False) -> str:
        """Titles as headers, 2-decimal rendering; use records for full
        precision."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["", *self.titles])
        for title, row in zip(self.titles, self.matrix(normalised)):
            writer.writerow([title, *(f"{value:.2f}" for value in row)])
        return buffer.getvalue()

    def to_records(self) -> dict:
        return {
            "titles": list(self.titles),
            "raw": [list(row) for row in self.raw],
            "normalised": [list(row) for row in self.normalised],
        }


def distance_matrix(
    corpus: Sequence[FeatureSeries], cost: CostFunction = euclidean_cost
) -> CorpusDistances:
    """All pairwise DTW distances; zero diagonal, symmetric by construction."""
    if len(corpus) < 2:
        raise DtwError(f"need at least two series, got {len(corpus)}")
    size = len(corpus)
    raw = [[0.0] * size for _ in range(size)]
    normalised = [[0.0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            result = dtw(corpus[i], corpus[j], cost)
            raw[i][j] = raw[j][i] = result.distance
            normalised[i][j] = normalised[j][i] = result.normalised
    return CorpusDistances(
        titles=tuple(series.title for series in corpus),
        raw=tuple(tuple(row) for row in raw),
        normalised=tuple(tuple(row) for row in normalised),
    )
