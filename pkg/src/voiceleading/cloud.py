"""Complexity clouds: multisets of complexity vectors and 3-D projections.

A piece's transitions yield one complexity vector each; the cloud counts the
multiplicity of every distinct vector. Projections keep three of the five
component axes, merge coinciding points and normalise each multiplicity by
the per-voice note count after homogenisation (the circle radius used by
downstream plotting).
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import CloudError
from .leading import ComplexityVector

AXES = ("up", "down", "constant", "crossings", "rests")

_AXIS_ALIASES = {
    "const": "constant",
    "cross": "crossings",
    "crossing": "crossings",
    "rest": "rests",
}


@dataclass(frozen=True)
class ComplexityCloud:
    title: str
    total_slices: int
    entries: Mapping[ComplexityVector, int]

    @property
    def transition_count(self) -> int:
        return sum(self.entries.values())

    def multiplicity(self, vector: Sequence[int]) -> int:
        return self.entries.get(ComplexityVector(*vector), 0)

    def sorted_entries(self) -> list[tuple[ComplexityVector, int]]:
        return sorted(self.entries.items())


@dataclass(frozen=True)
class CloudPoint:
    coords: tuple[int, int, int]
    multiplicity: int
    radius: float


@dataclass(frozen=True)
class CloudProjection:
    piece: str
    axes: tuple[str, str, str]
    points: tuple[CloudPoint, ...]


def build_cloud(
    vectors: Iterable[ComplexityVector], total_slices: int, title: str = ""
) -> ComplexityCloud:
    """Count vector multiplicities; expects one vector per transition."""
    collected = tuple(ComplexityVector(*v) for v in vectors)
    if total_slices < 1:
        raise CloudError(f"total_slices must be positive, got {total_slices}")
    if len(collected) != total_slices - 1:
        raise CloudError(
            f"expected {total_slices - 1} vectors for {total_slices} slices, "
            f"got {len(collected)}"
        )
    return ComplexityCloud(
        title=title, total_slices=total_slices, entries=dict(Counter(collected))
    )


def normalise_axes(axes: Sequence[str]) -> tuple[str, str, str]:
    """Resolve axis names (aliases allowed) into three distinct components."""
    resolved = []
    for name in axes:
        key = name.strip().lower()
        key = _AXIS_ALIASES.get(key, key)
        if key not in AXES:
            raise CloudError(
                f"unknown axis {name!r}; valid axes: {', '.join(AXES)}"
            )
        resolved.append(key)
    if len(resolved) != 3:
        raise CloudError(f"a projection needs exactly 3 axes, got {len(resolved)}")
    if len(set(resolved)) != 3:
        raise CloudError(f"projection axes must be distinct: {resolved}")
    return tuple(resolved)  # type: ignore[return-value]


def project(cloud: ComplexityCloud, axes: Sequence[str]) -> CloudProjection:
    """Keep three axes, merging points and summing multiplicities."""
    kept = normalise_axes(axes)
    indices = [AXES.index(axis) for axis in kept]
    merged: Counter = Counter()
    for vector, multiplicity in cloud.entries.items():
        merged[tuple(vector[i] for i in indices)] += multiplicity
    points = tuple(
        CloudPoint(coords, multiplicity, multiplicity / cloud.total_slices)
        for coords, multiplicity in sorted(merged.items())
    )
    return CloudProjection(piece=cloud.title, axes=kept, points=points)


def default_projections(cloud: ComplexityCloud) -> list[CloudProjection]:
    """The two standard views: drop the crossing axis, drop the constant axis."""
    return [
        project(cloud, ("up", "down", "constant")),
        project(cloud, ("up", "down", "crossings")),
    ]


def projection_records(projection: CloudProjection) -> dict:
    return {
        "piece": projection.piece,
        "axes": list(projection.axes),
        "points": [
            {
                "coords": list(point.coords),
                "multiplicity": point.multiplicity,
                "radius": point.radius,
            }
            for point in projection.points
        ],
    }


def projection_csv(projection: CloudProjection) -> str:
    """CSV with one row per projected point, sorted lexicographically."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([*projection.axes, "multiplicity", "radius"])
    for point in projection.points:
        writer.writerow([*point.coords, point.multiplicity, point.radius])
    return buffer.getvalue()
