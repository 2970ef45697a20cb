"""Whole-piece analysis: transitions, listing text and lossless records.

The listing format mirrors the classic analysis printout::

    Voice Leading: ['F4', 'C4'] ['G4', 'D4']
    [2, 0, 0, 0] - similar motion up

Pieces without rests print four-component vectors; pieces that rest
anywhere print all five components with a ``c = `` prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cloud import ComplexityCloud, build_cloud
from .dtw import FeatureSeries
from .leading import ComplexityVector, complexity, motion_label
from .pitch import render_pitch
from .score import Score, format_duration, homogenise, leading_pairs, parse_duration


@dataclass(frozen=True)
class TransitionRecord:
    index: int
    source: tuple[str, ...]
    target: tuple[str, ...]
    vector: ComplexityVector
    label: Optional[str]


@dataclass(frozen=True)
class AnalysisReport:
    title: str
    unit: Fraction
    voice_names: tuple[str, ...]
    total_slices: int
    transitions: tuple[TransitionRecord, ...]
    cloud: ComplexityCloud

    @property
    def vectors(self) -> tuple[ComplexityVector, ...]:
        return tuple(record.vector for record in self.transitions)

    @property
    def uses_rests(self) -> bool:
        return any(record.vector.rests for record in self.transitions)

    def feature_series(self) -> FeatureSeries:
        return FeatureSeries.from_vectors(self.title, self.vectors)


def analyze_score(score: Score) -> AnalysisReport:
    """Homogenise, walk the transitions and aggregate the cloud."""
    homogenised = homogenise(score)
    n = homogenised.num_voices
    transitions = []
    vectors = []
    for index, leading in enumerate(leading_pairs(homogenised), start=1):
        vector = complexity(leading)
        vectors.append(vector)
        transitions.append(
            TransitionRecord(
                index=index,
                source=tuple(render_pitch(sound) for sound in leading.source),
                target=tuple(render_pitch(sound) for sound in leading.target),
                vector=vector,
                label=motion_label(vector, n),
            )
        )
    return AnalysisReport(
        title=score.title,
        unit=homogenised.unit,
        voice_names=homogenised.voice_names,
        total_slices=homogenised.num_slices,
        transitions=tuple(transitions),
        cloud=build_cloud(vectors, homogenised.num_slices, title=score.title),
    )


def _tuple_text(names: tuple[str, ...]) -> str:
    return str(list(names))


def render_listing(report: AnalysisReport) -> str:
    """Two lines per transition in the classic listing format."""
    wide = report.uses_rests
    lines = []
    for record in report.transitions:
        lines.append(
            f"Voice Leading: {_tuple_text(record.source)} {_tuple_text(record.target)}"
        )
        vector_text = str(list(record.vector.components(include_rests=wide)))
        prefix = "c = " if wide else ""
        suffix = f" - {record.label}" if record.label else ""
        lines.append(f"{prefix}{vector_text}{suffix}")
    return "\n".join(lines) + "\n"


def report_to_dict(report: AnalysisReport) -> dict:
    """Plain-data form of a report; round-trips via report_from_dict."""
    return {
        "title": report.title,
        "unit": format_duration(report.unit),
        "voice_names": list(report.voice_names),
        "total_slices": report.total_slices,
        "transitions": [
            {
                "index": record.index,
                "source": list(record.source),
                "target": list(record.target),
                "vector": list(record.vector),
                "label": record.label,
            }
            for record in report.transitions
        ],
        "cloud": {
            "total_slices": report.cloud.total_slices,
            "entries": [
                {"vector": list(vector), "multiplicity": multiplicity}
                for vector, multiplicity in report.cloud.sorted_entries()
            ],
        },
        "series": [list(vector) for vector in report.vectors],
    }


def report_from_dict(data: dict) -> AnalysisReport:
    transitions = tuple(
        TransitionRecord(
            index=item["index"],
            source=tuple(item["source"]),
            target=tuple(item["target"]),
            vector=ComplexityVector(*item["vector"]),
            label=item["label"],
        )
        for item in data["transitions"]
    )
    cloud = ComplexityCloud(
        title=data["title"],
        total_slices=data["cloud"]["total_slices"],
        entries={
            ComplexityVector(*entry["vector"]): entry["multiplicity"]
            for entry in data["cloud"]["entries"]
        },
    )
    return AnalysisReport(
        title=data["title"],
        unit=parse_duration(data["unit"]),
        voice_names=tuple(data["voice_names"]),
        total_slices=data["total_slices"],
        transitions=transitions,
        cloud=cloud,
    )
