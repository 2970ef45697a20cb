"""Score ingestion, rhythm homogenisation and transition extraction.

Two equivalent input forms parse to identical scores:

* the native line format::

      title: <string>
      voice <name>:
        <pitch-or-rest>/<num>:<den> ...

  where ``num:den`` is an exact fraction of a whole note and lines starting
  with ``#`` are comments;

* a JSON document ``{"title": ..., "voices": [{"name": ..., "events":
  [["F4", "1:4"], ...]}, ...]}``.

Durations are exact rationals throughout; homogenisation rewrites every
event of duration k*u as k grid slices of the minimal unit u, the rational
GCD of all event durations.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Mapping, Sequence

from .errors import ParseError, ScoreError, ValidationError, VoiceLeadingError
from .leading import VoiceLeading
from .pitch import PitchOrRest, parse_pitch

_DURATION_RE = re.compile(r"(\d+):(\d+)\Z")
_VOICE_RE = re.compile(r"voice\s+([^:]+):(.*)\Z")


def parse_duration(token: str) -> Fraction:
    """Parse a ``num:den`` fraction of a whole note."""
    match = _DURATION_RE.fullmatch(token.strip())
    if match is None:
        raise ParseError(f"not a num:den duration: {token!r}")
    num, den = int(match.group(1)), int(match.group(2))
    if num == 0 or den == 0:
        raise ParseError(f"duration must be positive: {token!r}")
    return Fraction(num, den)


def format_duration(duration: Fraction) -> str:
    return f"{duration.numerator}:{duration.denominator}"


@dataclass(frozen=True)
class NoteEvent:
    sound: PitchOrRest
    duration: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.duration, Fraction):
            object.__setattr__(self, "duration", Fraction(self.duration))
        if self.duration <= 0:
            raise ValidationError(f"event duration must be positive: {self.duration}")


@dataclass(frozen=True)
class Voice:
    name: str
    events: tuple[NoteEvent, ...]

    @property
    def total_duration(self) -> Fraction:
        return sum((event.duration for event in self.events), Fraction(0))


@dataclass(frozen=True)
class Score:
    """An ordered list of voices; index 0 is the topmost notated voice."""

    title: str
    voices: tuple[Voice, ...]

    def __post_init__(self) -> None:
        if not self.voices:
            raise ValidationError("a score needs at least one voice")
        for voice in self.voices:
            if not voice.events:
                raise ValidationError(f"voice {voice.name!r} has no events")
        totals = {voice.total_duration for voice in self.voices}
        if len(totals) > 1:
            listing = ", ".join(
                f"{voice.name or index}={format_duration(voice.total_duration)}"
                for index, voice in enumerate(self.voices, start=1)
            )
            raise ValidationError(f"voices have unequal total durations: {listing}")

    @property
    def n_voices(self) -> int:
        return len(self.voices)

    @property
    def total_duration(self) -> Fraction:
        return self.voices[0].total_duration


@dataclass(frozen=True)
class HomogenisedScore:
    """Rectangular grid of unit-duration slices, one row per voice."""

    title: str
    unit: Fraction
    voice_names: tuple[str, ...]
    grid: tuple[tuple[PitchOrRest, ...], ...]

    @property
    def num_voices(self) -> int:
        return len(self.grid)

    @property
    def num_slices(self) -> int:
        return len(self.grid[0])

    def columns(self) -> list[tuple[PitchOrRest, ...]]:
        return list(zip(*self.grid))


def _parse_event(token: str, lineno: int) -> NoteEvent:
    head, sep, tail = token.partition("/")
    if not sep:
        raise ParseError(f"line {lineno}: event {token!r} lacks a '/duration' part")
    try:
        sound = parse_pitch(head)
        duration = parse_duration(tail)
    except VoiceLeadingError as exc:
        raise ParseError(f"line {lineno}: {exc}") from exc
    return NoteEvent(sound, duration)


def _parse_native(text: str) -> Score:
    title: str | None = None
    voices: list[tuple[str, list[NoteEvent]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if title is None:
            if not line.startswith("title:"):
                raise ParseError(f"line {lineno}: expected 'title:' before content")
            title = line[len("title:"):].strip()
            continue
        header = _VOICE_RE.fullmatch(line)
        if header is not None:
            voices.append((header.group(1).strip(), []))
            trailing = header.group(2).strip()
            if trailing:
                for token in trailing.split():
                    voices[-1][1].append(_parse_event(token, lineno))
            continue
        if not voices:
            raise ParseError(f"line {lineno}: note events before any voice header")
        for token in line.split():
            voices[-1][1].append(_parse_event(token, lineno))
    if title is None:
        raise ParseError("empty score: no title line found")
    return Score(
        title=title,
        voices=tuple(Voice(name, tuple(events)) for name, events in voices),
    )


def parse_score_document(document: Mapping) -> Score:
    """Parse the structured-object form of a score."""
    if not isinstance(document, Mapping):
        raise ParseError("score document must be an object")
    title = document.get("title")
    if not isinstance(title, str):
        raise ParseError("score document needs a string 'title'")
    raw_voices = document.get("voices")
    if not isinstance(raw_voices, Sequence) or isinstance(raw_voices, (str, bytes)):
        raise ParseError("score document needs a 'voices' array")
    voices = []
    for index, entry in enumerate(raw_voices, start=1):
        if not isinstance(entry, Mapping):
            raise ParseError(f"voice {index}: expected an object")
        name = entry.get("name", "")
        if not isinstance(name, str):
            raise ParseError(f"voice {index}: 'name' must be a string")
        raw_events = entry.get("events")
        if not isinstance(raw_events, Sequence) or isinstance(raw_events, (str, bytes)):
            raise ParseError(f"voice {index}: 'events' must be an array")
        events = []
        for position, item in enumerate(raw_events, start=1):
            if (
                not isinstance(item, Sequence)
                or isinstance(item, (str, bytes))
                or len(item) != 2
                or not all(isinstance(part, str) for part in item)
            ):
                raise ParseError(
                    f"voice {index}, event {position}: expected [sound, 'num:den']"
                )
            try:
                sound = parse_pitch(item[0])
                duration = parse_duration(item[1])
            except VoiceLeadingError as exc:
                raise ParseError(f"voice {index}, event {position}: {exc}") from exc
            events.append(NoteEvent(sound, duration))
        voices.append(Voice(name, tuple(events)))
    return Score(title=title, voices=tuple(voices))


def parse_score(text: str) -> Score:
    """Parse either input form; JSON is detected by its leading brace."""
    if text.lstrip().startswith("{"):
        try:
            document = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON score document: {exc}") from exc
        return parse_score_document(document)
    return _parse_native(text)


def _fraction_gcd(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(
        math.gcd(a.numerator, b.numerator),
        math.lcm(a.denominator, b.denominator),
    )


def minimal_unit(score: Score) -> Fraction:
    """Rational GCD of all event durations across all voices."""
    durations = [event.duration for voice in score.voices for event in voice.events]
    return reduce(_fraction_gcd, durations)


def homogenise(score: Score) -> HomogenisedScore:
    """Rewrite every event of duration k*u as k slices of the minimal unit u."""
    unit = minimal_unit(score)
    grid = []
    for voice in score.voices:
        row: list[PitchOrRest] = []
        for event in voice.events:
            factor = event.duration / unit
            if factor.denominator != 1:
                raise ScoreError(
                    f"duration {format_duration(event.duration)} is not a multiple "
                    f"of the unit {format_duration(unit)}"
                )
            row.extend([event.sound] * factor.numerator)
        grid.append(tuple(row))
    widths = {len(row) for row in grid}
    if len(widths) > 1:
        raise ScoreError(f"homogenised grid is not rectangular: widths {sorted(widths)}")
    return HomogenisedScore(
        title=score.title,
        unit=unit,
        voice_names=tuple(voice.name for voice in score.voices),
        grid=tuple(grid),
    )


def refine(homogenised: HomogenisedScore, factor: int = 2) -> HomogenisedScore:
    """Subdivide every slice into ``factor`` copies (unit becomes u/factor)."""
    if factor < 1:
        raise ScoreError(f"refinement factor must be >= 1, got {factor}")
    return HomogenisedScore(
        title=homogenised.title,
        unit=homogenised.unit / factor,
        voice_names=homogenised.voice_names,
        grid=tuple(
            tuple(sound for sound in row for _ in range(factor))
            for row in homogenised.grid
        ),
    )


def leading_pairs(homogenised: HomogenisedScore) -> list[VoiceLeading]:
    """Consecutive column pairs of the grid, as voice leadings."""
    columns = homogenised.columns()
    if len(columns) < 2:
        raise ScoreError("need at least two slices to form a voice leading")
    return [
        VoiceLeading(columns[index], columns[index + 1])
        for index in range(len(columns) - 1)
    ]
