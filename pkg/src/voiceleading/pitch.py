"""Pitches as integer semitone indices, plus the rest symbol.

The 12-TET convention used throughout: A4 = 440 Hz = 69, middle C (C4) = 60.
Rests sort strictly above every pitch, which keeps them at the end of every
ordered union multiset.
"""

from __future__ import annotations

import math
import re
from typing import NamedTuple, Union

from .errors import PitchError

REST_TOKEN = "p"

MIN_PITCH = 0
MAX_PITCH = 127

_LETTER_OFFSETS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}

# Canonical rendering always spells accidentals with sharps.
_SHARP_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")

_PITCH_RE = re.compile(r"([A-G])([#b]*)(-?\d+)\Z")


class Rest:
    """The rest symbol: equal only to itself, greater than every pitch."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "REST"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Rest)

    def __ne__(self, other: object) -> bool:
        return not isinstance(other, Rest)

    def __hash__(self) -> int:
        return hash("voiceleading.pitch.REST")

    def __lt__(self, other: object):
        if isinstance(other, (Rest, int)):
            return False
        return NotImplemented

    def __le__(self, other: object):
        if isinstance(other, Rest):
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other: object):
        if isinstance(other, Rest):
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other: object):
        if isinstance(other, (Rest, int)):
            return True
        return NotImplemented


REST = Rest()

PitchOrRest = Union[int, Rest]


def is_rest(sound: PitchOrRest) -> bool:
    return isinstance(sound, Rest)


def freq_to_pitch(freq: float) -> float:
    """Map a fundamental frequency in Hz to its (unrounded) pitch value."""
    if freq <= 0:
        raise PitchError(f"frequency must be positive, got {freq}")
    return 69.0 + 12.0 * math.log2(freq / 440.0)


def pitch_to_freq(value: float) -> float:
    """Inverse of :func:`freq_to_pitch`."""
    return 440.0 * 2.0 ** ((value - 69.0) / 12.0)


def parse_pitch(text: str) -> PitchOrRest:
    """Parse scientific pitch notation (``C4``, ``F#3``, ``Bb5``) or ``p``.

    Enharmonic spellings collapse to the same integer; the playable range
    [0, 127] is enforced here and only here.
    """
    token = text.strip()
    if token == REST_TOKEN:
        return REST
    match = _PITCH_RE.fullmatch(token)
    if match is None:
        raise PitchError(f"not a pitch or rest token: {text!r}")
    letter, accidentals, octave = match.groups()
    value = (
        _LETTER_OFFSETS[letter]
        + accidentals.count("#")
        - accidentals.count("b")
        + 12 * (int(octave) + 1)
    )
    if not MIN_PITCH <= value <= MAX_PITCH:
        raise PitchError(
            f"pitch {text!r} = {value} outside the supported range "
            f"[{MIN_PITCH}, {MAX_PITCH}]"
        )
    return value


def render_pitch(sound: PitchOrRest) -> str:
    """Canonical text form: sharps only, rests as ``p``."""
    if is_rest(sound):
        return REST_TOKEN
    octave, step = divmod(sound, 12)
    return f"{_SHARP_NAMES[step]}{octave - 1}"


class VoiceRange(NamedTuple):
    label: str
    low: int
    high: int


VOICE_RANGES = (
    VoiceRange("Soprano", 60, 91),  # C4 .. G6
    VoiceRange("Alto", 55, 72),     # G3 .. C5
    VoiceRange("Tenor", 48, 67),    # C3 .. G4
    VoiceRange("Bass", 40, 60),     # E2 .. C4
)

UNCLASSIFIED = "Unclassified"


def classify_range(pitch: PitchOrRest) -> frozenset[str]:
    """Labels of every classical voice range containing the pitch.

    Ranges overlap, so the result is a set; a pitch outside all four ranges
    classifies as ``Unclassified``. Rests have no range.
    """
    if is_rest(pitch):
        raise PitchError("rests have no voice range")
    labels = frozenset(r.label for r in VOICE_RANGES if r.low <= pitch <= r.high)
    return labels if labels else frozenset({UNCLASSIFIED})
