"""Shared builders for tests: compact pitch tuples and random instances."""

from __future__ import annotations

import random
from fractions import Fraction

from voiceleading.leading import VoiceLeading
from voiceleading.pitch import REST, parse_pitch
from voiceleading.score import NoteEvent, Score, Voice


def P(*names: str):
    """Tuple of sounds from space-free note names; ``p`` is the rest."""
    return tuple(parse_pitch(name) for name in names)


def VL(source: str, target: str) -> VoiceLeading:
    """Voice leading from two space-separated note-name strings."""
    return VoiceLeading(P(*source.split()), P(*target.split()))


def random_leading(
    rng: random.Random,
    max_n: int = 8,
    rest_probability: float = 0.2,
    pool: range = range(48, 73),
) -> VoiceLeading:
    """Random leading over a two-octave pool; repeated pitches allowed."""
    n = rng.randint(1, max_n)

    def endpoint():
        return tuple(
            REST if rng.random() < rest_probability else rng.choice(pool)
            for _ in range(n)
        )

    return VoiceLeading(endpoint(), endpoint())


def random_tie_free_leading(
    rng: random.Random,
    max_n: int = 8,
    rest_probability: float = 0.2,
    pool: range = range(40, 81),
) -> VoiceLeading:
    """Random leading whose sounding pitches are distinct within each endpoint."""
    n = rng.randint(1, max_n)
    source_pitches = rng.sample(pool, n)
    target_pitches = rng.sample(pool, n)
    source = tuple(
        REST if rng.random() < rest_probability else source_pitches[i]
        for i in range(n)
    )
    target = tuple(
        REST if rng.random() < rest_probability else target_pitches[i]
        for i in range(n)
    )
    return VoiceLeading(source, target)


_DURATION_POOL = (
    Fraction(1, 1),
    Fraction(3, 4),
    Fraction(1, 2),
    Fraction(3, 8),
    Fraction(1, 4),
    Fraction(1, 8),
)


def random_score(
    rng: random.Random,
    max_voices: int = 4,
    rest_probability: float = 0.0,
    total: Fraction = Fraction(2, 1),
) -> Score:
    """Random score whose voices all sum to ``total`` (so it validates)."""
    voices = []
    for index in range(rng.randint(1, max_voices)):
        events = []
        remaining = total
        while remaining > 0:
            duration = rng.choice([d for d in _DURATION_POOL if d <= remaining])
            sound = (
                REST
                if rng.random() < rest_probability
                else rng.choice(range(55, 80))
            )
            events.append(NoteEvent(sound, duration))
            remaining -= duration
        voices.append(Voice(f"v{index + 1}", tuple(events)))
    return Score(title="random score", voices=tuple(voices))
