"""Voice leadings as generalised partial permutations of ordered multisets.

A voice leading of n voices is a pair of n-tuples of sounds. Its sounds are
gathered into the ordered union multiset (multiplicity = max of the two
sides), every voice is assigned a (row, column) slot pair in that ordering,
and the slots define a sparse square matrix with at most one non-zero entry
per row and per column: +1 for a sounding voice, -1 when either endpoint is
a rest. Direction of motion, constancy and voice crossings can all be read
off that matrix; the five complexity counters summarise them.

Slot assignment rules (they reproduce the matrix uniquely):

* column slots of a repeated target value go to the voices ending on it in
  increasing voice order;
* a constant voice (source == target) takes its column slot as row slot,
  which pins it to the diagonal;
* the remaining source occurrences of a value take the remaining slots in
  increasing voice order.

Note that the voice-order column rule makes two voices converging onto a
unison count as crossed whenever their sources are ordered against their
voice indices; this matches the listing semantics used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Sequence

from .errors import LeadingError
from .pitch import PitchOrRest, is_rest


@dataclass(frozen=True)
class VoiceLeading:
    """A transition of n voices: ``source[i]`` moves to ``target[i]``."""

    source: tuple[PitchOrRest, ...]
    target: tuple[PitchOrRest, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        if len(self.source) != len(self.target):
            raise LeadingError(
                f"source has {len(self.source)} voices, target {len(self.target)}"
            )
        if not self.source:
            raise LeadingError("a voice leading needs at least one voice")

    @property
    def n(self) -> int:
        return len(self.source)

    def reversed(self) -> "VoiceLeading":
        return VoiceLeading(self.target, self.source)

    def voice(self, i: int) -> tuple[PitchOrRest, PitchOrRest]:
        return self.source[i], self.target[i]


@dataclass(frozen=True)
class OrderedUnionMultiset:
    """Sorted union of source and target sounds with max multiplicities."""

    elements: tuple[PitchOrRest, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def slot_positions(self) -> dict[PitchOrRest, list[int]]:
        """Positions of every distinct value, in ascending slot order."""
        positions: dict[PitchOrRest, list[int]] = {}
        for index, value in enumerate(self.elements):
            positions.setdefault(value, []).append(index)
        return positions


class ComplexityVector(NamedTuple):
    """Per-transition counters: voices up/down/constant, crossings, rests."""

    up: int
    down: int
    constant: int
    crossings: int
    rests: int

    def components(self, include_rests: bool = True) -> tuple[int, ...]:
        return tuple(self) if include_rests else tuple(self)[:4]


class MotionClass(Enum):
    SIMILAR_UP = "similar motion up"
    SIMILAR_DOWN = "similar motion down"
    PARALLEL = "parallel motion"
    CONTRARY = "contrary motion"
    OBLIQUE = "oblique motion"
    STATIC = "static"
    REST_INVOLVED = "rest involved"
    MIXED = "mixed"


@dataclass(frozen=True)
class LeadingMatrix:
    """Sparse m x m matrix over {0, +1, -1} describing one voice leading.

    ``voice_entries[i]`` is the (row, column, sign) triple of voice i;
    ``entries`` holds the same triples sorted by position. Indices are
    zero-based.
    """

    size: int
    entries: tuple[tuple[int, int, int], ...]
    voice_entries: tuple[tuple[int, int, int], ...]

    @property
    def n(self) -> int:
        return len(self.voice_entries)

    def transpose(self) -> "LeadingMatrix":
        swapped = tuple((c, r, s) for r, c, s in self.voice_entries)
        return LeadingMatrix(self.size, tuple(sorted(swapped)), swapped)

    def to_dense(self) -> list[list[int]]:
        grid = [[0] * self.size for _ in range(self.size)]
        for row, col, sign in self.entries:
            grid[row][col] = sign
        return grid

    def render(self) -> str:
        """Plain-text dense grid, one row per line."""
        width = 2 if any(s < 0 for _, _, s in self.entries) else 1
        return "\n".join(
            " ".join(f"{value:>{width}}" for value in row) for row in self.to_dense()
        )


def union_multiset(leading: VoiceLeading) -> OrderedUnionMultiset:
    """Ordered union multiset of the two endpoint multisets.

    Every value appears max(source count, target count) times; rests sort
    last because the rest symbol is greater than every pitch.
    """
    counts: dict[PitchOrRest, int] = {}
    for endpoint in (leading.source, leading.target):
        local: dict[PitchOrRest, int] = {}
        for value in endpoint:
            local[value] = local.get(value, 0) + 1
        for value, count in local.items():
            counts[value] = max(counts.get(value, 0), count)
    elements: list[PitchOrRest] = []
    for value in sorted(counts):
        elements.extend([value] * counts[value])
    return OrderedUnionMultiset(tuple(elements))


def assign_slots(
    leading: VoiceLeading, union: OrderedUnionMultiset
) -> tuple[tuple[int, int], ...]:
    """Per-voice (row, column) slot pairs in the ordered union multiset."""
    slots = union.slot_positions()

    columns: list[int] = []
    cursor = {value: 0 for value in slots}
    for value in leading.target:
        columns.append(slots[value][cursor[value]])
        cursor[value] += 1

    rows: list[Optional[int]] = [None] * leading.n
    used: dict[PitchOrRest, set[int]] = {}
    for i, (src, tgt) in enumerate(zip(leading.source, leading.target)):
        if src == tgt:
            rows[i] = columns[i]
            used.setdefault(src, set()).add(columns[i])
    for i, (src, tgt) in enumerate(zip(leading.source, leading.target)):
        if src == tgt:
            continue
        taken = used.setdefault(src, set())
        position = next(p for p in slots[src] if p not in taken)
        taken.add(position)
        rows[i] = position
    return tuple(zip(rows, columns))  # type: ignore[arg-type]


def leading_matrix(leading: VoiceLeading) -> LeadingMatrix:
    """The matrix associated with a voice leading.

    Entry signs: +1 when both endpoints are pitches, -1 when either endpoint
    is a rest (including rest-to-rest voices).
    """
    union = union_multiset(leading)
    pairs = assign_slots(leading, union)
    voice_entries = []
    for (src, tgt), (row, col) in zip(zip(leading.source, leading.target), pairs):
        sign = -1 if (is_rest(src) or is_rest(tgt)) else 1
        voice_entries.append((row, col, sign))
    return LeadingMatrix(
        size=len(union),
        entries=tuple(sorted(voice_entries)),
        voice_entries=tuple(voice_entries),
    )


def apply(matrix: LeadingMatrix, values: Sequence) -> list:
    """Act on a vector of slot values; entry (r, c) moves ``values[c]`` to r.

    Applied to the ordered union multiset, the non-empty results form the
    target multiset; applying the transpose recovers the source multiset.
    """
    if len(values) != matrix.size:
        raise LeadingError(
            f"vector of length {len(values)} does not fit a "
            f"{matrix.size}x{matrix.size} matrix"
        )
    out: list = [None] * matrix.size
    for row, col, _sign in matrix.entries:
        out[row] = values[col]
    return out


def count_crossings(matrix: LeadingMatrix) -> tuple[int, tuple[int, ...]]:
    """Crossing pairs in a leading matrix.

    For each +1 entry at (i, j), the per-voice count is the number of +1
    entries in the regions {row > i, col < j} and {row < i, col > j};
    rest entries (-1) never participate. The scalar total counts crossing
    pairs, i.e. half the per-voice sum.
    """
    per_voice = []
    for row, col, sign in matrix.voice_entries:
        if sign < 0:
            per_voice.append(0)
            continue
        count = sum(
            1
            for r, c, s in matrix.voice_entries
            if s > 0 and ((r > row and c < col) or (r < row and c > col))
        )
        per_voice.append(count)
    paired = sum(per_voice)
    if paired % 2:
        raise LeadingError("crossing counts must pair up; matrix is inconsistent")
    return paired // 2, tuple(per_voice)


def complexity(leading: VoiceLeading) -> ComplexityVector:
    """The five-component complexity vector of a voice leading.

    A voice with a rest at either endpoint counts once in the rest component
    and nowhere else; the crossing component counts crossing pairs.
    """
    up = down = constant = rests = 0
    for src, tgt in zip(leading.source, leading.target):
        if is_rest(src) or is_rest(tgt):
            rests += 1
        elif src < tgt:
            up += 1
        elif src > tgt:
            down += 1
        else:
            constant += 1
    crossings, _ = count_crossings(leading_matrix(leading))
    return ComplexityVector(up, down, constant, crossings, rests)


def classify_motion(leading: VoiceLeading) -> MotionClass:
    """Classical two-voice motion class of a leading.

    Raises for n != 2 (report the complexity vector instead for larger
    ensembles). Parallel similar motion still classifies as similar; use
    :func:`is_parallel` to detect the interval-preserving refinement.
    """
    if leading.n != 2:
        raise LeadingError("motion classes are defined for exactly two voices")
    (x1, y1), (x2, y2) = leading.voice(0), leading.voice(1)
    if any(is_rest(v) for v in (x1, y1, x2, y2)):
        return MotionClass.REST_INVOLVED
    d1, d2 = y1 - x1, y2 - x2
    if d1 == 0 and d2 == 0:
        return MotionClass.STATIC
    if d1 == 0 or d2 == 0:
        return MotionClass.OBLIQUE
    if (d1 > 0) == (d2 > 0):
        return MotionClass.SIMILAR_UP if d1 > 0 else MotionClass.SIMILAR_DOWN
    return MotionClass.CONTRARY


def is_parallel(leading: VoiceLeading) -> bool:
    """True when both voices move by the same non-zero interval."""
    if leading.n != 2:
        raise LeadingError("parallel motion is defined for exactly two voices")
    (x1, y1), (x2, y2) = leading.voice(0), leading.voice(1)
    if any(is_rest(v) for v in (x1, y1, x2, y2)):
        return False
    return y1 - x1 == y2 - x2 != 0


def motion_label(vector: ComplexityVector, n: int) -> Optional[str]:
    """Listing label for a two-voice transition; None for other sizes."""
    if n != 2:
        return None
    if vector.rests:
        label = MotionClass.REST_INVOLVED.value
    elif vector.up == 2:
        label = MotionClass.SIMILAR_UP.value
    elif vector.down == 2:
        label = MotionClass.SIMILAR_DOWN.value
    elif vector.up == 1 and vector.down == 1:
        label = MotionClass.CONTRARY.value
    elif vector.constant == 2:
        label = MotionClass.STATIC.value
    else:
        label = MotionClass.OBLIQUE.value
    if vector.crossings:
        plural = "s" if vector.crossings > 1 else ""
        label += f" - {vector.crossings} crossing{plural}"
    return label
