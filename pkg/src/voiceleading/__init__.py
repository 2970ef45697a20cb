"""Voice-leading complexity analysis.

Scores parse into per-voice event lists, homogenise onto a minimal-unit
grid, and every consecutive pair of grid columns becomes a voice leading
with an associated sparse matrix and complexity vector. Whole pieces
aggregate into complexity clouds and compare as time series via dynamic
time warping.
"""

from .cloud import (
    AXES,
    CloudPoint,
    CloudProjection,
    ComplexityCloud,
    build_cloud,
    default_projections,
    project,
    projection_csv,
    projection_records,
)
from .dtw import (
    CorpusDistances,
    DtwResult,
    FeatureSeries,
    distance_matrix,
    dtw,
    euclidean_cost,
    is_legal_path,
)
from .errors import VoiceLeadingError
from .leading import (
    ComplexityVector,
    LeadingMatrix,
    MotionClass,
    OrderedUnionMultiset,
    VoiceLeading,
    apply,
    assign_slots,
    classify_motion,
    complexity,
    count_crossings,
    is_parallel,
    leading_matrix,
    motion_label,
    union_multiset,
)
from .pitch import (
    REST,
    PitchOrRest,
    VoiceRange,
    classify_range,
    freq_to_pitch,
    is_rest,
    parse_pitch,
    render_pitch,
)
from .report import AnalysisReport, analyze_score, render_listing
from .score import (
    HomogenisedScore,
    NoteEvent,
    Score,
    Voice,
    homogenise,
    leading_pairs,
    parse_score,
    refine,
)

__version__ = "0.1.0"

__all__ = [
    "AXES",
    "AnalysisReport",
    "CloudPoint",
    "CloudProjection",
    "ComplexityCloud",
    "ComplexityVector",
    "CorpusDistances",
    "DtwResult",
    "FeatureSeries",
    "HomogenisedScore",
    "LeadingMatrix",
    "MotionClass",
    "NoteEvent",
    "OrderedUnionMultiset",
    "PitchOrRest",
    "REST",
    "Score",
    "Voice",
    "VoiceLeading",
    "VoiceLeadingError",
    "VoiceRange",
    "analyze_score",
    "apply",
    "assign_slots",
    "build_cloud",
    "classify_motion",
    "classify_range",
    "complexity",
    "count_crossings",
    "default_projections",
    "distance_matrix",
    "dtw",
    "euclidean_cost",
    "freq_to_pitch",
    "homogenise",
    "is_legal_path",
    "is_parallel",
    "is_rest",
    "leading_matrix",
    "leading_pairs",
    "motion_label",
    "parse_pitch",
    "parse_score",
    "project",
    "projection_csv",
    "projection_records",
    "refine",
    "render_listing",
    "render_pitch",
    "union_multiset",
    "__version__",
]
