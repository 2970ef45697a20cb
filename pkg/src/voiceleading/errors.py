"""Exception hierarchy shared by the analysis modules."""


class VoiceLeadingError(ValueError):
    """Base class for all domain errors raised by this package."""


class PitchError(VoiceLeadingError):
    """Bad pitch token, frequency or range query."""


class ScoreError(VoiceLeadingError):
    """Base class for score ingestion errors."""


class ParseError(ScoreError):
    """Malformed score text or document."""


class ValidationError(ScoreError):
    """Structurally valid input that violates a score invariant."""


class LeadingError(VoiceLeadingError):
    """Invalid voice leading or matrix operation."""


class CloudError(VoiceLeadingError):
    """Invalid cloud construction or projection request."""


class DtwError(VoiceLeadingError):
    """Invalid series, cost function or distance-matrix request."""


class FixtureError(VoiceLeadingError):
    """Unknown bundled fixture."""
