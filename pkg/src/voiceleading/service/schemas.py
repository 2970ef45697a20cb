"""Request/response models for the analysis service."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

from ..score import Score, parse_score, parse_score_document


class VoiceDocument(BaseModel):
    name: str = ""
    events: list[tuple[str, str]]


class ScoreDocument(BaseModel):
    title: str
    voices: list[VoiceDocument]


class ScorePayload(BaseModel):
    """A score, as native/JSON text or as a structured document."""

    text: str | None = None
    document: ScoreDocument | None = None

    @model_validator(mode="after")
    def _exactly_one_form(self) -> "ScorePayload":
        if (self.text is None) == (self.document is None):
            raise ValueError("provide exactly one of 'text' or 'document'")
        return self

    def to_score(self) -> Score:
        if self.text is not None:
            return parse_score(self.text)
        assert self.document is not None
        return parse_score_document(self.document.model_dump())


class AnalyzeRequest(ScorePayload):
    pass


class CloudRequest(ScorePayload):
    axes: list[str] | None = Field(
        default=None,
        description="Three component axes; omit for the two default views",
    )


class DtwRequest(BaseModel):
    scores: list[ScorePayload] = Field(min_length=2)
    include_paths: bool = False


class TransitionModel(BaseModel):
    index: int
    source: list[str]
    target: list[str]
    vector: list[int]
    label: str | None


class CloudEntryModel(BaseModel):
    vector: list[int]
    multiplicity: int


class CloudModel(BaseModel):
    total_slices: int
    entries: list[CloudEntryModel]


class AnalysisReportModel(BaseModel):
    title: str
    unit: str
    voice_names: list[str]
    total_slices: int
    transitions: list[TransitionModel]
    cloud: CloudModel
    series: list[list[int]]


class ProjectionPointModel(BaseModel):
    coords: list[int]
    multiplicity: int
    radius: float


class ProjectionModel(BaseModel):
    piece: str
    axes: list[str]
    points: list[ProjectionPointModel]


class CloudResponse(BaseModel):
    piece: str
    projections: list[ProjectionModel]


class PairPathModel(BaseModel):
    first: str
    second: str
    path: list[tuple[int, int]]


class DtwResponse(BaseModel):
    titles: list[str]
    raw: list[list[float]]
    normalised: list[list[float]]
    paths: list[PairPathModel] | None = None


class FixtureInfo(BaseModel):
    name: str
    title: str
