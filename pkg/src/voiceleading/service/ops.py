"""Service operations shared by the HTTP endpoints and the local CLI backend."""

from __future__ import annotations

from .. import fixtures
from ..cloud import (
    default_projections,
    project,
    projection_csv,
    projection_records,
)
from ..dtw import distance_matrix, dtw
from ..report import analyze_score, render_listing, report_to_dict
from ..score import parse_score
from .schemas import (
    AnalysisReportModel,
    CloudRequest,
    CloudResponse,
    DtwRequest,
    DtwResponse,
    FixtureInfo,
    PairPathModel,
    ProjectionModel,
    ScorePayload,
)


def analyze_records(payload: ScorePayload) -> AnalysisReportModel:
    report = analyze_score(payload.to_score())
    return AnalysisReportModel(**report_to_dict(report))


def analyze_listing(payload: ScorePayload) -> str:
    return render_listing(analyze_score(payload.to_score()))


def _projections(request: CloudRequest):
    report = analyze_score(request.to_score())
    if request.axes is None:
        return report, default_projections(report.cloud)
    return report, [project(report.cloud, request.axes)]


def cloud_response(request: CloudRequest) -> CloudResponse:
    report, projections = _projections(request)
    return CloudResponse(
        piece=report.title,
        projections=[
            ProjectionModel(**projection_records(p)) for p in projections
        ],
    )


def cloud_csv(request: CloudRequest) -> str:
    _, projections = _projections(request)
    blocks = []
    for projection in projections:
        header = "# axes: " + ",".join(projection.axes)
        blocks.append(header + "\n" + projection_csv(projection))
    return "\n".join(blocks)


def _corpus(request: DtwRequest):
    reports = [analyze_score(p.to_score()) for p in request.scores]
    return reports, [report.feature_series() for report in reports]


def dtw_response(request: DtwRequest) -> DtwResponse:
    _, corpus = _corpus(request)
    distances = distance_matrix(corpus)
    paths = None
    if request.include_paths:
        paths = [
            PairPathModel(
                first=corpus[i].title,
                second=corpus[j].title,
                path=list(dtw(corpus[i], corpus[j]).path),
            )
            for i in range(len(corpus))
            for j in range(i + 1, len(corpus))
        ]
    return DtwResponse(
        titles=list(distances.titles),
        raw=[list(row) for row in distances.raw],
        normalised=[list(row) for row in distances.normalised],
        paths=paths,
    )


def dtw_csv(request: DtwRequest, normalised: bool = False) -> str:
    _, corpus = _corpus(request)
    return distance_matrix(corpus).to_csv(normalised=normalised)


def fixture_list() -> list[FixtureInfo]:
    infos = []
    for name in fixtures.list_fixtures():
        score = parse_score(fixtures.load_fixture(name))
        infos.append(FixtureInfo(name=name, title=score.title))
    return infos


def fixture_text(name: str) -> str:
    return fixtures.load_fixture(name)
