import json

import pytest
from fastapi.testclient import TestClient

from voiceleading.client import ClientError, HttpBackend, LocalBackend
from voiceleading.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as test_client:
        yield test_client


MINIMAL_DOCUMENT = {
    "title": "Minimal",
    "voices": [
        {"name": "upper", "events": [["F4", "1:4"], ["G4", "1:4"]]},
        {"name": "lower", "events": [["C4", "1:4"], ["D4", "1:4"]]},
    ],
}

MINIMAL_TEXT = """\
title: Minimal
voice upper: F4/1:4 G4/1:4
voice lower: C4/1:4 D4/1:4
"""


class TestHealth:
    def test_ok(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json()["status"] == "ok"


class TestAnalyze:
    def test_records_from_text(self, client, angelus_text):
        response = client.post("/analyze", json={"text": angelus_text})
        assert response.status_code == 200
        body = response.json()
        assert body["title"] == "Angelus Domini"
        assert body["total_slices"] == 25
        assert len(body["transitions"]) == 24
        assert body["transitions"][0]["vector"] == [2, 0, 0, 0, 0]

    def test_document_and_text_agree(self, client):
        from_text = client.post("/analyze", json={"text": MINIMAL_TEXT}).json()
        from_document = client.post(
            "/analyze", json={"document": MINIMAL_DOCUMENT}
        ).json()
        assert from_text == from_document

    def test_listing(self, client, angelus_text):
        response = client.post("/analyze/listing", json={"text": angelus_text})
        assert response.status_code == 200
        lines = response.text.splitlines()
        assert lines[0] == "Voice Leading: ['F4', 'C4'] ['G4', 'D4']"
        assert lines[1] == "[2, 0, 0, 0] - similar motion up"

    def test_both_forms_rejected(self, client):
        response = client.post(
            "/analyze", json={"text": MINIMAL_TEXT, "document": MINIMAL_DOCUMENT}
        )
        assert response.status_code == 422

    def test_neither_form_rejected(self, client):
        assert client.post("/analyze", json={}).status_code == 422

    def test_invalid_score_is_400_with_detail(self, client):
        response = client.post("/analyze", json={"text": "title: X\nvoice a:\n  H4/1:4\n"})
        assert response.status_code == 400
        assert "line 3" in response.json()["detail"]

    def test_unequal_voices_is_400(self, client):
        text = "title: X\nvoice a: C4/1:1\nvoice b: C4/1:2\n"
        response = client.post("/analyze", json={"text": text})
        assert response.status_code == 400
        assert "unequal" in response.json()["detail"]


class TestCloud:
    def test_default_projections(self, client, angelus_text):
        response = client.post("/cloud", json={"text": angelus_text})
        assert response.status_code == 200
        body = response.json()
        assert body["piece"] == "Angelus Domini"
        assert [p["axes"] for p in body["projections"]] == [
            ["up", "down", "constant"],
            ["up", "down", "crossings"],
        ]

    def test_explicit_axes_with_alias(self, client, canon_text):
        response = client.post(
            "/cloud", json={"text": canon_text, "axes": ["up", "down", "rest"]}
        )
        body = response.json()
        assert body["projections"][0]["axes"] == ["up", "down", "rests"]
        points = {
            tuple(p["coords"]): p["multiplicity"]
            for p in body["projections"][0]["points"]
        }
        assert points[(0, 0, 1)] == 2

    def test_csv_format(self, client, angelus_text):
        response = client.post(
            "/cloud",
            params={"format": "csv"},
            json={"text": angelus_text, "axes": ["up", "down", "constant"]},
        )
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/csv")
        assert response.text.splitlines()[1] == "up,down,constant,multiplicity,radius"

    def test_bad_axis_is_400(self, client, angelus_text):
        response = client.post(
            "/cloud", json={"text": angelus_text, "axes": ["up", "down", "sideways"]}
        )
        assert response.status_code == 400
        assert "unknown axis" in response.json()["detail"]


class TestDtw:
    def test_records(self, client, angelus_text, dicant_text):
        response = client.post(
            "/dtw", json={"scores": [{"text": angelus_text}, {"text": dicant_text}]}
        )
        assert response.status_code == 200
        body = response.json()
        assert body["titles"] == ["Angelus Domini", "Dicant nunc Judei"]
        assert body["raw"][0][0] == 0.0
        assert body["raw"][0][1] == body["raw"][1][0] > 0
        assert body["paths"] is None

    def test_paths_on_request(self, client, angelus_text, dicant_text):
        response = client.post(
            "/dtw",
            json={
                "scores": [{"text": angelus_text}, {"text": dicant_text}],
                "include_paths": True,
            },
        )
        paths = response.json()["paths"]
        assert len(paths) == 1
        assert paths[0]["path"][0] == [1, 1]

    def test_csv_and_normalised(self, client, angelus_text, dicant_text):
        response = client.post(
            "/dtw",
            params={"format": "csv", "normalised": "true"},
            json={"scores": [{"text": angelus_text}, {"text": dicant_text}]},
        )
        lines = response.text.splitlines()
        assert lines[0] == ",Angelus Domini,Dicant nunc Judei"
        assert lines[1].startswith("Angelus Domini,0.00,")

    def test_fewer_than_two_scores_rejected(self, client, angelus_text):
        response = client.post("/dtw", json={"scores": [{"text": angelus_text}]})
        assert response.status_code == 422


class TestFixtures:
    def test_index(self, client):
        response = client.get("/fixtures")
        names = {item["name"] for item in response.json()}
        assert {"angelus_domini", "dicant_nunc_judei", "retrograde_canon"} <= names
        titles = {item["title"] for item in response.json()}
        assert "Retrograde Canon" in titles

    def test_content(self, client, angelus_text):
        response = client.get("/fixtures/angelus_domini")
        assert response.status_code == 200
        assert response.text == angelus_text

    def test_unknown_is_404(self, client):
        assert client.get("/fixtures/nope").status_code == 404


class TestBackends:
    def test_http_backend_matches_local(self, client, angelus_text):
        local = LocalBackend()
        remote = HttpBackend(client=client)
        assert remote.analyze_listing(angelus_text) == local.analyze_listing(
            angelus_text
        )
        assert remote.analyze_records(angelus_text) == local.analyze_records(
            angelus_text
        )
        assert remote.fixtures_list() == local.fixtures_list()
        assert remote.cloud_csv(angelus_text, ["up", "down", "constant"]) == (
            local.cloud_csv(angelus_text, ["up", "down", "constant"])
        )

    def test_http_backend_surfaces_detail(self, client):
        remote = HttpBackend(client=client)
        with pytest.raises(ClientError, match="title"):
            remote.analyze_listing("voice a: C4/1:4\n")

    def test_local_backend_round_trips_json(self, angelus_text):
        report = LocalBackend().analyze_records(angelus_text)
        assert json.loads(json.dumps(report)) == report
