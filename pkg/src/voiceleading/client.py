"""Backends the CLI talks through: in-process service calls or HTTP.

Both backends speak the service's request/response schema, so the CLI
behaves identically whether it runs against a remote server or offline.
"""

from __future__ import annotations

from typing import Protocol

import httpx

from .errors import VoiceLeadingError
from .service import ops
from .service.schemas import CloudRequest, DtwRequest, ScorePayload


class ClientError(RuntimeError):
    """Request rejected by the service or transport failure."""


class Backend(Protocol):
    def analyze_records(self, text: str) -> dict: ...
    def analyze_listing(self, text: str) -> str: ...
    def cloud_records(self, text: str, axes: list[str] | None) -> dict: ...
    def cloud_csv(self, text: str, axes: list[str] | None) -> str: ...
    def dtw_records(self, texts: list[str], include_paths: bool) -> dict: ...
    def dtw_csv(self, texts: list[str], normalised: bool) -> str: ...
    def fixtures_list(self) -> list[dict]: ...
    def fixture_text(self, name: str) -> str: ...


class LocalBackend:
    """Runs the service operations in-process; no server required."""

    def analyze_records(self, text: str) -> dict:
        return _wrap(lambda: ops.analyze_records(ScorePayload(text=text)).model_dump())

    def analyze_listing(self, text: str) -> str:
        return _wrap(lambda: ops.analyze_listing(ScorePayload(text=text)))

    def cloud_records(self, text: str, axes: list[str] | None) -> dict:
        return _wrap(
            lambda: ops.cloud_response(CloudRequest(text=text, axes=axes)).model_dump()
        )

    def cloud_csv(self, text: str, axes: list[str] | None) -> str:
        return _wrap(lambda: ops.cloud_csv(CloudRequest(text=text, axes=axes)))

    def dtw_records(self, texts: list[str], include_paths: bool = False) -> dict:
        request = DtwRequest(
            scores=[ScorePayload(text=t) for t in texts], include_paths=include_paths
        )
        return _wrap(lambda: ops.dtw_response(request).model_dump())

    def dtw_csv(self, texts: list[str], normalised: bool = False) -> str:
        request = DtwRequest(scores=[ScorePayload(text=t) for t in texts])
        return _wrap(lambda: ops.dtw_csv(request, normalised=normalised))

    def fixtures_list(self) -> list[dict]:
        return _wrap(lambda: [info.model_dump() for info in ops.fixture_list()])

    def fixture_text(self, name: str) -> str:
        return _wrap(lambda: ops.fixture_text(name))


def _wrap(call):
    try:
        return call()
    except VoiceLeadingError as exc:
        raise ClientError(str(exc)) from exc


class HttpBackend:
    """Thin client for a running service; pass a base URL or an httpx client."""

    def __init__(self, base_url: str = "", client: httpx.Client | None = None):
        self._client = client or httpx.Client(base_url=base_url, timeout=60.0)

    def _request(self, method: str, path: str, **kwargs) -> httpx.Response:
        try:
            response = self._client.request(method, path, **kwargs)
        except httpx.HTTPError as exc:
            raise ClientError(f"request to {path} failed: {exc}") from exc
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", response.text)
            except ValueError:
                detail = response.text
            raise ClientError(f"{path}: {detail}")
        return response

    def analyze_records(self, text: str) -> dict:
        return self._request("POST", "/analyze", json={"text": text}).json()

    def analyze_listing(self, text: str) -> str:
        return self._request("POST", "/analyze/listing", json={"text": text}).text

    def cloud_records(self, text: str, axes: list[str] | None) -> dict:
        return self._request(
            "POST", "/cloud", json={"text": text, "axes": axes}
        ).json()

    def cloud_csv(self, text: str, axes: list[str] | None) -> str:
        return self._request(
            "POST",
            "/cloud",
            params={"format": "csv"},
            json={"text": text, "axes": axes},
        ).text

    def dtw_records(self, texts: list[str], include_paths: bool = False) -> dict:
        return self._request(
            "POST",
            "/dtw",
            json={
                "scores": [{"text": t} for t in texts],
                "include_paths": include_paths,
            },
        ).json()

    def dtw_csv(self, texts: list[str], normalised: bool = False) -> str:
        return self._request(
            "POST",
            "/dtw",
            params={"format": "csv", "normalised": normalised},
            json={"scores": [{"text": t} for t in texts]},
        ).text

    def fixtures_list(self) -> list[dict]:
        return self._request("GET", "/fixtures").json()

    def fixture_text(self, name: str) -> str:
        return self._request("GET", f"/fixtures/{name}").text
