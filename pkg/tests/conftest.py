from __future__ import annotations

import pytest

from voiceleading.fixtures import load_fixture
from voiceleading.report import analyze_score
from voiceleading.score import parse_score


@pytest.fixture(scope="session")
def angelus_text() -> str:
    return load_fixture("angelus_domini")


@pytest.fixture(scope="session")
def dicant_text() -> str:
    return load_fixture("dicant_nunc_judei")


@pytest.fixture(scope="session")
def canon_text() -> str:
    return load_fixture("retrograde_canon")


@pytest.fixture(scope="session")
def angelus_report(angelus_text):
    return analyze_score(parse_score(angelus_text))


@pytest.fixture(scope="session")
def dicant_report(dicant_text):
    return analyze_score(parse_score(dicant_text))


@pytest.fixture(scope="session")
def canon_report(canon_text):
    return analyze_score(parse_score(canon_text))
