from fractions import Fraction

import pytest

from voiceleading.report import (
    analyze_score,
    render_listing,
    report_from_dict,
    report_to_dict,
)
from voiceleading.score import parse_score

THREE_VOICES = """\
title: Trio
voice a: C4/1:4 D4/1:4
voice b: E4/1:4 F4/1:4
voice c: G4/1:4 G4/1:4
"""


class TestAnalyze:
    def test_angelus_shape(self, angelus_report):
        assert angelus_report.title == "Angelus Domini"
        assert angelus_report.unit == Fraction(1, 1)
        assert angelus_report.total_slices == 25
        assert len(angelus_report.transitions) == 24
        assert angelus_report.voice_names == ("upper", "lower")
        assert not angelus_report.uses_rests

    def test_canon_shape(self, canon_report):
        assert canon_report.unit == Fraction(1, 8)
        assert canon_report.total_slices == 142
        assert len(canon_report.transitions) == 141
        assert canon_report.uses_rests

    def test_transition_records(self, angelus_report):
        first = angelus_report.transitions[0]
        assert first.index == 1
        assert first.source == ("F4", "C4")
        assert first.target == ("G4", "D4")
        assert tuple(first.vector) == (2, 0, 0, 0, 0)
        assert first.label == "similar motion up"

    def test_cloud_totals(self, dicant_report):
        assert dicant_report.cloud.transition_count == 42
        assert dicant_report.cloud.total_slices == 43

    def test_single_slice_piece_rejected(self):
        with pytest.raises(Exception, match="two slices"):
            analyze_score(parse_score("title: X\nvoice a: C4/1:1\n"))


class TestListing:
    def test_angelus_first_lines(self, angelus_report):
        lines = render_listing(angelus_report).splitlines()
        assert lines[0] == "Voice Leading: ['F4', 'C4'] ['G4', 'D4']"
        assert lines[1] == "[2, 0, 0, 0] - similar motion up"

    def test_rest_free_pieces_print_four_components(self, dicant_report):
        listing = render_listing(dicant_report)
        assert "c = " not in listing
        assert "[1, 1, 0, 1] - contrary motion - 1 crossing" in listing

    def test_pieces_with_rests_print_five_components(self, canon_report):
        lines = render_listing(canon_report).splitlines()
        assert lines[1].startswith("c = [")
        assert "rest involved" in render_listing(canon_report)

    def test_three_voice_listing_has_no_labels(self):
        report = analyze_score(parse_score(THREE_VOICES))
        listing = render_listing(report)
        assert listing.splitlines()[1] == "[2, 0, 1, 0]"
        assert " - " not in listing

    def test_listing_is_deterministic(self, canon_report):
        assert render_listing(canon_report) == render_listing(canon_report)


class TestRoundTrip:
    def test_lossless(self, angelus_report, canon_report):
        for report in (angelus_report, canon_report):
            assert report_from_dict(report_to_dict(report)) == report

    def test_dict_is_json_shaped(self, dicant_report):
        import json

        data = report_to_dict(dicant_report)
        assert json.loads(json.dumps(data)) == data
        assert data["unit"] == "1:2"
        assert data["series"] == [list(v) for v in dicant_report.vectors]
