import pytest

from voiceleading.cloud import (
    build_cloud,
    default_projections,
    normalise_axes,
    project,
    projection_csv,
    projection_records,
)
from voiceleading.errors import CloudError
from voiceleading.leading import ComplexityVector


def vec(*components) -> ComplexityVector:
    return ComplexityVector(*components)


class TestBuildCloud:
    def test_counts_multiplicities(self):
        cloud = build_cloud(
            [vec(1, 1, 0, 0, 0), vec(1, 1, 0, 0, 0), vec(2, 0, 0, 0, 0)],
            total_slices=4,
            title="x",
        )
        assert cloud.multiplicity((1, 1, 0, 0, 0)) == 2
        assert cloud.multiplicity((2, 0, 0, 0, 0)) == 1
        assert cloud.multiplicity((0, 0, 2, 0, 0)) == 0
        assert cloud.transition_count == 3

    def test_length_mismatch(self):
        with pytest.raises(CloudError, match="expected 3 vectors"):
            build_cloud([vec(1, 1, 0, 0, 0)], total_slices=4)

    def test_bad_total(self):
        with pytest.raises(CloudError):
            build_cloud([], total_slices=0)


class TestAxes:
    def test_aliases(self):
        assert normalise_axes(["up", "down", "rest"]) == ("up", "down", "rests")
        assert normalise_axes(["Up", "crossing", "const"]) == (
            "up", "crossings", "constant",
        )

    def test_unknown_axis(self):
        with pytest.raises(CloudError, match="unknown axis"):
            normalise_axes(["up", "down", "sideways"])

    def test_wrong_arity(self):
        with pytest.raises(CloudError, match="exactly 3"):
            normalise_axes(["up", "down"])

    def test_duplicates(self):
        with pytest.raises(CloudError, match="distinct"):
            normalise_axes(["up", "up", "down"])


class TestProject:
    def test_single_vector_radius(self):
        cloud = build_cloud([vec(1, 1, 0, 0, 0)] * 3, total_slices=4)
        projection = project(cloud, ("up", "down", "constant"))
        assert len(projection.points) == 1
        point = projection.points[0]
        assert point.coords == (1, 1, 0)
        assert point.multiplicity == 3
        assert point.radius == pytest.approx(3 / 4)

    def test_merges_points_differing_on_dropped_axis(self):
        cloud = build_cloud(
            [vec(1, 1, 0, 0, 0), vec(1, 1, 0, 1, 0)], total_slices=3
        )
        projection = project(cloud, ("up", "down", "constant"))
        assert len(projection.points) == 1
        assert projection.points[0].multiplicity == 2

    def test_mass_conservation(self, dicant_report):
        cloud = dicant_report.cloud
        for axes in (("up", "down", "constant"), ("up", "down", "crossings")):
            projection = project(cloud, axes)
            assert sum(p.multiplicity for p in projection.points) == (
                cloud.total_slices - 1
            )
            for point in projection.points:
                assert point.radius == pytest.approx(
                    point.multiplicity / cloud.total_slices
                )

    def test_static_point_at_origin_in_dicant(self, dicant_report):
        # (0, 0, 2, 0, 0) projects onto (0, 0, 0) when the constant and rest
        # axes are both dropped.
        projection = project(dicant_report.cloud, ("up", "down", "crossings"))
        origin = [p for p in projection.points if p.coords == (0, 0, 0)]
        assert origin and origin[0].multiplicity == 1

    def test_points_sorted_lexicographically(self, canon_report):
        projection = project(canon_report.cloud, ("up", "down", "rests"))
        assert [p.coords for p in projection.points] == sorted(
            p.coords for p in projection.points
        )

    def test_projection_independent_of_entry_order(self):
        vectors = [vec(1, 0, 1, 0, 0), vec(0, 1, 1, 0, 0), vec(1, 0, 1, 0, 0)]
        forward = project(build_cloud(vectors, 4), ("up", "down", "constant"))
        backward = project(build_cloud(vectors[::-1], 4), ("up", "down", "constant"))
        assert forward.points == backward.points

    def test_default_projections(self, angelus_report):
        views = default_projections(angelus_report.cloud)
        assert [v.axes for v in views] == [
            ("up", "down", "constant"),
            ("up", "down", "crossings"),
        ]


class TestExport:
    def test_csv_layout(self):
        cloud = build_cloud([vec(1, 1, 0, 0, 0), vec(2, 0, 0, 0, 0)], 3, title="x")
        text = projection_csv(project(cloud, ("up", "down", "constant")))
        lines = text.splitlines()
        assert lines[0] == "up,down,constant,multiplicity,radius"
        assert lines[1].startswith("1,1,0,1,")
        assert lines[2].startswith("2,0,0,1,")

    def test_records_shape(self):
        cloud = build_cloud([vec(1, 1, 0, 0, 0)], 2, title="piece")
        records = projection_records(project(cloud, ("up", "down", "rests")))
        assert records == {
            "piece": "piece",
            "axes": ["up", "down", "rests"],
            "points": [
                {"coords": [1, 1, 0], "multiplicity": 1, "radius": 0.5}
            ],
        }
