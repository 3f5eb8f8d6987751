"""Triangulation parsing, gluing validation, and derived cell classes."""

from __future__ import annotations

from importlib.resources import files

import pytest

from seifertq import (
    EDGE_SLOTS,
    TriangulationError,
    load_triangulation,
    parse_triangulation,
    s3_two_tetrahedra,
)

BALL = "tet 0: - - - -\n"


def test_two_tet_sphere_counts():
    tri = s3_two_tetrahedra()
    assert tri.tet_count == 2
    assert tri.vertex_count == 4
    assert tri.edge_count == 6
    assert tri.face_count == 4
    assert tri.euler_characteristic == 0
    assert tri.is_closed


def test_packaged_sphere_file_matches_builder():
    path = files("seifertq").joinpath("data/s3_two_tet.tri")
    tri = load_triangulation(str(path))
    built = s3_two_tetrahedra()
    assert tri.gluings == built.gluings


def test_single_tet_ball():
    tri = parse_triangulation(BALL)
    assert not tri.is_closed
    assert tri.vertex_count == 4
    assert tri.edge_count == 6
    assert tri.face_count == 4
    assert tri.euler_characteristic == 1  # a 3-ball


def test_edge_slot_order():
    tri = s3_two_tetrahedra()
    assert EDGE_SLOTS == ((0, 1), (0, 2), (1, 2), (2, 3), (1, 3), (0, 3))
    # identity gluings identify same-name edges across the two tetrahedra
    assert tri.tet_edge_classes(0) == tri.tet_edge_classes(1)
    assert sorted(tri.tet_edge_classes(0)) == [0, 1, 2, 3, 4, 5]


def test_comments_and_blank_lines_ignored():
    text = "# a sphere\n\ntet 0: 1:0:0123 1:1:0123 1:2:0123 1:3:0123 # all four\ntet 1: 0:0:0123 0:1:0123 0:2:0123 0:3:0123\n"
    assert parse_triangulation(text).is_closed


@pytest.mark.parametrize(
    "text",
    [
        "",  # nothing
        "tet 0: - - -\n",  # wrong arity
        "tet zero: - - - -\n",  # bad id
        "tet 0: x - - -\n",  # malformed entry
        "tet 0: 1:0:01 - - -\n",  # short permutation word
        "tet 0: 1:0:0124 - - -\n",  # bad character
        "tet 0: 1:0:0113 - - -\n",  # not a permutation
        "tet 0: - - - -\ntet 0: - - - -\n",  # duplicate id
        "tet 1: - - - -\n",  # ids must start at 0
        "tet 0: 2:0:0123 - - -\n",  # gluing to a nonexistent tetrahedron
        "tet 0: 0:0:0123 - - -\n",  # face glued to itself
    ],
)
def test_malformed_text_rejected(text):
    with pytest.raises(TriangulationError):
        parse_triangulation(text)


def test_permutation_must_carry_face_index():
    # face 0 glued to face 1 but the permutation sends vertex 0 to 0
    text = "tet 0: 1:1:0123 - - -\ntet 1: - 0:0:0123 - -\n"
    with pytest.raises(TriangulationError):
        parse_triangulation(text)


def test_gluings_must_be_involutive():
    # partner entry exists but does not point back with the inverse map
    text = "tet 0: 1:0:0123 - - -\ntet 1: - - - -\n"
    with pytest.raises(TriangulationError):
        parse_triangulation(text)


def test_involution_checks_inverse_permutation():
    # 2013 sends vertex 1 to 0 (so the face check passes) but is not the
    # inverse of 1230, whose inverse is 3012
    text = "tet 0: 1:1:1230 - - -\ntet 1: - 0:0:2013 - -\n"
    with pytest.raises(TriangulationError):
        parse_triangulation(text)

    good = "tet 0: 1:1:1230 - - -\ntet 1: - 0:0:3012 - -\n"
    assert parse_triangulation(good).tet_count == 2


def test_self_gluing_between_faces_of_one_tet():
    # glue face 0 of the single tetrahedron to its own face 1: vertex 0 <-> 1
    text = "tet 0: 0:1:1023 0:0:1023 - -\n"
    tri = parse_triangulation(text)
    assert not tri.is_closed
    assert tri.tet_count == 1
    assert tri.face_count == 3  # one interior pair + two boundary faces
