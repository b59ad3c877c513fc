from collections import Counter

from reflexpoly.classify import canonical_polygons_in_box
from reflexpoly.gallery import POLYGONS, polygon
from reflexpoly.normal_form import normal_form
from reflexpoly.reflexive import dual, is_reflexive, is_smooth
from reflexpoly.bounds import cor_six_check, twelve_relation

from oracles import isomorphic_2d_bruteforce


def test_sixteen_classes(classification):
    assert len(classification.classes) == 16
    assert sorted(classification.labels()) == sorted(POLYGONS)
    assert classification.summary().startswith("16 classes\n")


def test_boundary_multiset(classification):
    counts = sorted(c.n_boundary for c in classification.classes)
    assert counts == [3, 4, 4, 4, 5, 5, 6, 6, 6, 6, 7, 7, 8, 8, 8, 9]


def test_duality_pairs(classification):
    pairs = {c.label: c.dual_label for c in classification.classes}
    assert pairs == {"3": "9", "9": "3", "4a": "8a", "8a": "4a", "4b": "8b", "8b": "4b",
                     "4c": "8c", "8c": "4c", "5a": "7a", "7a": "5a", "5b": "7b", "7b": "5b",
                     "6a": "6a", "6b": "6b", "6c": "6c", "6d": "6d"}
    for c in classification.classes:
        assert c.n_boundary + classification.by_label(c.dual_label).n_boundary == 12


def test_twelve_relation(classification):
    for c in classification.classes:
        assert twelve_relation(c.polygon) == 12


def test_smooth_and_terminal(classification):
    smooth = {c.label for c in classification.classes if c.smooth}
    assert smooth == {"3", "4a", "4b", "5a", "6a"}
    assert {c.label for c in classification.classes if c.terminal} == smooth
    sym = {c.label for c in classification.classes if c.centrally_symmetric}
    assert sym == {"4a", "6a", "8a"}


def test_pinned_gallery_matches_classification(classification):
    for c in classification.classes:
        assert normal_form(polygon(c.label)) == c.normal_form
        assert isomorphic_2d_bruteforce(polygon(c.label).vertices, c.polygon.vertices)


def test_every_canonical_polygon_in_box_is_reflexive():
    polys = canonical_polygons_in_box()
    assert all(is_reflexive(p) for p in polys)
    forms = Counter(normal_form(p) for p in polys)
    assert len(forms) == 16


def test_dual_class_by_oracle(classification):
    for c in classification.classes:
        d = dual(c.polygon)
        other = classification.by_label(c.dual_label).polygon
        assert isomorphic_2d_bruteforce(d.vertices, other.vertices)


def test_vertex_and_edge_extremes(classification):
    assert cor_six_check(classification.classes).passed
    assert is_smooth(polygon("6a"))


def test_write(classification, tmp_path):
    classification.write(str(tmp_path))
    files = sorted(p.name for p in tmp_path.iterdir())
    assert len(files) == 17 and "summary.txt" in files and "d2_6a.poly" in files
