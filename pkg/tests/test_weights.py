import itertools

import pytest

from facecrystal.errors import DomainError
from facecrystal.weights import (
    DominantWeight,
    WeightPoint,
    cartan_matrix,
    content_from_hub,
    defect,
    face_defect,
    format_hub,
    hub,
    in_face_region,
    pairing,
    root_pairing,
    string_defects,
    weyl_reflect,
)

from oracles import cartan, defect_formula

E5 = DominantWeight(5, (0, 1, 1, 0, 0))


def test_cartan_matrix():
    assert cartan_matrix(2) == ((2, -2), (-2, 2))
    assert cartan_matrix(3) == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
    assert cartan_matrix(5)[0] == (2, -1, 0, 0, -1)
    for e in range(2, 8):
        assert [list(r) for r in cartan_matrix(e)] == cartan(e)
    with pytest.raises(DomainError):
        cartan_matrix(1)


def test_dominant_weight_validation():
    with pytest.raises(DomainError):
        DominantWeight(3, (0, 0, 0))
    with pytest.raises(DomainError):
        DominantWeight(3, (1, -1, 0))
    with pytest.raises(DomainError):
        DominantWeight(3, (1, 0))
    assert E5.level == 2 and E5.charge().residues == (1, 2)


def test_hub():
    assert hub(E5.top()) == (0, 1, 1, 0, 0)
    assert hub(WeightPoint(E5, (0, 1, 1, 0, 0))) == (1, 0, 0, 1, 0)
    assert hub(WeightPoint(E5, (0, 2, 3, 2, 0))) == (2, 0, -1, -1, 2)
    assert format_hub((2, 0, -1)) == "[2,0,-1]"


def test_defect():
    assert defect(E5.top()) == 0
    assert defect(WeightPoint(E5, (0, 1, 1, 0, 0))) == 1
    hexa = DominantWeight(4, (0, 3, 2, 0))
    assert defect(WeightPoint(hexa, (0, 2, 2, 0))) == 6
    assert defect(WeightPoint(hexa, (0, 0, 0, 0), delta_shift=1)) == 5
    assert pairing((0, 3, 2, 0), (0, 2, 2, 0)) == 10
    assert root_pairing((0, 2, 2, 0), (0, 2, 2, 0), 4) == 8


def test_string_defects():
    assert string_defects(0, 3) == [0, 2, 2, 0]
    assert string_defects(0, 0) == [0]
    assert string_defects(1, 2) == [1, 2, 1]


def test_face_defect_examples():
    assert face_defect(3, 2, 1, 1) == 4
    assert face_defect(3, 2, 0, 0) == 0
    assert face_defect(3, 2, 2, 1) == 5
    with pytest.raises(DomainError):
        face_defect(3, 2, 4, 0)


@pytest.mark.parametrize("a1,a2", list(itertools.product(range(6), repeat=2)))
def test_face_defect_is_bilinear_defect(a1, a2):
    base = (0, a1, a2, 0)
    for j1, j2 in itertools.product(range(a1 + a2 + 1), repeat=2):
        if in_face_region(a1, a2, j1, j2):
            assert face_defect(a1, a2, j1, j2) == defect_formula(base, (0, j1, j2, 0))


def test_hexagon_region_size():
    pts = [(j1, j2) for j1 in range(6) for j2 in range(6) if in_face_region(3, 2, j1, j2)]
    assert len(pts) == 27


def test_weyl_reflect():
    base = DominantWeight(6, (1, 2, 3, 4, 0, 0))
    p = weyl_reflect(base.top(), 1)
    assert p.hub == (1 + 2, -2, 2 + 3, 4, 0, 0)
    assert weyl_reflect(p, 1) == base.top()
    q = E5.top()
    for i in (1, 2, 3, 2, 1, 2):
        q = weyl_reflect(q, i)
    assert q.hub == (2, 0, -1, -1, 2)


def test_content_from_hub():
    assert content_from_hub(E5, (2, 0, -1, -1, 2), (1, 2, 3)) == (0, 2, 3, 2, 0)
    assert content_from_hub(E5, (1, 0, 0, 1, 0), (1, 2, 3)) == (0, 1, 1, 0, 0)
    with pytest.raises(DomainError):
        content_from_hub(E5, (0, 0, 0, 0, 0), (1, 2, 3))
    with pytest.raises(DomainError):
        content_from_hub(E5, (0, 1, 1, 0, 0), (0, 1, 2, 3, 4))


def test_weight_point_validation():
    with pytest.raises(DomainError):
        WeightPoint(E5, (0, -1, 0, 0, 0))
    with pytest.raises(DomainError):
        WeightPoint(E5, (0, 1))
