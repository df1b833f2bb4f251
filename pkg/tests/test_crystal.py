import itertools
import json

import pytest

from facecrystal.crystal import (
    FaceSpec,
    build_crystal,
    export,
    face,
    from_json,
    in_face,
    rho_content,
    rho_degree,
    rho_hub,
    tau,
    tau_hub,
    to_dot,
    to_json,
    weyl_word_to_bottom,
)
from facecrystal.errors import DomainError
from facecrystal.weights import DominantWeight, WeightPoint, in_face_region

E5 = FaceSpec(DominantWeight(5, (0, 1, 1, 0, 0)), (1, 2, 3))
HEX = FaceSpec(DominantWeight(4, (0, 3, 2, 0)), (1, 2))


def test_face_spec_validation():
    base = DominantWeight(5, (1, 1, 1, 1, 1))
    assert FaceSpec(base, (4, 0, 1)).local_level == 3
    assert FaceSpec.from_start(base, 4, 2).interval == (4, 0)
    for bad in ((), (0, 1, 2, 3, 4), (1, 3)):
        with pytest.raises(DomainError):
            FaceSpec(base, bad)


def test_degree_zero_graph():
    g = build_crystal(DominantWeight(3, (1, 0, 0)), 0)
    assert len(g) == 1 and not g.edges
    assert to_dot(g).count("label=") == 1
    with pytest.raises(DomainError):
        build_crystal(DominantWeight(3, (1, 0, 0)), None)


def test_full_crystal_small():
    # Lambda_0 at e=2: dimensions 1,1,1,2,2 are partition counts of 2-regular partitions
    g = build_crystal(DominantWeight(2, (1, 0)), 6)
    by_degree = {}
    for v in g.vertices.values():
        by_degree[v.degree] = by_degree.get(v.degree, 0) + v.count
    assert [by_degree[d] for d in range(7)] == [1, 1, 1, 2, 2, 3, 4]
    for a, b, i in g.edges:
        assert b[i] == a[i] + 1 and sum(b) == sum(a) + 1


def test_single_residue_face_is_a_string():
    for a in range(5):
        base = DominantWeight(4, (1, a, 0, 0))
        g = face(FaceSpec(base, (1,)))
        assert len(g) == a + 1
        assert [g.vertex((0, k, 0, 0)).defect for k in range(a + 1)] == [k * (a - k) for k in range(a + 1)]


def test_e5_face():
    g = face(E5, keep_multipartitions=True)
    v = g.by_hub((1, 0, 0, 1, 0))
    assert v.defect == 1 and v.count == 2
    assert [str(m) for m in v.multipartitions] == ["[[2], []]", "[[1], [1]]"]
    bottom = g.by_hub((2, 0, -1, -1, 2))
    assert bottom.defect == 0 and bottom.degree == 7 == g.max_degree()
    assert sum(1 for x in g.vertices.values() if x.defect == 0) == 12
    assert len(g) == 16


def test_hexagon_face():
    g = face(HEX)
    assert len(g) == 27
    zero = {(v.content[1], v.content[2]) for v in g.vertices.values() if v.defect == 0}
    assert zero == {(0, 0), (3, 0), (0, 2), (5, 2), (3, 5), (5, 5)}
    assert {(v.content[1], v.content[2]) for v in g.vertices.values()} == {
        (j1, j2) for j1 in range(6) for j2 in range(6) if in_face_region(3, 2, j1, j2)
    }


def test_rho():
    assert rho_hub(E5) == (2, 0, -1, -1, 2)
    assert rho_degree(E5) == 7
    assert rho_degree(HEX) == 10
    assert rho_hub(HEX) == (0 + 5, -2, -3, 0 + 5)
    base = DominantWeight(6, (2, 3, 1, 4, 0, 0))
    t1 = FaceSpec(base, (1,))
    assert rho_hub(t1) == (2 + 3, -3, 3 + 1, 4, 0, 0)
    assert rho_degree(t1) == 3
    assert weyl_word_to_bottom(3) == [1, 2, 3, 2, 1, 2]
    assert len(weyl_word_to_bottom(4)) == 10


def test_rho_when_interval_leaves_one_residue():
    spec = FaceSpec(DominantWeight(3, (1, 1, 2)), (1, 2))
    g = face(spec)
    assert g.vertex(rho_content(spec)).hub == rho_hub(spec) == (1 + 6, -2, -1)
    assert g.max_degree() == rho_degree(spec)


def test_tau_examples():
    image = tau(E5, WeightPoint(E5.base, (0, 1, 1, 0, 0)))
    assert image.hub == (2, -1, 0, 0, 1) and image.defect == 1
    assert tau(E5, E5.base.top()).hub == rho_hub(E5)
    assert tau_hub(E5, (1, 0, 0, 1, 0)) == (2, -1, 0, 0, 1)
    with pytest.raises(DomainError):
        tau(E5, WeightPoint(E5.base, (1, 0, 0, 0, 0)))
    with pytest.raises(DomainError):
        tau(E5, WeightPoint(E5.base, (0, 3, 0, 0, 0)))


def test_tau_intertwines_edges_on_hexagon():
    g = face(HEX)
    t = HEX.t
    for a, b, i in g.edges:
        ta = tau(HEX, WeightPoint(HEX.base, a)).content
        tb = tau(HEX, WeightPoint(HEX.base, b)).content
        mirror = HEX.interval[t - 1 - HEX.interval.index(i)]
        assert (tb, ta, mirror) in g.edges


@pytest.mark.parametrize("t,e", [(1, 3), (2, 4), (2, 5), (3, 5), (2, 3), (3, 4), (1, 2)])
def test_tau_on_a_grid(t, e):
    for local in itertools.product(range(3), repeat=t):
        a = [1] + list(local) + [0] * (e - t - 1)
        spec = FaceSpec(DominantWeight(e, tuple(a)), tuple(range(1, t + 1)))
        g = face(spec)
        assert g.max_degree() == rho_degree(spec)
        for v in g.vertices.values():
            p = WeightPoint(spec.base, v.content)
            q = tau(spec, p)
            assert tau(spec, q) == p
            w = g.vertex(q.content)
            assert (w.defect, w.count) == (v.defect, v.count)


def test_in_face_matches_bfs():
    g = face(E5)
    for c in itertools.product(range(4), repeat=3):
        content = (0,) + c + (0,)
        assert in_face(E5, content) == (content in g.vertices)


def test_strings_follow_defect_profile():
    g = face(HEX)
    for v in g.vertices.values():
        for i in HEX.interval:
            up = list(v.content)
            up[i] -= 1
            if tuple(up) in g.vertices:
                continue
            # v tops an i-string
            w = v.hub[i]
            profile = []
            c = list(v.content)
            for k in range(w + 1):
                profile.append(g.vertex(tuple(c)).defect)
                c[i] += 1
            assert profile == [v.defect + k * (w - k) for k in range(w + 1)]


def test_json_roundtrip_and_dot():
    g = face(HEX)
    data = json.loads(to_json(g))
    assert set(data) == {"e", "lambda", "interval", "vertices", "edges"}
    assert data["vertices"][0] == {"content": [0, 0, 0, 0], "hub": [0, 3, 2, 0], "defect": 0, "count": 1}
    back = from_json(to_json(g))
    assert back.vertices == {c: v for c, v in g.vertices.items()} and back.edges == g.edges
    dot = export(face(E5), "dot").decode()
    assert '[label="[1,0,0,1,0]^1"]' in dot and dot.count("->") == 24
    with pytest.raises(DomainError):
        export(g, "png")
