import random

import pytest
from hypothesis import given, settings, strategies as st

from facecrystal import reference as ref
from facecrystal.canonical import (
    CanonicalElement,
    canonical_basis,
    cache_path,
    clear_cache,
    load_cache,
    monomial_for,
    save_cache,
    shape,
    strip,
    wedge,
)
from facecrystal.errors import DomainError, IntegrityError
from facecrystal.fock import FockVector, eval_path
from facecrystal.partitions import (
    Multicharge,
    Multipartition,
    content,
    dominance_geq,
    f_tilde,
)
from facecrystal.qpoly import ONE, LaurentPoly, gauss_binom

CH = Multicharge.from_weight(4, ref.EXAMPLE_E4_WEIGHT)


def mp(lists, charge=CH):
    return Multipartition.from_lists(lists, charge)


def Z(*coeffs):
    return LaurentPoly({k: c for k, c in enumerate(coeffs)})


@pytest.mark.parametrize("key", sorted(ref.EXAMPLE_G_TEXT))
def test_reference_expansions(key):
    g = canonical_basis(Multipartition.parse(key, CH))
    assert g.vector == FockVector.parse(ref.EXAMPLE_G_TEXT[key], CH)
    assert shape(g) == Z(*ref.EXAMPLE_SHAPES[key])


def test_largest_reference_expansion_has_25_terms():
    g = canonical_basis(mp([[2], [1], [1], [1], []]))
    assert len(g.vector) == 25
    assert g.vector.coefficient(mp([[1], [1], [1], [1], [1]])) == LaurentPoly.parse("v^4+v^2", "v")
    assert g.shape == Z(1, 3, 6, 6, 6, 3, 1)


def test_defect_zero_vertex_is_a_single_ket():
    # top of the face and the far corner carry no other terms
    assert canonical_basis(Multipartition.empty(CH)).vector == FockVector.vacuum(CH)
    mu = mp([[2], [2], [1, 1], [1, 1], [1, 1]])
    assert canonical_basis(mu).vector == FockVector.basis(mu)


def test_monomial_is_a_path_vector():
    mu = mp([[2], [1], [1], [1], []])
    x = monomial_for(mu)
    assert x.coefficient(mu) == ONE
    assert strip(x)[0][1].leader == mu


def test_not_regular_raises():
    bad = Multipartition.from_lists([[], [1], []], Multicharge(3, (0, 0, 2)))
    with pytest.raises(DomainError, match="not e-regular"):
        canonical_basis(bad)


def random_regular(rng):
    e = rng.choice((3, 4, 5))
    charge = Multicharge(e, tuple(sorted(rng.randrange(e) for _ in range(rng.randint(1, 3)))))
    mu = Multipartition.empty(charge)
    for _ in range(rng.randint(0, 6)):
        nxt = f_tilde(mu, rng.randrange(e))
        if nxt is not None:
            mu = nxt
    return mu


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_canonical_invariants(seed):
    mu = random_regular(random.Random(seed))
    g = canonical_basis(mu)
    assert g.leader == mu and g.vector.coefficient(mu) == ONE
    for lam, c in g.vector.items():
        assert content(lam) == content(mu)
        assert dominance_geq(mu, lam)
        if lam != mu:
            assert c.min_degree() >= 1
    # G(mu) strips to itself
    assert [(c, h.leader) for c, h in strip(g.vector)] == [(ONE, mu)]


def test_strip_path_vector():
    charge = Multicharge.from_weight(4, ref.STRIP_WEIGHT)
    x = eval_path(ref.STRIP_PATH, charge)
    parts = strip(x)
    assert [(sorted(c.terms), h.leader.to_lists()) for c, h in parts] == [
        (list(exps), m) for exps, m in ref.STRIP_RESULT
    ]
    total = FockVector.zero(charge)
    for c, h in parts:
        total = total + h.vector.scale(c)
    assert total == x


def test_strip_two_term_path():
    x = eval_path([(2, 1), (1, 2), (2, 2)], CH)
    assert [(c, h.leader) for c, h in strip(x)] == [
        (ONE, mp([[2], [2], [1], [], []])),
        (ONE, mp([[2], [1], [1], [1], []])),
    ]


def test_strip_rejects_non_symmetric_coefficient():
    x = FockVector.basis(Multipartition.empty(CH)).scale(LaurentPoly.parse("v", "v"))
    with pytest.raises(IntegrityError):
        strip(x)


@pytest.mark.parametrize("a", range(2, 6))
def test_single_residue_shapes(a):
    charge = Multicharge.from_weight(4, (0, a, 0, 0))
    for j in range(a + 1):
        mu = Multipartition(tuple((1,) if c < j else () for c in range(a)), charge)
        assert shape(canonical_basis(mu)) == gauss_binom(a, j)


def test_wedge_of_far_apart_elements():
    charge = Multicharge.from_weight(5, (0, 2, 0, 2, 0))
    g1 = canonical_basis(Multipartition.from_lists([[1], [], [], []], charge))
    g2 = canonical_basis(Multipartition.from_lists([[], [], [1], []], charge))
    w = wedge(g1, g2)
    assert shape(w) == Z(1, 1) * Z(1, 1)
    assert w.vector == canonical_basis(w.leader).vector
    near = canonical_basis(Multipartition.from_lists([[], [], [], []], charge))
    with pytest.raises(DomainError):
        wedge(g1, CanonicalElement(g1.leader, g1.vector))
    assert wedge(g1, near).vector == g1.vector


def test_wedge_rejects_adjacent_residues():
    charge = Multicharge.from_weight(4, (0, 1, 1, 0))
    g1 = canonical_basis(Multipartition.from_lists([[1], []], charge))
    g2 = canonical_basis(Multipartition.from_lists([[], [1]], charge))
    with pytest.raises(DomainError):
        wedge(g1, g2)


def test_shape_rejects_negative_powers():
    x = FockVector.basis(Multipartition.empty(CH)).scale(LaurentPoly.parse("v^-1", "v"))
    with pytest.raises(DomainError):
        shape(x)


def test_cache_roundtrip(tmp_path):
    g = canonical_basis(mp([[1], [1], [1], [], []]))
    path = save_cache(str(tmp_path), CH)
    assert path == cache_path(str(tmp_path), CH)
    clear_cache()
    assert load_cache(str(tmp_path), CH) >= 1
    assert canonical_basis(g.leader) == g
    assert load_cache(str(tmp_path), Multicharge(3, (0,))) is None


def test_cache_rejects_tampered_entry(tmp_path):
    canonical_basis(mp([[1], [1], [1], [], []]))
    path = save_cache(str(tmp_path), CH)
    text = open(path).read().replace('{"terms": [[0, 1]]}', '{"terms": [[0, 2]]}', 1)
    open(path, "w").write(text)
    clear_cache()
    with pytest.raises(IntegrityError):
        load_cache(str(tmp_path), CH)
