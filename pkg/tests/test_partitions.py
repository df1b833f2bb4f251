import random

import pytest
from hypothesis import given, settings, strategies as st

from facecrystal.errors import DomainError
from facecrystal.partitions import (
    Multicharge,
    Multipartition,
    addable_nodes,
    apply_f_path,
    cogood_node,
    content,
    dominance_geq,
    dominance_maximal,
    e_tilde,
    epsilon,
    f_tilde,
    good_node,
    is_e_regular,
    make_partition,
    peel,
    phi,
    removable_nodes,
    signature_string,
    support,
)

from oracles import content_of, i_nodes, multipartitions_of

CH = Multicharge.from_weight(4, (0, 2, 3, 0))


def mp(lists, charge=CH):
    return Multipartition.from_lists(lists, charge)


def coords(nodes):
    return [(n.component, n.row, n.col) for n in nodes]


def test_multicharge_from_weight():
    assert CH.residues == (1, 1, 2, 2, 2)
    assert CH.weight() == (0, 2, 3, 0)
    assert CH.components_with_corner(2) == [2, 3, 4]
    with pytest.raises(DomainError):
        Multicharge(3, (0, 3))


def test_partition_validation():
    assert make_partition([3, 1]) == (3, 1)
    with pytest.raises(DomainError):
        make_partition([1, 2])
    with pytest.raises(DomainError):
        mp([[1], [], []])


def test_residues_and_nodes():
    mu = mp([[2], [1], [1], [1], []])
    assert mu.residue(1, 1, 2) == 2
    assert [n.residue for n in mu.nodes()] == [1, 2, 1, 2, 2]
    assert str(mu) == "[[2], [1], [1], [1], []]"
    assert mu.ket() == "|[2], [1], [1], [1], []>"
    assert Multipartition.parse("[[2], [1], [1], [1], []]", CH) == mu


def test_addable_nodes():
    empty = Multipartition.empty(CH)
    assert coords(addable_nodes(empty, 1)) == [(1, 1, 1), (2, 1, 1)]
    assert coords(addable_nodes(empty, 2)) == [(3, 1, 1), (4, 1, 1), (5, 1, 1)]
    assert coords(addable_nodes(mp([[1], [], [], [], []]), 1)) == [(2, 1, 1)]


def test_removable_nodes():
    assert removable_nodes(Multipartition.empty(CH), 1) == []
    assert coords(removable_nodes(mp([[1], [1], [], [], []]), 1)) == [(1, 1, 1), (2, 1, 1)]
    assert coords(removable_nodes(mp([[2], [], [], [], []]), 2)) == [(1, 1, 2)]


def test_signatures():
    empty = Multipartition.empty(CH)
    assert signature_string(empty, 2) == "+++"
    assert signature_string(mp([[1], [1], [], [], []]), 1) == "--"
    ch = Multicharge(3, (1, 1))
    assert signature_string(Multipartition.from_lists([[1], []], ch), 1) == "+-"
    # a '-' below a '+' cancels
    lam = Multipartition.from_lists([[], [1]], ch)
    assert signature_string(lam, 1) == ""


def test_good_and_cogood():
    empty = Multipartition.empty(CH)
    assert coords([cogood_node(empty, 1)]) == [(1, 1, 1)]
    assert good_node(empty, 1) is None
    assert coords([good_node(mp([[1], [1], [], [], []]), 1)]) == [(2, 1, 1)]
    assert f_tilde(empty, 1) == mp([[1], [], [], [], []])


def test_worked_path():
    empty = Multipartition.empty(CH)
    assert apply_f_path(empty, [(2, 1), (1, 2), (2, 2)]) == mp([[2], [1], [1], [1], []])


def test_e_regularity():
    assert is_e_regular(Multipartition.empty(CH))
    ch = Multicharge(3, (0, 0, 2))
    bad = Multipartition.from_lists([[], [1], []], ch)
    assert not is_e_regular(bad)
    assert peel(bad) == ([], bad)
    assert is_e_regular(mp([[2], [1], [1], [1], []]))


def test_dominance():
    a = mp([[2], [1], [1], [1], []])
    b = mp([[1], [1], [1], [1], [1]])
    assert dominance_geq(a, a)
    assert dominance_geq(a, b) and not dominance_geq(b, a)
    ch = Multicharge(4, (0, 0))
    x = Multipartition.from_lists([[1], [1, 1]], ch)
    y = Multipartition.from_lists([[], [3]], ch)
    assert not dominance_geq(x, y) and not dominance_geq(y, x)
    assert dominance_maximal([x, y]) == sorted([x, y], key=Multipartition.sort_key, reverse=True)
    assert dominance_maximal([a, b]) == [a]


def test_content_and_support():
    assert content(Multipartition.empty(CH)) == (0, 0, 0, 0)
    mu = mp([[2], [1], [1], [1], []])
    assert content(mu) == (0, 2, 3, 0)
    assert support(mu) == {1, 2}
    for i in range(4):
        nxt = f_tilde(mu, i)
        if nxt is not None:
            c = list(content(mu))
            c[i] += 1
            assert content(nxt) == tuple(c)


def random_mp(rng, max_level=5, max_nodes=8):
    e = rng.choice((2, 3, 4, 5))
    charge = Multicharge(e, tuple(sorted(rng.randrange(e) for _ in range(rng.randint(1, max_level)))))
    mu = Multipartition.empty(charge)
    for _ in range(rng.randint(0, max_nodes)):
        i = rng.randrange(e)
        adds = addable_nodes(mu, i)
        if adds:
            mu = mu.with_node(rng.choice(adds))
    return mu


@settings(max_examples=150)
@given(st.integers(0, 10**6))
def test_nodes_match_oracle(seed):
    mu = random_mp(random.Random(seed))
    e = mu.charge.e
    for i in range(e):
        got = [(k, (n.component - 1, n.row, n.col)) for k, n in mu.i_nodes(i)]
        want = i_nodes(mu.parts, mu.charge.residues, e, i)
        assert sorted(got) == sorted(want)
        # global order: component, then row
        keys = [(n[0], n[1]) for _, n in got]
        assert keys == sorted(keys)
    assert content(mu) == content_of(mu.parts, mu.charge.residues, e)


@settings(max_examples=150)
@given(st.integers(0, 10**6))
def test_crystal_operators_are_partial_inverses(seed):
    mu = random_mp(random.Random(seed))
    for i in range(mu.charge.e):
        nxt = f_tilde(mu, i)
        if nxt is not None:
            assert e_tilde(nxt, i) == mu
            assert epsilon(nxt, i) == epsilon(mu, i) + 1
            assert phi(nxt, i) == phi(mu, i) - 1
        prev = e_tilde(mu, i)
        if prev is not None:
            assert f_tilde(prev, i) == mu
        sig = signature_string(mu, i)
        assert "-+" not in sig


@pytest.mark.parametrize("e,charge,n", [(3, (0, 1), 4), (4, (1, 1, 2), 4), (2, (0, 0), 4), (3, (0, 0, 2), 3)])
def test_peel_agrees_with_crystal_reachability(e, charge, n):
    ch = Multicharge(e, charge)
    reach = {Multipartition.empty(ch)}
    level = set(reach)
    for _ in range(n):
        level = {m for x in level for i in range(e) if (m := f_tilde(x, i)) is not None}
        reach |= level
    for size in range(n + 1):
        for parts in multipartitions_of(size, len(charge)):
            mu = Multipartition(parts, ch)
            assert is_e_regular(mu) == (mu in reach)
