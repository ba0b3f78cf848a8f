from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from arcalg import supergroup as sg
from arcalg.supergroup import HookPartition, SuperError

GRID = [(1, 1), (2, 1), (2, 3), (2, 2), (3, 1), (1, 3), (3, 3)]


def grid(m, n, size=5):
    return list(sg.hook_partitions(m, n, size, size))


def test_wt_prime_examples():
    r = sg.wt_prime(HookPartition((8, 7, 6, 3, 3, 1), 7, 5))
    assert r.a == tuple(F(x, 2) for x in (15, 11, 9, 3, 1, -1, -1))
    assert r.b == tuple(F(x, 2) for x in (11, 7, 3, 1, 1))
    e = sg.wt_prime(HookPartition((), 1, 1))
    assert (e.a, e.b) == ((F(-1, 2),), (F(1, 2),))


def test_s_sequence_examples():
    assert sg.s_sequence(HookPartition((), 1, 1), 1, 3) == [F(1, 2), F(3, 2), F(5, 2)]
    assert sg.s_sequence(HookPartition((1,), 1, 1), 1, 3) == [F(-1, 2), F(3, 2), F(5, 2)]


def test_empty_infinite_weights():
    assert str(sg.infinite_weight(HookPartition((), 3, 1))) == "xx|^"
    assert str(sg.infinite_weight(HookPartition((), 1, 3))) == "oo|^"


def test_d_degree_examples():
    for m, n in GRID:
        assert sg.d_degree(HookPartition((), m, n)) == min(m, n)
    assert sg.d_degree(HookPartition((3, 3, 3), 3, 3)) == 0


@pytest.mark.parametrize("m,n", GRID)
def test_dictionary_round_trips(m, n):
    for lam in grid(m, n):
        assert sg.partition_from_rho(sg.wt_prime(lam)) == lam
        assert sg.d_degree(lam) == sg.d_degree_from_rho(lam)
        mu = sg.super_weight(lam)
        assert mu.is_super_weight_diagram() and sg.satisfies_timescirc(mu, m, n)
        assert sg.hook_from_super(mu, m, n) == lam
        assert sg.gs_translate(lam) == sg.infinite_weight(lam)
        assert sg.gs_cups_match(lam)


@pytest.mark.parametrize("m,n", GRID)
def test_box_moves_are_local(m, n):
    for lam in grid(m, n, 4):
        for big in lam.addable():
            assert sg.box_move(sg.infinite_weight(lam), sg.infinite_weight(big)) is not None
            assert sg.satisfies_timescirc(sg.super_weight(big), m, n)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_every_super_weight_has_a_preimage(m, n):
    for mu in sg.super_weights(m, n, 6):
        assert sg.super_weight(sg.hook_from_super(mu, m, n)) == mu


def test_sosp32_pictures():
    p0 = sg.super_weight(sg.sosp32_partition(0))
    assert p0.cups().text() == "dcup(1,2) dray(3)"
    for i in range(1, 5):
        c = sg.super_weight(sg.sosp32_partition(i)).cups()
        assert [(x.left, x.right, x.dotted) for x in c.cups] == [(i, i + 1, False)]


def test_hom_symmetry_and_level_invariance():
    parts = grid(2, 1, 3)
    for a in parts:
        for b in parts:
            d = sg.hom_dim(a, b)
            assert d == sg.hom_dim(b, a)
            assert d == sg.hom_dim(a, b, level=sg.good_level([sg.super_weight(a), sg.super_weight(b)]) + 3)
        assert sg.hom_dim(a, a) >= 1


def test_truncated_basis():
    p = sg.sosp32_partition
    tb = sg.truncated_hom_basis([p(0), p(2)])
    assert tb.quotient_dim(0, 1) == 1 == sg.hom_dim(p(0), p(2))
    tb = sg.truncated_hom_basis([p(i) for i in range(4)])
    assert sg.ideal_violations(tb) == []
    for i in range(4):
        for j in range(4):
            assert tb.quotient_dim(i, j) == sg.hom_dim(p(i), p(j))
    single = sg.truncated_hom_basis([p(3)])
    assert len(single.entries[(0, 0)]) == 2


def test_unlinked_raises():
    a, b = HookPartition((3, 2, 2), 2, 1), HookPartition((3, 2, 1), 2, 1)
    assert not sg.super_linked(sg.super_weight(a), sg.super_weight(b))
    with pytest.raises(SuperError):
        sg.truncated_hom_basis([a, b])
    assert sg.hom_dim(a, b) == 0


def test_bad_partitions():
    with pytest.raises(SuperError):
        HookPartition((3, 3), 1, 1)
    with pytest.raises(SuperError):
        HookPartition.parse("1,x", 1, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.lists(st.integers(0, 7), max_size=6))
def test_random_round_trip(m, n, parts):
    parts = sorted(parts, reverse=True)
    try:
        lam = HookPartition(tuple(parts), m, n)
    except SuperError:
        return
    assert sg.hook_from_super(sg.super_weight(lam), m, n) == lam
    assert sg.gs_translate(lam) == sg.infinite_weight(lam)
