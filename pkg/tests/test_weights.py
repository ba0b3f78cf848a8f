import itertools

import pytest
from hypothesis import given, strategies as st

from arcalg import Block, Weight, WeightError, bruhat_leq, pos, principal_block, weights_in_block
from arcalg.diagrams import cup_diagram, lambda_pairs, orient
from arcalg.weights import basic_moves


def test_parse_examples():
    w = Weight.parse("vvvv")
    assert w.block == principal_block(4, 0)
    assert Weight.parse("").labels == ""
    w = Weight.parse("^xxvo^")
    assert w.block.skeleton == "bxxbob"
    assert Weight.parse(str(w)) == w


def test_parse_error_has_position():
    with pytest.raises(WeightError) as err:
        Weight.parse("^vq")
    assert err.value.position == 3


def test_block_members():
    assert [w.labels for w in weights_in_block(Block("b", 0))] == ["v"]
    odd = {w.labels for w in weights_in_block(principal_block(4, 1))}
    assert len(odd) == 8 and "^vvv" in odd


def test_bruhat_examples():
    l1, l4, l5, l8 = (Weight(x) for x in ("vvvv", "v^^v", "^vv^", "^^^^"))
    assert bruhat_leq(l8, l1) and not bruhat_leq(l1, l8)
    assert bruhat_leq(l4, l4)
    assert not bruhat_leq(l4, l5) and not bruhat_leq(l5, l4)


@pytest.mark.parametrize("skeleton,parity", [("bbbb", 0), ("bbbb", 1), ("bxbob", 0), ("bbbbb", 1)])
def test_bruhat_partial_order(skeleton, parity):
    ws = weights_in_block(Block(skeleton, parity))
    for a, b in itertools.product(ws, repeat=2):
        if a != b:
            assert not (bruhat_leq(a, b) and bruhat_leq(b, a))
    for a, b, c in itertools.product(ws, repeat=3):
        if bruhat_leq(a, b) and bruhat_leq(b, c):
            assert bruhat_leq(a, c)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_moves_generate_block(k):
    for p in (0, 1):
        ws = set(weights_in_block(principal_block(k, p)))
        seen, todo = {max(ws, key=lambda w: len([u for u in ws if bruhat_leq(u, w)]))}, []
        todo = list(seen)
        while todo:
            w = todo.pop()
            for u in basic_moves(w):
                assert u in ws
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        assert seen == ws


def test_lambda_pairs_examples():
    (p,) = lambda_pairs(Weight("^^vv"))
    assert (p.alpha, p.beta, p.target) == (-1, 2, Weight("vvvv"))
    assert lambda_pairs(Weight("vvvv")) == []
    got = {(p.alpha, p.beta, p.target.labels) for p in lambda_pairs(Weight("vv^^"))}
    assert got == {(2, 3, "v^v^"), (1, 4, "^v^v")}


@pytest.mark.parametrize("k", [3, 4, 5])
def test_lambda_pairs_degree_one(k):
    for w in weights_in_block(principal_block(k, 0)):
        for p in lambda_pairs(w):
            assert bruhat_leq(w, p.target) and w != p.target
            assert orient(cup_diagram(w), p.target) == 1


def test_pos():
    assert pos(principal_block(4), 3) == 3
    assert pos(Block("bxb"), 3) == 2
    assert pos(Block("ob"), 2) == 1


@given(st.text(alphabet="^vxo", max_size=8))
def test_parse_round_trip(text):
    w = Weight.parse(text)
    assert Weight.parse(str(w)) == w
    assert w.labels == text.rstrip("o")
