import pytest

from arcalg import Weight, principal_block, weights_in_block
from arcalg.diagrams import (
    CircleDiagram, CupDiagram, cap_diagram, components, cup_diagram, mirror, orient, orientations,
    orientations_bruteforce, weight_of_cup,
)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_weight_of_cup_inverts(k):
    for p in (0, 1):
        for w in weights_in_block(principal_block(k, p)):
            assert weight_of_cup(cup_diagram(w)) == w


def test_text_round_trip():
    for w in weights_in_block(principal_block(5, 1)):
        c = cup_diagram(w)
        assert CupDiagram.parse(c.text(), w.block) == c


def test_cup_orients_itself_in_degree_zero():
    for w in weights_in_block(principal_block(5, 0)):
        assert orient(cup_diagram(w), w) == 0


def test_orientation_degrees():
    c = cup_diagram(Weight("^^^^"))
    degs = sorted(d for _, d in orientations(c))
    assert degs == [0, 1, 1, 2]
    assert orient(c, Weight("vvvv")) == 2


def test_orientations_match_bruteforce():
    for w in weights_in_block(principal_block(5, 1)):
        c = cup_diagram(w)
        assert sorted(orientations(c)) == sorted(orientations_bruteforce(c))


def test_mirror_is_involution():
    w = Weight("v^^v")
    assert mirror(mirror(cup_diagram(w))) == cup_diagram(w)
    assert mirror(cup_diagram(w)) == cap_diagram(w)


def test_components_kinds():
    w = Weight("v^v^")
    comps = components(CircleDiagram(cup_diagram(w), cap_diagram(w)))
    assert [c.kind for c in comps] == ["circle", "circle"]
    comps = components(CircleDiagram(cup_diagram(Weight("vvvv")), cap_diagram(Weight("vvvv"))))
    assert all(c.kind == "propagating_line" for c in comps) and len(comps) == 4
