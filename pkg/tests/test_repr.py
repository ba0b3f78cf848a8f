import pytest

from arcalg import Weight, cartan_matrix, decomposition_matrix, principal_block, quiver
from arcalg.repr import (
    cartan_from_basis, cell_action, cell_basis, cell_filtration, cell_radical_layers, projective_dimension,
)
from arcalg.algebra import basis, Element
from arcalg.weights import bruhat_lt, weights_in_block

D4 = principal_block(4, 0)


def test_cartan_two_routes():
    for k in (2, 3, 4, 5):
        for p in (0, 1):
            b = principal_block(k, p)
            assert cartan_matrix(b) == cartan_from_basis(b)
            assert cartan_matrix(b).is_symmetric()


def test_decomposition_unitriangular():
    m = decomposition_matrix(D4)
    ws = list(m.rows)
    for i, r in enumerate(ws):
        assert m[i, i] == 1
        for j in range(i):
            assert m[i, j] == 0


def test_cell_filtration_lambda8():
    got = cell_filtration(Weight("^^^^"))
    assert set(got) == {(Weight("vvvv"), 2), (Weight("^^vv"), 1), (Weight("vv^^"), 1), (Weight("^^^^"), 0)}
    mus = [mu for mu, _ in got]
    for i, a in enumerate(mus):
        for b in mus[i + 1:]:
            assert not bruhat_lt(a, b)
    assert projective_dimension(Weight("^^^^"))(1) == 10


def test_cell_radical_layers_top():
    assert cell_radical_layers(Weight("vvvv")) == [[Weight("vvvv")], [Weight("^^vv")], [Weight("^^^^")]]


def test_cell_action_is_a_module():
    mu = Weight("v^v^")
    vs = basis(D4)
    cm = cell_basis(mu)
    for lam, _ in cm.basis:
        vec = {lam: 1}
        for x in vs[:40]:
            for y in vs[:40]:
                if x.upper != y.lower:
                    continue
                xy = Element.basis_vector(x) * Element.basis_vector(y)
                lhs = cell_action(xy, mu, vec)
                rhs = cell_action(Element.basis_vector(x), mu, cell_action(Element.basis_vector(y), mu, vec))
                assert lhs == rhs


def test_quiver_dot():
    text = quiver(D4).to_dot()
    assert text.count("->") == 20
    assert text.count("[label=\"") - text.count("->") == 8


@pytest.mark.parametrize("k", [3, 5])
def test_quiver_edges_are_lambda_pairs(k):
    q = quiver(principal_block(k, 0))
    for a, b in q.edges:
        assert bruhat_lt(a, b)
