from hypothesis import given, strategies as st

from arcalg.laurent import GradedMatrix, LaurentPoly, Q

polys = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(polys)
def test_parse_round_trip(a):
    assert LaurentPoly.parse(str(a)) == a


def test_format():
    assert str(1 + 2 * Q * Q + Q * Q * Q * Q) == "1+2q^2+q^4"
    assert str(LaurentPoly()) == "0"
    assert LaurentPoly.parse("q^-1") == LaurentPoly({-1: 1})


def test_matrix_ops():
    m = GradedMatrix.from_rows(["a", "b"], ["a", "b"], [["1", "q"], ["0", "1"]])
    c = m.transpose() @ m
    assert c.entries[1][1] == 1 + Q * Q and c.is_symmetric()
    assert c.evaluate(1).tolist() == [[1.0, 1.0], [1.0, 2.0]]
    assert m.to_csv().splitlines()[0] == ",a,b"
