import pytest

from arcalg import Weight, principal_block
from arcalg.braden import (
    can_enlarge, can_extend, check_examples, classify, diamonds, enlargement, image_dimension, parent,
    verify_relations, zeta,
)
from arcalg.diagrams import lambda_pairs


@pytest.mark.parametrize("k,parity", [(2, 0), (3, 0), (3, 1), (4, 0), (4, 1)])
def test_relations_hold(k, parity):
    r = verify_relations(k, parity)
    assert r.ok, r.to_json()


def test_relations_k5():
    r = verify_relations(5)
    assert r.ok, {f: v for f, v in r.failures.items() if v}


def test_report_schema():
    data = verify_relations(3).to_json()
    assert data["schema"] == "arcalg.braden-report/1" and data["ok"]


def test_phi_surjective():
    assert image_dimension(4) == 67


def test_diamonds_classified():
    ds = diamonds(principal_block(4, 0))
    assert ds and all(classify(d) for d in ds)


def test_extend_enlarge():
    t = (Weight("vvvv^"), Weight("^^vv^"), Weight("^v^v^"))
    assert not can_extend(t) and can_enlarge(t) and enlargement(t) == 1


def test_zeta_rules():
    lam = Weight("vv^^")
    inner = next(p for p in lambda_pairs(lam) if p.alpha == 2)
    par = parent(inner)
    assert par.kind == "nested" and (par.alpha, par.beta) == (1, 4)
    assert zeta(inner) == 4
    outer = next(p for p in lambda_pairs(lam) if p.alpha == 1)
    assert parent(outer) is None and zeta(outer) is None
