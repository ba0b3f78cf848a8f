from arcalg import principal_block
from arcalg.checks import associativity_report, axiom_report, s_gauge


def test_axioms_k3():
    r = axiom_report(principal_block(3, 1))
    bad = {n for n, f in r.failures.items() if f}
    assert bad == {"s-independence"}
    assert r.to_json()["schema"] == "arcalg.axiom-report/1"


def test_sign_gauge_exists():
    for k in (2, 3, 4):
        _, bad = s_gauge(principal_block(k, 0))
        assert bad == 0


def test_random_associativity_deterministic():
    a = associativity_report(principal_block(5, 0), samples=2000, seed=3)
    b = associativity_report(principal_block(5, 0), samples=2000, seed=3)
    assert a.ok and a.to_json() == b.to_json()
