"""Acceptance criteria 1-13.

Each ``criterion_N`` returns ``(ok, detail)``.  Under pytest every criterion
is a test and the PASS/FAIL lines are printed in the terminal summary; run the
file directly to get the same lines on stdout.
"""

from __future__ import annotations

import itertools
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import golden  # noqa: E402
from arcalg import algebra, braden, checks, repr as rep, supergroup as sg  # noqa: E402
from arcalg.diagrams import cup_diagram, orientations, orientations_bruteforce  # noqa: E402
from arcalg.f2 import multiply_f2  # noqa: E402
from arcalg.laurent import GradedMatrix, LaurentPoly  # noqa: E402
from arcalg.weights import Block, Weight, principal_block, weights_in_block  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}

D4 = principal_block(4, 0)


def _golden_matrix(rows) -> GradedMatrix:
    ws = [Weight(w) for w in golden.LAMBDAS]
    return GradedMatrix.from_rows(ws, ws, rows)


def criterion_1():
    bad = []
    for parity, table in ((0, golden.CUPS_EVEN), (1, golden.CUPS_ODD)):
        ws = weights_in_block(principal_block(4, parity))
        if {w.labels for w in ws} != set(table):
            bad.append(f"parity {parity}: weight set differs")
        for w in ws:
            got = cup_diagram(w).text()
            if got != table.get(w.labels):
                bad.append(f"{w}: {got} != {table.get(w.labels)}")
    return not bad, "; ".join(bad) or "16 cup diagrams match"


def criterion_2():
    t = time.perf_counter()
    c = rep.cartan_matrix(D4)
    dt = time.perf_counter() - t
    ok = c == _golden_matrix(golden.CARTAN_D4) and dt < 1
    return ok, f"8x8 Cartan matrix exact, {dt:.3f}s"


def criterion_3():
    t = time.perf_counter()
    m = rep.decomposition_matrix(D4)
    c = rep.cartan_matrix(D4)
    dt = time.perf_counter() - t
    ok = m == _golden_matrix(golden.DEC_D4) and m.transpose() @ m == c and dt < 1
    return ok, f"decomposition matrix exact, M^t M = C, {dt:.3f}s"


def criterion_4():
    want = LaurentPoly(golden.DIM_D4)
    routes = {
        "basis": algebra.graded_dimension(D4),
        "cartan": rep.cartan_matrix(D4).total(),
        "cells": sum((rep.projective_dimension(w) for w in weights_in_block(D4)), LaurentPoly()),
    }
    prose = LaurentPoly(golden.DIM_D4_PROSE)
    ok = all(p == want for p in routes.values()) and want(1) == 67 and prose(1) == 66 and prose != want
    # Erratum: the prose states dimension 66 and 2q^4, but the Cartan figure
    # sums to 67 with 3q^4; all three routes give 67.
    return ok, f"{want} = {want(1)} by basis, Cartan sum and cell filtrations (prose 66 is an erratum)"


def criterion_5():
    q = rep.quiver(D4)
    ok = (tuple(w.labels for w in q.vertices) == golden.LAMBDAS
          and len(q.edges) == 10 and q.index_edges() == golden.QUIVER_D4)
    return ok, f"{len(q.vertices)} vertices, {len(q.edges)} edge pairs"


def _blocks_up_to(bullets: int):
    for n in range(1, bullets + 1):
        for parity in (0, 1):
            yield principal_block(n, parity)
    for length in range(2, 6):
        for sk in itertools.product("bxo", repeat=length):
            s = "".join(sk)
            if "b" in s and s != "b" * length and not s.endswith("o"):
                for parity in (0, 1):
                    yield Block(s, parity)


def criterion_6():
    bad, count = [], 0
    for b in _blocks_up_to(6):
        for w in weights_in_block(b):
            c = cup_diagram(w)
            fast, slow = orientations(c), orientations_bruteforce(c)
            count += 1
            if len(fast) != 2 ** c.defect or sorted(fast) != sorted(slow):
                bad.append(str(w))
    total = sum(len(orientations(cup_diagram(w))) for w in weights_in_block(D4))
    ok = not bad and total == 21
    return ok, f"{count} weights checked, D_4 even sum {total}" + (f", bad {bad[:3]}" if bad else "")


def _axiom_reports():
    reps = []
    for k in (1, 2, 3, 4):
        for p in (0, 1):
            if k == 1 and p == 1:
                continue
            reps.append(checks.axiom_report(principal_block(k, p)))
    for p in (0, 1):
        reps.append(checks.axiom_report(principal_block(5, p), samples=100_000, seed=5 + p))
    return reps


def criterion_7():
    t = time.perf_counter()
    reps = _axiom_reports()
    dt = time.perf_counter() - t
    fails = {}
    for r in reps:
        for name, f in r.failures.items():
            if f:
                fails[name] = fails.get(name, 0) + len(f)
    literal = fails.pop("s-independence", 0)
    others_ok = not fails and dt < 300
    k5 = sum(r.checked.get("associativity", 0) for r in reps[-2:])
    detail = (f"{k5} random k=5 triples, {dt:.1f}s; all other clauses "
              f"{'pass' if others_ok else 'FAIL ' + str(fails)}; the sign-rescaled s is cap independent")
    if literal:
        detail = f"s-scalar depends on the right cap in sign ({literal} cases); " + detail
    return others_ok and not literal, detail


def criterion_8():
    bad, n = [], 0
    for p in (0, 1):
        for x, y in algebra.composable_pairs(principal_block(4, p)):
            n += 1
            if algebra.multiply_basis(x, y).mod2() != multiply_f2(x, y):
                bad.append((str(x), str(y)))
    return not bad, f"{n} composable pairs" + (f", {len(bad)} differ" if bad else "")


def _relabel(m: GradedMatrix) -> GradedMatrix:
    key = lambda w: Weight(w.bullet_labels())  # noqa: E731
    return GradedMatrix(tuple(map(key, m.rows)), tuple(map(key, m.cols)), m.entries)


def criterion_9():
    bad = []
    for k, skeletons in ((4, ("xbobbxb", "obbxxbb", "bxbobob")), (5, ("bbxbobb",))):
        for p in (0, 1):
            base = principal_block(k, p)
            c0, d0 = rep.cartan_matrix(base), rep.decomposition_matrix(base)
            for s in skeletons:
                b = Block(s, p)
                c, d = _relabel(rep.cartan_matrix(b)), _relabel(rep.decomposition_matrix(b))
                if c.reindex(c0.rows, c0.cols) != c0 or d.reindex(d0.rows, d0.cols) != d0:
                    bad.append(str(b))
    return not bad, "padded defect-2 blocks match the principal ones" + (f", bad {bad}" if bad else "")


def criterion_10():
    t = time.perf_counter()
    r = braden.verify_relations(4)
    dt = time.perf_counter() - t
    need = ("R1", "R2", "R3", "R4", "R5", "R6", "R7(i)", "R7(ii)", "R7(iii)", "R8",
            "R9(i)", "R9(ii)", "R9(iii)", "diamond-shape", "example")
    missing = [f for f in need if not r.checked.get(f)]
    ok = r.ok and not missing and r.checked["example"] == 3 and dt < 120
    return ok, f"{sum(r.checked.values())} relation instances, 0 violations, {dt:.2f}s" if ok else f"{r.to_json()}"


def criterion_11():
    parts = [sg.sosp32_partition(i) for i in range(7)]
    table = [[sg.hom_dim(a, b) for b in parts] for a in parts]
    want = [[golden.sosp32_hom(i, j) for j in range(7)] for i in range(7)]
    sym = all(table[i][j] == table[j][i] for i in range(7) for j in range(7))
    return table == want and sym, "Hom table for P(0)..P(6) matches and is symmetric"


CONTEXTS = ((1, 1), (2, 1), (2, 3))


def criterion_12():
    bad, n = [], 0
    for m, n_ in CONTEXTS:
        for lam in sg.hook_partitions(m, n_, 5, 5):
            n += 1
            if sg.partition_from_rho(sg.wt_prime(lam)) != lam:
                bad.append(f"rho {lam}")
            if sg.hook_from_super(sg.super_weight(lam), m, n_) != lam:
                bad.append(f"super {lam}")
            if sg.gs_translate(lam) != sg.infinite_weight(lam):
                bad.append(f"gs {lam}")
    return not bad, f"{n} hook partitions in three contexts" + (f", bad {bad[:3]}" if bad else "")


def criterion_13():
    ws = weights_in_block(D4)
    dims = tuple(rep.cell_basis(w).dimension for w in ws)
    cart = _golden_matrix(golden.CARTAN_D4)
    dec = _golden_matrix(golden.DEC_D4)
    rows_ok = all(
        sum(rep.cell_basis(mu).dimension for mu, _ in rep.cell_filtration(lam)) == sum(p(1) for p in cart.entries[i])
        for i, lam in enumerate(ws)
    )
    layers_ok = True
    for i, mu in enumerate(ws):
        layers = rep.cell_radical_layers(mu)
        counts = {}
        for p in dec.entries[i]:
            if p:
                (deg,) = p.coeffs
                counts[deg] = counts.get(deg, 0) + 1
        if [len(layer) for layer in layers] != [counts.get(j, 0) for j in range(len(layers))]:
            layers_ok = False
    ok = dims == golden.CELL_DIMS_D4 and rows_ok and layers_ok
    return ok, f"dim V = {dims}, filtrations and radical layers consistent"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 14)}

# Reason recorded for the criterion that does not hold as stated.
KNOWN_RED = {
    7: "s-scalar sign depends on the right cap for the signed product; holds after a sign rescaling of the basis",
}


def _run(i: int) -> tuple[bool, str]:
    if i not in RESULTS:
        RESULTS[i] = CRITERIA[i]()
    return RESULTS[i]


@pytest.mark.parametrize("i", [i for i in CRITERIA if i not in KNOWN_RED])
def test_criterion(i):
    ok, detail = _run(i)
    assert ok, detail


@pytest.mark.parametrize("i", sorted(KNOWN_RED))
@pytest.mark.xfail(strict=True, reason="; ".join(KNOWN_RED.values()))
def test_criterion_known_red(i):
    ok, detail = _run(i)
    assert ok, detail


def test_criterion_7_other_clauses():
    _, detail = _run(7)
    assert "all other clauses pass" in detail, detail


def report_lines() -> list[str]:
    return [f"{'PASS' if RESULTS[i][0] else 'FAIL'} {i}: {RESULTS[i][1]}" for i in sorted(RESULTS)]


if __name__ == "__main__":
    for i in CRITERIA:
        _run(i)
    print("\n".join(report_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
