"""Braden's presentation by idempotents ``e``, arrows ``p`` and loops ``t``.

:func:`phi` sends each generator to an element of the diagram algebra and
:func:`verify_relations` evaluates both sides of every defining relation
through it.  Coefficients live in ``Z[1/2]`` (exact fractions).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import BasisVector, Element, idempotent, m_space, multiply, try_basis_vector
from .diagrams import CircleDiagram, LambdaPair, bullet_index, cap_diagram, cup_diagram, lambda_pairs
from .weights import DOWN, UP, Block, Weight, flip_label, principal_block, weight_index, weights_in_block

HALF = Fraction(1, 2)


class BradenError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    """``E(lam)``, ``P(lam, mu)`` or ``T(alpha, lam)``."""

    kind: str
    lam: Weight
    mu: Weight | None = None
    alpha: int = 0

    def __str__(self) -> str:
        if self.kind == "e":
            return f"e({self.lam})"
        if self.kind == "p":
            return f"p({self.lam},{self.mu})"
        return f"t({self.alpha},{self.lam})"


def E(lam: Weight) -> Generator:
    return Generator("e", lam)


def P(lam: Weight, mu: Weight) -> Generator:
    return Generator("p", lam, mu)


def T(alpha: int, lam: Weight) -> Generator:
    return Generator("t", lam, alpha=alpha)


# ---------------------------------------------------------------------------
# adjacency


def relation_pair(lam: Weight, mu: Weight) -> LambdaPair | None:
    """The lambda-pair relating ``lam`` and ``mu`` (a pair of the smaller one)."""
    for lp in lambda_pairs(lam):
        if lp.target == mu:
            return lp
    for lp in lambda_pairs(mu):
        if lp.target == lam:
            return lp
    return None


def adjacent(lam: Weight, mu: Weight) -> bool:
    return relation_pair(lam, mu) is not None


@lru_cache(maxsize=None)
def neighbours(lam: Weight) -> tuple[Weight, ...]:
    out = {lp.target for lp in lambda_pairs(lam)}
    out |= {w for w in weights_in_block(lam.block) if lam in {lp.target for lp in lambda_pairs(w)}}
    return tuple(sorted(out, key=weight_index))


# ---------------------------------------------------------------------------
# images of the generators


def _reverse(v: BasisVector, pos: int) -> BasisVector | None:
    """Flip the orientation of the component through ``pos``; None on a line."""
    for comp in CircleDiagram(v.cup, v.cap).graph().components():
        if any(p == pos for p, _ in comp.vertices):
            if comp.is_line:
                return None
            nu = v.nu.replace({p: flip_label(v.nu.label(p)) for p, _ in comp.vertices})
            return try_basis_vector(v.lower, nu, v.upper)
    raise BradenError(f"position {pos} is not a vertex")


def one(lam: Weight, mu: Weight) -> BasisVector:
    """``lam 1 mu``: the diagram ``(lam, max, mu)`` oriented by the larger weight."""
    lp = relation_pair(lam, mu)
    if lam == mu:
        return BasisVector(lam, lam, lam)
    if lp is None:
        raise BradenError(f"{lam} and {mu} are not adjacent")
    return BasisVector(lam, lp.target, mu)


def x_rel(lam: Weight, mu: Weight) -> BasisVector | None:
    """``lam X mu``: reverse the circle through the cup defining the relation."""
    lp = relation_pair(lam, mu)
    if lp is None:
        raise BradenError(f"{lam} and {mu} are not adjacent")
    return _reverse(one(lam, mu), lp.cup.left)


def x_point(alpha: int, lam: Weight) -> Element:
    """``X_(alpha, lam)``: the ring variable at bullet ``alpha`` of ``(lam, lam, lam)``.

    This is the diagram with the circle through ``alpha`` reversed, times the
    sign of ``alpha`` relative to the circle's rightmost vertex, so that the
    two ends of an undotted cup give opposite elements.  Zero on a line.
    """
    pos = lam.block.bullets[alpha - 1]
    var = m_space(cup_diagram(lam), cap_diagram(lam)).variable(pos)
    if var is None:
        return Element()
    return _elt(_reverse(BasisVector(lam, lam, lam), pos), var[1])


def _elt(v: BasisVector | None, c=1) -> Element:
    return Element() if v is None else Element({v: c})


@lru_cache(maxsize=None)
def phi(g: Generator) -> Element:
    lam = g.lam
    if g.kind == "e":
        return idempotent(lam)
    if g.kind == "p":
        lp = relation_pair(lam, g.mu)
        if lp is None:
            raise BradenError(f"p({lam},{g.mu}) needs adjacent weights")
        sign = -1 if lp.beta % 2 else 1
        return _elt(one(lam, g.mu)) + _elt(x_rel(lam, g.mu), HALF * sign)
    if g.kind == "t":
        k = lam.block.rank
        a = g.alpha
        if 1 <= a <= k:
            return idempotent(lam) + x_point(a, lam)
        if -k <= a <= -1:
            return idempotent(lam) - x_point(-a, lam)
        return idempotent(lam)
    raise BradenError(f"unknown generator kind {g.kind!r}")


def phi_word(*gens: Generator) -> Element:
    """Image of a product of generators, read left to right."""
    out = phi(gens[0])
    for g in gens[1:]:
        out = multiply(out, phi(g))
    return out


# ---------------------------------------------------------------------------
# parents


@dataclass(frozen=True)
class Parent:
    """The parent of a cup: an enclosing cup, a dotted cup or a dotted ray to its right.

    ``beta`` is None for a dotted ray.
    """

    kind: str  # "nested", "dotted-cup" or "dotted-ray"
    alpha: int
    beta: int | None
    left: int
    right: int | None


def parent(pair: LambdaPair) -> Parent | None:
    """Minimal cup enclosing the pair's cup, else the leftmost dotted cup (or dotted ray) to its right."""
    lam = pair.source
    c = pair.cup
    pairs = lambda_pairs(lam)
    enclosing = [q for q in pairs if q.cup.left < c.left and c.right < q.cup.right]
    if enclosing:
        q = min(enclosing, key=lambda q: q.cup.right - q.cup.left)
        return Parent("nested", q.alpha, q.beta, q.cup.left, q.cup.right)
    right = [q for q in pairs if q.cup.dotted and q.cup.left > c.right]
    if right:
        q = min(right, key=lambda q: q.cup.left)
        return Parent("dotted-cup", q.alpha, q.beta, q.cup.left, q.cup.right)
    for r in cup_diagram(lam).rays:
        if r.dotted and r.pos > c.right:
            i = bullet_index(lam.block, r.pos)
            return Parent("dotted-ray", -i, None, r.pos, None)
    return None


def zeta(pair: LambdaPair, rule: str = "verified") -> int | None:
    """Index of the second loop in the relation for ``m``; None if there is no parent.

    ``rule="verified"`` uses the left end of a dotted parent to the right and
    the right end of an enclosing parent; this is the rule under which every
    instance holds.  ``rule="literal"`` evaluates the comparison
    ``alpha < -beta' < beta < -alpha'`` as printed and ignores dotted rays.
    """
    par = parent(pair)
    if par is None:
        return None
    if rule == "literal":
        if par.kind == "dotted-ray":
            return None
        a, b, a1, b1 = pair.alpha, pair.beta, par.alpha, par.beta
        return -a1 if a < -b1 < b < -a1 else b1
    if par.kind == "nested":
        return par.beta
    return -par.alpha


def m_element(lam: Weight, mu: Weight) -> Element:
    """``e_lam + p(lam, mu) p(mu, lam)``."""
    return idempotent(lam) + phi_word(P(lam, mu), P(mu, lam))


# ---------------------------------------------------------------------------
# diamonds


@dataclass(frozen=True)
class Diamond:
    weights: tuple[Weight, Weight, Weight, Weight]

    def __str__(self) -> str:
        return "(" + ", ".join(w.labels for w in self.weights) + ")"


def _cycle_variants(ws):
    out = []
    for r in range(4):
        rot = ws[r:] + ws[:r]
        out += [rot, (rot[0], rot[3], rot[2], rot[1])]
    return out


def canonical(ws) -> tuple:
    return min(_cycle_variants(tuple(ws)), key=lambda t: [weight_index(w) for w in t])


@lru_cache(maxsize=None)
def diamonds(block: Block) -> tuple[Diamond, ...]:
    """All diamonds up to rotation and reflection."""
    seen = set()
    for a in weights_in_block(block):
        for b, d in itertools.combinations(neighbours(a), 2):
            for c in neighbours(b):
                if c != a and c in neighbours(d) and c not in (b, d):
                    seen.add(canonical((a, b, c, d)))
    out = sorted(seen, key=lambda t: [weight_index(w) for w in t])
    return tuple(Diamond(t) for t in out)


def can_extend(triple) -> bool:
    l1, l2, l3 = triple
    return any(w not in (l1, l2, l3) and adjacent(w, l1) for w in neighbours(l3))


def _padded(w: Weight, left: int, right: int) -> Weight:
    return w.pad(left=DOWN * left, right=UP * right)


def enlargement(triple, bound: int = 2) -> int | None:
    """Fewest ``^``'s appended on the right that make the triple extendable, up to ``bound``.

    Prepending ``v``'s is not tried: it moves every bullet index and changes
    which cups carry dots, so it does not preserve the local picture.
    """
    if can_extend(triple):
        return None
    for right in range(1, bound + 1):
        big = tuple(_padded(w, 0, right) for w in triple)
        if adjacent(big[0], big[1]) and adjacent(big[1], big[2]) and can_extend(big):
            return right
    return None


def can_enlarge(triple, bound: int = 2) -> bool:
    return enlargement(triple, bound) is not None


def triples(block: Block):
    for l2 in weights_in_block(block):
        for l1, l3 in itertools.permutations(neighbours(l2), 2):
            yield l1, l2, l3


# Local shapes of diamonds as undecorated matchings (top, left, bottom, right),
# each a cyclic sequence of cup diagrams on 1..N.
DIAMOND_FAMILIES: tuple[tuple[tuple[tuple[int, int], ...], ...], ...] = (
    (((1, 2), (3, 4), (5, 6)), ((1, 4), (2, 3), (5, 6)), ((1, 6), (2, 3), (4, 5)), ((1, 6), (2, 5), (3, 4))),
    (((1, 2), (3, 4), (5, 6)), ((1, 2), (3, 6), (4, 5)), ((1, 6), (2, 3), (4, 5)), ((1, 6), (2, 5), (3, 4))),
    (((1, 2), (3, 4), (5, 6)), ((1, 4), (2, 3), (5, 6)), ((1, 6), (2, 3), (4, 5)), ((1, 2), (3, 6), (4, 5))),
    (((1, 2), (3, 4), (5, 6), (7, 8)), ((1, 4), (2, 3), (5, 6), (7, 8)),
     ((1, 4), (2, 3), (5, 8), (6, 7)), ((1, 2), (3, 4), (5, 8), (6, 7))),
    (((1, 2), (3, 4), (5, 6), (7, 8)), ((1, 8), (2, 7), (3, 4), (5, 6)),
     ((1, 8), (2, 7), (3, 6), (4, 5)), ((1, 2), (3, 6), (4, 5), (7, 8))),
    (((1, 2), (3, 6), (4, 5), (7, 8)), ((1, 6), (2, 3), (4, 5), (7, 8)),
     ((1, 8), (2, 3), (4, 5), (6, 7)), ((1, 2), (3, 8), (4, 5), (6, 7))),
    (((1, 2), (3, 4), (5, 8), (6, 7)), ((1, 8), (2, 5), (3, 4), (6, 7)),
     ((1, 8), (2, 3), (4, 5), (6, 7)), ((1, 2), (3, 8), (4, 5), (6, 7))),
    (((1, 4), (2, 3), (5, 6), (7, 8)), ((1, 8), (2, 3), (4, 7), (5, 6)),
     ((1, 8), (2, 3), (4, 5), (6, 7)), ((1, 6), (2, 3), (4, 5), (7, 8))),
    (((1, 2), (3, 8), (4, 5), (6, 7)), ((1, 8), (2, 3), (4, 5), (6, 7)),
     ((1, 8), (2, 3), (4, 7), (5, 6)), ((1, 2), (3, 8), (4, 7), (5, 6))),
    (((1, 6), (2, 3), (4, 5), (7, 8)), ((1, 8), (2, 3), (4, 5), (6, 7)),
     ((1, 8), (2, 5), (3, 4), (6, 7)), ((1, 6), (2, 5), (3, 4), (7, 8))),
)


def _shape(matchings) -> tuple:
    """Drop arcs and rays shared by all four diagrams, renumber, canonicalise the cycle."""
    common = set(matchings[0]).intersection(*matchings[1:])
    rest = [set(m) - common for m in matchings]
    pts = sorted({p for m in rest for arc in m for p in arc if p is not None})
    idx = {p: i + 1 for i, p in enumerate(pts)}
    ren = [frozenset(tuple(idx.get(p) for p in arc) for arc in m) for m in rest]
    key = lambda arc: (arc[0], arc[1] or 0)  # noqa: E731
    return min(_cycle_variants(tuple(ren)), key=lambda t: [sorted(map(key, m)) for m in t])


def _restrict(family, lo: int, hi: int):
    out = []
    for m in family:
        arcs = []
        for a, b in m:
            ina, inb = lo <= a <= hi, lo <= b <= hi
            if ina and inb:
                arcs.append((a, b))
            elif ina:
                arcs.append((a, None))
            elif inb:
                arcs.append((b, None))
        out.append(arcs)
    return out


@lru_cache(maxsize=None)
def _known_shapes() -> frozenset:
    shapes = set()
    for fam in DIAMOND_FAMILIES:
        n = 2 * len(fam[0])
        for lo in range(1, n + 1):
            for hi in range(lo, n + 1):
                shapes.add(_shape(_restrict(fam, lo, hi)))
    return frozenset(shapes)


def _matching(w: Weight) -> list:
    c = cup_diagram(w)
    return [(x.left, x.right) for x in c.cups] + [(r.pos, None) for r in c.rays]


def diamond_shape(d: Diamond) -> tuple:
    return _shape([_matching(w) for w in d.weights])


def classify(d: Diamond) -> bool:
    """True iff the diamond matches a tabulated local shape, possibly cut by rays."""
    return diamond_shape(d) in _known_shapes()


def bruhat_extremes(d: Diamond) -> bool:
    """A diamond has a unique smallest and a unique largest weight."""
    from .weights import bruhat_leq

    ws = d.weights
    tops = [w for w in ws if all(bruhat_leq(v, w) for v in ws)]
    bots = [w for w in ws if all(bruhat_leq(w, v) for v in ws)]
    return len(tops) == 1 and len(bots) == 1


# ---------------------------------------------------------------------------
# verification


@dataclass
class RelationReport:
    k: int
    parity: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, list[str]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def record(self, family: str, ok: bool, detail: str) -> None:
        self.checked[family] = self.checked.get(family, 0) + 1
        self.failures.setdefault(family, [])
        if not ok:
            self.failures[family].append(detail)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def to_json(self) -> dict:
        return {
            "schema": "arcalg.braden-report/1",
            "k": self.k,
            "parity": self.parity,
            "ok": self.ok,
            "relations": {f: {"checked": self.checked[f], "failures": self.failures[f]}
                          for f in sorted(self.checked)},
            "notes": self.notes,
        }


def _is(x: Element, y: Element) -> bool:
    return (x - y).is_zero()


def verify_relations(k: int, parity: int = 0, enlarge_bound: int = 2) -> RelationReport:
    block = principal_block(k, parity)
    ws = weights_in_block(block)
    rep = RelationReport(k, parity)
    e = {w: phi(E(w)) for w in ws}
    alphas = [a for a in range(-k - 1, k + 2) if a != 0]
    literal_misses = 0
    edges = [(a, b) for a in ws for b in neighbours(a)]

    # R1, R2
    for a, b in itertools.product(ws, ws):
        want = e[a] if a == b else Element()
        rep.record("R1", _is(multiply(e[a], e[b]), want), f"e({a})e({b})")
    total = Element()
    for w in ws:
        total = total + e[w]
    rep.record("R2", all(_is(multiply(total, phi(g)), phi(g)) and _is(multiply(phi(g), total), phi(g))
                         for g in [P(a, b) for a, b in edges] + [E(w) for w in ws]), "sum e = 1")

    # R3, R4
    for a, b in edges:
        p = phi(P(a, b))
        for v in ws:
            ok = _is(multiply(e[v], p), p if v == a else Element())
            ok = ok and _is(multiply(p, e[v]), p if v == b else Element())
            rep.record("R3", ok, f"e({v}) p({a},{b})")
    for lam in ws:
        for al in alphas:
            t = phi(T(al, lam))
            for v in ws:
                want = t if v == lam else Element()
                rep.record("R4", _is(multiply(e[v], t), want) and _is(multiply(t, e[v]), want),
                           f"e({v}) t({al},{lam})")

    # R5, R6, R7
    for lam in ws:
        for a1, a2 in itertools.combinations(alphas, 2):
            rep.record("R5", _is(phi_word(T(a1, lam), T(a2, lam)), phi_word(T(a2, lam), T(a1, lam))),
                       f"t({a1},{lam}) t({a2},{lam})")
        for al in alphas:
            rep.record("R7(i)", _is(phi_word(T(al, lam), T(-al, lam)), e[lam]), f"t({al},{lam})")
            if abs(al) > k:
                rep.record("R7(ii)", _is(phi(T(al, lam)), e[lam]), f"t({al},{lam})")
        for lp in lambda_pairs(lam):
            rep.record("R7(iii)", _is(phi_word(T(lp.alpha, lam), T(lp.beta, lam)), e[lam]),
                       f"t({lp.alpha},{lam}) t({lp.beta},{lam})")
    for a, b in edges:
        for al in alphas:
            rep.record("R6", _is(phi_word(P(a, b), T(al, b)), phi_word(T(al, a), P(a, b))),
                       f"p({a},{b}) t({al})")

    # R8, with the literal reading of zeta tallied separately
    for lam in ws:
        for lp in lambda_pairs(lam):
            for rule, family in (("verified", "R8"), ("literal", "R8-literal-zeta")):
                z = zeta(lp, rule)
                ok = all(_m_relation(lp, w, other, z) for w, other in ((lp.target, lam), (lam, lp.target)))
                if family == "R8":
                    rep.record(family, ok, f"pair ({lp.alpha},{lp.beta}) of {lam} zeta={z}")
                elif not ok:
                    literal_misses += 1

    # R9 (i): every diamond, read in every rotation and reflection
    for d in diamonds(block):
        rep.record("diamond-shape", classify(d), f"{d} shape {diamond_shape(d)}")
        rep.record("diamond-extremes", bruhat_extremes(d), str(d))
        for l1, l2, l3, l4 in _cycle_variants(d.weights):
            rep.record("R9(i)", _is(phi_word(P(l3, l2), P(l2, l1)), phi_word(P(l3, l4), P(l4, l1))),
                       f"({l1},{l2},{l3},{l4})")

    # R9 (ii), (iii)
    for tri in triples(block):
        l1, l2, l3 = tri
        zero = lambda: (phi_word(P(l3, l2), P(l2, l1)).is_zero()  # noqa: E731
                        and phi_word(P(l1, l2), P(l2, l3)).is_zero())
        if can_extend(tri):
            continue
        if can_enlarge(tri, enlarge_bound):
            rep.record("R9(ii)", zero(), f"({l1},{l2},{l3})")
        first = relation_pair(l1, l2)
        second = relation_pair(l2, l3)
        if (first.source == l1 and second.source == l2 and first.alpha < 0
                and (second.alpha, second.beta) not in {(q.alpha, q.beta) for q in lambda_pairs(l1)}):
            rep.record("R9(iii)", zero(), f"({l1},{l2},{l3})")

    rep.notes.append(f"printed zeta comparison fails on {literal_misses} of {rep.checked.get('R8', 0)} pairs")
    if k == 4 and parity == 0:
        check_examples(rep)
    return rep


def _m_relation(lp: LambdaPair, w: Weight, other: Weight, z: int | None) -> bool:
    """``m(w, other)`` against ``t_alpha t_zeta`` at ``w``, inverted when ``beta`` is odd."""
    m = m_element(w, other)
    tt = phi(T(lp.alpha, w)) if z is None else phi_word(T(lp.alpha, w), T(z, w))
    if lp.beta % 2 == 0:
        return _is(m, tt)
    e = idempotent(w)
    return _is(multiply(m, tt), e) and _is(multiply(tt, m), e)


# ---------------------------------------------------------------------------
# worked example in the four-point block


def example_vectors() -> dict[str, BasisVector]:
    w = Weight.parse
    l1, l2, l3 = w("^^^^"), w("vv^^"), w("v^v^")
    m1, m2, m3, m4 = w("^^^^"), w("vv^^"), w("^v^v"), w("^^vv")
    return {
        "A": one(l1, l2),
        "B": one(l2, l3),
        "C": one(m2, m3),
        "D": one(m1, m4),
        "E": one(m4, m3),
        "tau": BasisVector(m1, w("^^vv"), m3),
    }


def check_examples(rep: RelationReport) -> dict[str, Element]:
    v = example_vectors()
    el = {name: Element({x: 1}) for name, x in v.items()}
    ac = multiply(el["A"], el["C"])
    de = multiply(el["D"], el["E"])
    ca_rev = multiply(_star(el["C"]), _star(el["A"]))
    ed_rev = multiply(_star(el["E"]), _star(el["D"]))
    results = {
        "BA": multiply(el["A"], el["B"]),
        "AB": multiply(_star(el["B"]), _star(el["A"])),
        "CA": ac,
        "ED": de,
        "AC": ca_rev,
        "DE": ed_rev,
    }
    rep.record("example", results["BA"].is_zero() and results["AB"].is_zero(), "BA = 0 = AB")
    rep.record("example", _is(ac, de) and not ac.is_zero(), f"CA = ED: {ac} vs {de}")
    rep.record("example", _is(ca_rev, ed_rev) and not ca_rev.is_zero(), f"AC = DE: {ca_rev} vs {ed_rev}")
    tau = v["tau"]
    rep.notes.append(f"CA = {ac}, expected a multiple of {tau}")
    rep.notes.append(f"AC = {ca_rev}")
    return results


def _star(x: Element) -> Element:
    from .algebra import star

    return star(x)


# ---------------------------------------------------------------------------
# surjectivity


def _reduce(vec: dict, echelon: dict) -> dict:
    vec = dict(vec)
    for pivot in sorted(echelon, key=lambda v: v.sort_key()):
        c = vec.get(pivot)
        if c:
            for b, cb in echelon[pivot].items():
                vec[b] = vec.get(b, 0) - c * cb
            vec = {b: x for b, x in vec.items() if x}
    return vec


def _insert(vec: dict, echelon: dict) -> bool:
    vec = _reduce(vec, echelon)
    if not vec:
        return False
    pivot = min(vec, key=lambda v: v.sort_key())
    inv = Fraction(1) / vec[pivot]
    row = {b: x * inv for b, x in vec.items()}
    for p, r in echelon.items():
        c = r.get(pivot)
        if c:
            for b, cb in row.items():
                r[b] = r.get(b, 0) - c * cb
            echelon[p] = {b: x for b, x in r.items() if x}
    echelon[pivot] = row
    return True


def image_dimension(k: int, parity: int = 0) -> int:
    """Dimension of the subalgebra generated by the images of all generators."""
    block = principal_block(k, parity)
    ws = weights_in_block(block)
    gens = [phi(E(w)) for w in ws]
    gens += [phi(P(a, b)) for a in ws for b in neighbours(a)]
    gens += [phi(T(al, w)) for w in ws for al in range(-k, k + 1) if al]
    echelon: dict = {}
    frontier = [g for g in gens if _insert(dict(g.terms), echelon)]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = multiply(x, g)
                if _insert(dict(y.terms), echelon):
                    new.append(y)
        frontier = new
    return len(echelon)
