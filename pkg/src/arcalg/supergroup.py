"""Weight combinatorics for the orthosymplectic supergroups SOSP(2m+1|2n).

Dominant weights are indexed by ``(n,m)``-hook partitions (``λ_{n+1} <= m``).
A partition gives

* ρ-shifted coordinates ``a_1..a_m``, ``b_1..b_n`` (:func:`wt_prime`),
* the sequence ``S_i = -δ/2 + i - λᵗ_i`` with ``δ = 2m - 2n + 1``
  (:func:`s_sequence`),
* an infinite weight ``w(λ)`` on the vertices ``1/2, 3/2, ...`` with an
  ``^`` tail (:func:`infinite_weight`), and
* the super weight ``λ°`` with a ``v`` tail (:func:`super_weight`), which is
  an ordinary weight once truncated, so the arc algebra applies to it.

Vertex ``i`` (1-based, as in :mod:`arcalg.weights`) sits at ``(2i-1)/2``;
the odd integer ``2i-1`` is the doubled position.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import BasisVector, multiply_basis
from .diagrams import (
    BOTTOM_BOTTOM,
    CIRCLE,
    PROPAGATING,
    TOP_TOP,
    CircleDiagram,
    Component,
    cap_diagram,
    components,
    cup_diagram,
    orientations_of_circle,
)
from .weights import CROSS, DOWN, NOUGHT, UP, Weight

HALF = Fraction(1, 2)


class SuperError(ValueError):
    pass


def position(i: int) -> Fraction:
    """The half-integer vertex carried by index ``i``."""
    return Fraction(2 * i - 1, 2)


def index_of(p: Fraction) -> int:
    """Inverse of :func:`position`; ``p`` must be a positive half-integer."""
    d = 2 * Fraction(p)
    if d.denominator != 1 or d.numerator % 2 == 0 or d < 1:
        raise SuperError(f"{p} is not a positive half-integer")
    return (d.numerator + 1) // 2


def _check_context(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise SuperError(f"need m, n >= 1, got m={m}, n={n}")


# partitions


@dataclass(frozen=True, order=True)
class HookPartition:
    """A partition with ``λ_{n+1} <= m``; trailing zeros are dropped."""

    parts: tuple[int, ...]
    m: int
    n: int

    def __post_init__(self) -> None:
        _check_context(self.m, self.n)
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts) or any(x < y for x, y in zip(parts, parts[1:])):
            raise SuperError(f"{parts} is not a partition")
        parts = tuple(x for x in parts if x)
        object.__setattr__(self, "parts", parts)
        if len(parts) > self.n and parts[self.n] > self.m:
            raise SuperError(f"{parts} is not an ({self.n},{self.m})-hook partition")

    @classmethod
    def parse(cls, text: str, m: int, n: int) -> "HookPartition":
        text = text.strip()
        if text in ("", "0", "-", "()"):
            return cls((), m, n)
        try:
            return cls(tuple(int(t) for t in text.strip("()").split(",") if t.strip()), m, n)
        except ValueError as exc:
            raise SuperError(f"bad partition {text!r}: {exc}") from None

    def row(self, i: int) -> int:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def column(self, j: int) -> int:
        return sum(1 for x in self.parts if x >= j)

    @property
    def transpose(self) -> tuple[int, ...]:
        return tuple(self.column(j) for j in range(1, self.row(1) + 1))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def addable(self) -> list["HookPartition"]:
        """Partitions one box larger that are still hook partitions."""
        out = []
        rows = list(self.parts) + [0]
        for i, r in enumerate(rows):
            if i == 0 or rows[i - 1] > r:
                new = rows[:]
                new[i] += 1
                try:
                    out.append(HookPartition(tuple(new), self.m, self.n))
                except SuperError:
                    pass
        return out

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) or "0"


def hook_partitions(m: int, n: int, rows: int, cols: int) -> Iterator[HookPartition]:
    """All hook partitions fitting in a ``rows x cols`` box."""
    def gen(k: int, cap: int):
        if k == 0:
            yield ()
            return
        for first in range(cap, -1, -1):
            for rest in gen(k - 1, first):
                yield (first,) + rest

    for parts in gen(rows, cols):
        try:
            yield HookPartition(parts, m, n)
        except SuperError:
            continue


# rho-shifted coordinates


@dataclass(frozen=True)
class RhoData:
    """``λ + ρ = Σ a_j ε_j + Σ b_i δ_i`` for SOSP(2m+1|2n)."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.b)

    @property
    def delta(self) -> int:
        return 2 * self.m - 2 * self.n + 1

    @property
    def tail(self) -> int:
        """Number of ``a_j`` equal to ``-1/2``; this is the d-degree."""
        return sum(1 for x in self.a if x == -HALF)

    def is_dominant(self) -> bool:
        a, b, l = self.a, self.b, self.tail
        if any(x % 1 != HALF for x in a + b):
            return False
        head_a, tail_a = a[: self.m - l], a[self.m - l:]
        if any(x != -HALF for x in tail_a) or any(x < HALF for x in head_a):
            return False
        if any(x <= y for x, y in zip(head_a, head_a[1:])):
            return False
        if l == 0:
            return all(x >= HALF for x in b) and all(x > y for x, y in zip(b, b[1:]))
        if l > self.n:
            return False
        head_b, tail_b = b[: self.n - l], b[self.n - l:]
        if any(x != HALF for x in tail_b) or any(x < HALF for x in head_b):
            return False
        return all(x > y for x, y in zip(head_b, head_b[1:]))

    def to_json(self) -> dict:
        return {"a": [str(x) for x in self.a], "b": [str(x) for x in self.b]}


def wt_prime(lam: HookPartition) -> RhoData:
    m, n = lam.m, lam.n
    b = tuple(max(lam.row(i) - m + n - i + HALF, HALF) for i in range(1, n + 1))
    a = tuple(max(lam.column(j) - n + m - j + HALF, -HALF) for j in range(1, m + 1))
    out = RhoData(a, b)
    assert out.is_dominant(), (lam, out)
    return out


def partition_from_rho(rho: RhoData) -> HookPartition:
    """Inverse of :func:`wt_prime`.

    Rows with ``b_i > 1/2`` and columns with ``a_j > -1/2`` are read off
    directly; a box can never lie in a row and a column that are both at
    their minimum, so the remaining rows and columns are counted from the
    known ones.
    """
    if not rho.is_dominant():
        raise SuperError(f"{rho.to_json()} is not dominant")
    m, n = rho.m, rho.n
    rows = {i: int(x + m - n + i - HALF) for i, x in enumerate(rho.b, 1) if x > HALF}
    cols = {j: int(x + n - m + j - HALF) for j, x in enumerate(rho.a, 1) if x > -HALF}
    depth = max(list(cols.values()) + [n])
    parts = []
    for i in range(1, depth + 1):
        parts.append(rows[i] if i in rows else sum(1 for c in cols.values() if c >= i))
    try:
        lam = HookPartition(tuple(parts), m, n)
    except SuperError as exc:
        raise SuperError(f"{rho.to_json()} does not come from a hook partition: {exc}") from None
    if wt_prime(lam) != rho:
        raise SuperError(f"{rho.to_json()} does not come from a hook partition")
    return lam


def dominant_weights(m: int, n: int, bound: int) -> Iterator[RhoData]:
    """All dominant ρ-shifted weights with coordinates below ``bound``."""
    vals = [Fraction(2 * k + 1, 2) for k in range(-1, bound)]
    for a in itertools.product(vals, repeat=m):
        for b in itertools.product([v for v in vals if v > 0], repeat=n):
            rho = RhoData(tuple(a), tuple(b))
            if rho.is_dominant():
                yield rho


def diagonal_boxes(lam: HookPartition, shift: int = 0) -> int:
    """Boxes ``(i, j)`` of the diagram with ``j - i == shift``."""
    return sum(1 for i in range(1, len(lam.parts) + 1) if i + shift >= 1 and lam.row(i) >= i + shift)


def d_degree(lam: HookPartition) -> int:
    """``min(m, n)`` minus the boxes on the diagonal shifted by ``m - n``."""
    return min(lam.m, lam.n) - diagonal_boxes(lam, lam.m - lam.n)


def d_degree_from_rho(lam: HookPartition) -> int:
    return wt_prime(lam).tail


# infinite weights


@dataclass(frozen=True)
class SuperWeight:
    """Labels on ``1/2, 3/2, ...``: a finite prefix, then ``tail`` forever."""

    prefix: str
    tail: str

    def __post_init__(self) -> None:
        if self.tail not in (UP, DOWN):
            raise SuperError(f"tail must be {UP!r} or {DOWN!r}")
        for i, ch in enumerate(self.prefix, 1):
            if ch not in (UP, DOWN, CROSS, NOUGHT):
                raise SuperError(f"bad label {ch!r} at vertex {position(i)}")
        object.__setattr__(self, "prefix", self.prefix.rstrip(self.tail))

    @classmethod
    def parse(cls, text: str) -> "SuperWeight":
        """``"^^^|v"`` is the prefix ``^^^`` followed by a ``v`` tail."""
        body, sep, tail = text.strip().partition("|")
        if not sep:
            raise SuperError(f"missing '|tail' in {text!r}")
        return cls(body, tail)

    def __str__(self) -> str:
        return f"{self.prefix}|{self.tail}"

    def label(self, i: int) -> str:
        return self.prefix[i - 1] if i <= len(self.prefix) else self.tail

    def truncate(self, length: int) -> Weight:
        if length < len(self.prefix):
            raise SuperError(f"truncation {length} cuts into the prefix of {self}")
        return Weight(self.prefix + self.tail * (length - len(self.prefix)))

    def count(self, label: str) -> int:
        return self.prefix.count(label)

    @property
    def skeleton(self) -> str:
        return "".join(ch if ch in (CROSS, NOUGHT) else "b" for ch in self.prefix).rstrip("b")

    def cups(self):
        """Cup diagram of a ``v``-tailed weight on its prefix (the rest are rays)."""
        if self.tail != DOWN:
            raise SuperError("only v-tailed weights have finitely many cups")
        return cup_diagram(self.truncate(len(self.prefix)))

    @property
    def defect(self) -> int:
        return self.cups().defect

    def dot_count(self) -> int:
        c = self.cups()
        return sum(x.dotted for x in c.cups) + sum(r.dotted for r in c.rays)

    def is_super_weight_diagram(self) -> bool:
        return self.tail == DOWN and self.dot_count() % 2 == 0

    def to_json(self) -> dict:
        return {"prefix": self.prefix, "tail": self.tail}


def s_sequence(lam: HookPartition, delta: int | None = None, length: int | None = None) -> list[Fraction]:
    """``S_i = -δ/2 + i - λᵗ_i`` for ``i = 1 .. length``.

    The default length runs one step past the last nonzero column, after
    which the sequence is ``-δ/2 + i``.
    """
    if delta is None:
        delta = 2 * lam.m - 2 * lam.n + 1
    length = lam.row(1) + 1 if length is None else length
    return [Fraction(-delta, 2) + i - lam.column(i) for i in range(1, length + 1)]


def infinite_weight(lam: HookPartition) -> SuperWeight:
    """``w(λ)``: ``o`` if neither ``±p`` is in S, ``v`` if only ``-p``, ``^`` if only ``p``, ``x`` if both."""
    delta = 2 * lam.m - 2 * lam.n + 1
    head = s_sequence(lam, delta)
    reach = int(max(abs(x) for x in head)) + 1
    seq = set(s_sequence(lam, delta, len(head) + reach + abs(delta) + 2))
    labels = []
    for i in range(1, reach + 1):
        p = position(i)
        plus, minus = p in seq, -p in seq
        labels.append(CROSS if plus and minus else DOWN if minus else UP if plus else NOUGHT)
    return SuperWeight("".join(labels), UP)


def _free_ups(cd) -> list[int]:
    """Positions of dotted arcs (the unmatched ``^``), left to right."""
    out = [p for c in cd.cups if c.dotted for p in (c.left, c.right)]
    out += [r.pos for r in cd.rays if r.dotted]
    return sorted(out)


@dataclass(frozen=True)
class FrozenData:
    weight: SuperWeight
    d_degree: int
    truncation: Weight
    real_dotted: tuple[tuple[int, int], ...]
    frozen: tuple[int, ...]

    def is_frozen(self, i: int) -> bool:
        return i > len(self.truncation) or i in self.frozen


def frozen_vertices(lam: HookPartition) -> FrozenData:
    """Split the dotted cups of ``w(λ)`` into the first ``d`` and the fake ones.

    The weight is truncated far enough that every ``v`` is closed and the
    first ``d`` dotted cups lie strictly inside; every vertex past the
    truncation is frozen.
    """
    w = infinite_weight(lam)
    d = d_degree(lam)
    trunc = w.truncate(len(w.prefix) + w.count(DOWN) + 2 * d + 2)
    cd = cup_diagram(trunc)
    dotted = sorted((c.left, c.right) for c in cd.cups if c.dotted)
    real = tuple(dotted[:d])
    keep = {p for c in real for p in c}
    frozen = tuple(p for p in _free_ups(cd) if p not in keep)
    return FrozenData(w, d, trunc, real, frozen)


def fake_cups(lam: HookPartition) -> list[tuple[int, int]]:
    """Fake cups of ``w(λ)`` that close inside the working truncation."""
    fd = frozen_vertices(lam)
    cd = cup_diagram(fd.truncation)
    return [(c.left, c.right) for c in cd.cups if c.dotted and (c.left, c.right) not in fd.real_dotted]


def super_weight(lam: HookPartition) -> SuperWeight:
    """``λ°``: frozen labels become ``v``, keeping the leftmost as ``^`` when the d-degree is odd."""
    fd = frozen_vertices(lam)
    chars = list(fd.truncation.labels)
    for k, p in enumerate(fd.frozen):
        chars[p - 1] = UP if (k == 0 and fd.d_degree % 2) else DOWN
    if fd.d_degree % 2 and not fd.frozen:
        chars.append(UP)
    return SuperWeight("".join(chars), DOWN)


def satisfies_timescirc(mu: SuperWeight, m: int, n: int) -> bool:
    """``def(μ) + #x = m`` and ``#o - #x = n - m``."""
    return mu.defect + mu.count(CROSS) == m and mu.count(NOUGHT) - mu.count(CROSS) == n - m


def hook_from_super(mu: SuperWeight, m: int, n: int) -> HookPartition:
    """Inverse of :func:`super_weight`.

    The negative entries of S are the ``x`` and the cup-opening ``v``; the
    positive entries are the ``x``, the ``^`` and the ``v`` on rays.  Then
    ``λᵗ_i = n - m - 1/2 + i - S_i``.
    """
    _check_context(m, n)
    if not mu.is_super_weight_diagram():
        raise SuperError(f"{mu} is not a super weight diagram")
    if not satisfies_timescirc(mu, m, n):
        raise SuperError(f"{mu} violates the x/o constraints for m={m}, n={n}")
    cd = mu.cups()
    openers = {c.left for c in cd.cups if not c.dotted}
    length = len(mu.prefix)
    neg = sorted((position(i) for i in range(1, length + 1)
                  if mu.label(i) == CROSS or i in openers), reverse=True)
    pos = [position(i) for i in range(1, length + 1)
           if mu.label(i) in (CROSS, UP) or (mu.label(i) == DOWN and i not in openers)]
    seq = [-p for p in neg] + pos
    # past the prefix S continues with the tail vertices, giving a constant column length
    if n - m - length + len(seq) != 0:
        raise SuperError(f"{mu} gives infinitely many nonzero columns")
    cols = []
    for i, s in enumerate(seq, 1):
        c = n - m - HALF + i - s
        if c.denominator != 1 or c < 0:
            raise SuperError(f"{mu} gives a negative column length at column {i}")
        cols.append(int(c))
    while cols and cols[-1] == 0:
        cols.pop()
    if any(x < y for x, y in zip(cols, cols[1:])):
        raise SuperError(f"{mu} does not give a partition")
    rows = [sum(1 for c in cols if c >= r) for r in range(1, (cols[0] if cols else 0) + 1)]
    lam = HookPartition(tuple(rows), m, n)
    if super_weight(lam) != mu:
        raise SuperError(f"{mu} has no preimage")
    return lam


def super_weights(m: int, n: int, length: int) -> Iterator[SuperWeight]:
    """Super weight diagrams with prefix at most ``length`` meeting the x/o constraints."""
    for word in itertools.product((UP, DOWN, CROSS, NOUGHT), repeat=length):
        mu = SuperWeight("".join(word), DOWN)
        if len(mu.prefix) != length:
            continue
        if mu.is_super_weight_diagram() and satisfies_timescirc(mu, m, n):
            yield mu


# Gruson-Serganova labelling

GS_LESS = "<"
GS_MORE = ">"
GS_CROSS = "x"
GS_NOUGHT = "o"
GS_COLOURED = "@"

T_TABLE = {GS_LESS: NOUGHT, GS_MORE: CROSS, GS_CROSS: DOWN, GS_NOUGHT: UP, GS_COLOURED: UP}


@dataclass(frozen=True)
class GSDiagram:
    """Labels on ``1/2, 3/2, ...`` over ``< > x o @`` with an ``o`` tail.

    ``indicator`` is ``"+"`` or ``"-"`` when vertex ``1/2`` holds only ``x``
    (then its label is ``@``), else ``None``.  ``cups`` holds the ``x o``
    cups and ``coloured`` the cups opened by an ``@``.
    """

    labels: str
    indicator: str | None
    cups: tuple[tuple[int, int], ...]
    coloured: tuple[tuple[int, int], ...]

    def label(self, i: int) -> str:
        return self.labels[i - 1] if i <= len(self.labels) else GS_NOUGHT


def gs_diagram(lam: HookPartition) -> GSDiagram:
    rho = wt_prime(lam)
    d = rho.tail
    top = int(max(abs(x) for x in rho.a + rho.b)) + 1
    length = top + 2 * d + 4
    chars = []
    for i in range(1, length + 1):
        p = position(i)
        alpha = sum(1 for x in rho.a if abs(x) == p)
        beta = sum(1 for x in rho.b if x == p)
        if i > 1:
            assert alpha <= 1 and beta <= 1, (lam, p)
        if alpha and beta:
            chars.append(GS_CROSS if i > 1 else (GS_MORE if alpha > beta else GS_LESS if beta > alpha else GS_COLOURED))
        elif alpha:
            chars.append(GS_MORE)
        elif beta:
            chars.append(GS_LESS)
        else:
            chars.append(GS_NOUGHT)
    indicator = None
    if chars[0] == GS_COLOURED:
        indicator = "+" if HALF in rho.a else "-"
    stack, cups = [], []
    for i in range(2, length + 1):
        if chars[i - 1] == GS_CROSS:
            stack.append(i)
        elif chars[i - 1] == GS_NOUGHT and stack:
            cups.append((stack.pop(), i))
    assert not stack, lam
    used = {p for c in cups for p in c}
    free = [i for i in range(2, length + 1) if chars[i - 1] == GS_NOUGHT and i not in used]
    coloured = []
    if indicator is not None:
        coloured.append((1, free[0]))
        free = free[1:]
    placed = d - 1 if indicator == "-" else d
    for k in range(placed):
        left, right = free[2 * k], free[2 * k + 1]
        chars[left - 1] = GS_COLOURED
        coloured.append((left, right))
    return GSDiagram("".join(chars), indicator, tuple(sorted(cups)), tuple(sorted(coloured)))


def apply_t(gs: GSDiagram) -> SuperWeight:
    out = [T_TABLE[ch] for ch in gs.labels]
    if gs.indicator == "+":
        out[0] = DOWN
    return SuperWeight("".join(out), UP)


def gs_translate(lam: HookPartition) -> SuperWeight:
    return apply_t(gs_diagram(lam))


def gs_cups_match(lam: HookPartition) -> bool:
    """The GS cups are the non-fake cups of ``w(λ)``, ignoring decorations."""
    gs = gs_diagram(lam)
    fd = frozen_vertices(lam)
    cd = cup_diagram(fd.truncation)
    mine = {(c.left, c.right) for c in cd.cups if not c.dotted} | set(fd.real_dotted)
    limit = max((r for _, r in gs.cups + gs.coloured), default=0)
    mine = {c for c in mine if c[1] <= max(limit, len(fd.weight.prefix))}
    return mine == set(gs.cups) | set(gs.coloured)


# single-box moves on w(λ)

_MOVES = {
    # a positive entry p of S becomes p - 1: labels at (p - 1, p)
    "positive": {("o", "^"): ("^", "o"), ("o", "x"): ("^", "v"), ("v", "^"): ("x", "o"), ("v", "x"): ("x", "v")},
    # a negative entry -p becomes -(p + 1): labels at (p, p + 1)
    "negative": {("v", "o"): ("o", "v"), ("v", "^"): ("o", "x"), ("x", "o"): ("^", "v"), ("x", "^"): ("^", "x")},
    # 1/2 becomes -1/2
    "half": {("^",): ("v",)},
}


def box_move(before: SuperWeight, after: SuperWeight) -> tuple[str, int] | None:
    """Name and left index of the local move taking ``before`` to ``after``, if any."""
    length = max(len(before.prefix), len(after.prefix)) + 1
    diff = [i for i in range(1, length + 1) if before.label(i) != after.label(i)]
    if diff == [1]:
        if _MOVES["half"].get((before.label(1),)) == (after.label(1),):
            return "half", 1
        return None
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        return None
    i = diff[0]
    old = (before.label(i), before.label(i + 1))
    new = (after.label(i), after.label(i + 1))
    for kind in ("positive", "negative"):
        if _MOVES[kind].get(old) == new:
            return kind, i
    return None


# Hom spaces


def good_level(weights: Sequence[SuperWeight]) -> int:
    """Smallest truncation past which every weight is pure ``v`` tail."""
    return max([len(w.prefix) for w in weights] + [1])


def _pair(lam: SuperWeight, mu: SuperWeight, level: int | None):
    n = level or good_level([lam, mu])
    lw, mw = lam.truncate(n), mu.truncate(n)
    return lw, mw, CircleDiagram(cup_diagram(lw), cap_diagram(mw))


def super_linked(lam: SuperWeight, mu: SuperWeight) -> bool:
    return lam.skeleton == mu.skeleton and lam.defect == mu.defect


def circle_components(lam: HookPartition, mu: HookPartition, level: int | None = None) -> list[Component]:
    _, _, cd = _pair(super_weight(lam), super_weight(mu), level)
    return components(cd)


def hom_dim(lam: HookPartition, mu: HookPartition, level: int | None = None) -> int:
    """``dim Hom(P(λ), P(μ))`` from the components of ``λ°`` under ``μ°``.

    Zero unless the weights are super-linked, every line propagates and
    every component carries an even number of dots; otherwise ``2**c``
    with ``c`` the number of closed components.
    """
    if (lam.m, lam.n) != (mu.m, mu.n):
        raise SuperError("partitions come from different (m, n)")
    a, b = super_weight(lam), super_weight(mu)
    if not super_linked(a, b):
        return 0
    comps = circle_components(lam, mu, level)
    if any(c.kind in (BOTTOM_BOTTOM, TOP_TOP) for c in comps):
        return 0
    if any(c.dot_count % 2 for c in comps):
        return 0
    return 2 ** sum(1 for c in comps if c.kind == CIRCLE)


def in_ideal(cd: CircleDiagram) -> bool:
    """A circle diagram lies in the ideal iff it has a non-propagating line."""
    return any(c.kind not in (CIRCLE, PROPAGATING) for c in components(cd))


@dataclass(frozen=True)
class TruncatedHomBasis:
    """Oriented circle diagrams between truncated super weights.

    ``entries[(i, j)]`` lists ``(vector, in_ideal)`` for the basis of
    ``e_i D e_j``, where ``i``, ``j`` index ``partitions``.
    """

    partitions: tuple[HookPartition, ...]
    level: int
    weights: tuple[Weight, ...]
    entries: dict

    def quotient_dim(self, i: int, j: int) -> int:
        return sum(1 for _, flag in self.entries[(i, j)] if not flag)

    def vectors(self) -> list[tuple[BasisVector, bool]]:
        return [vf for key in sorted(self.entries) for vf in self.entries[key]]


def truncated_hom_basis(parts: Sequence[HookPartition], level: int | None = None) -> TruncatedHomBasis:
    sw = [super_weight(p) for p in parts]
    if len({(p.m, p.n) for p in parts}) > 1:
        raise SuperError("partitions come from different (m, n)")
    for x, y in itertools.combinations(sw, 2):
        if not super_linked(x, y):
            raise SuperError(f"{x} and {y} are not super-linked")
    n = max(level or 0, good_level(sw))
    ws = tuple(w.truncate(n) for w in sw)
    entries = {}
    for i, j in itertools.product(range(len(ws)), repeat=2):
        cd = CircleDiagram(cup_diagram(ws[i]), cap_diagram(ws[j]))
        flag = in_ideal(cd)
        vecs = sorted(BasisVector(ws[i], nu, ws[j]) for nu, _ in orientations_of_circle(cd))
        entries[(i, j)] = [(v, flag) for v in vecs]
    return TruncatedHomBasis(tuple(parts), n, ws, entries)


def ideal_violations(tb: TruncatedHomBasis) -> list[tuple[BasisVector, BasisVector, BasisVector]]:
    """Products ``x y`` with a factor in the ideal but a term outside it."""
    flag = {v: f for v, f in tb.vectors()}
    bad = []
    for x, fx in tb.vectors():
        for y, fy in tb.vectors():
            if x.upper != y.lower or not (fx or fy):
                continue
            for z, _ in multiply_basis(x, y):
                if not flag[z]:
                    bad.append((x, y, z))
    return bad


def quotient_product(tb: TruncatedHomBasis, x: BasisVector, y: BasisVector):
    """Experimental: the product ``x y`` with ideal terms dropped.

    Whether this is the Hom-space composition is conjectural; it is exposed
    for exploration only.
    """
    flag = {v: f for v, f in tb.vectors()}
    return [(z, c) for z, c in multiply_basis(x, y) if not flag[z]]


@lru_cache(maxsize=None)
def sosp32_partition(i: int) -> HookPartition:
    """The partition of ``L(i)`` in the principal block of SOSP(3|2).

    ``λ + ρ = (i - 1/2, i - 1/2)`` for ``i > 0`` and ``(-1/2, 1/2)`` for ``i = 0``.
    """
    if i < 0:
        raise SuperError("i must be non-negative")
    a = Fraction(2 * i - 1, 2) if i else -HALF
    b = Fraction(2 * i - 1, 2) if i else HALF
    return partition_from_rho(RhoData((a,), (b,)))
