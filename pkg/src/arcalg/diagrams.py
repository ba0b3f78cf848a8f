"""Decorated cup, cap and circle diagrams and their orientations.

Arcs are stored by their endpoints only, so diagrams that differ by an
isotopy compare equal.  Degree table for an arc oriented by a weight ``nu``:

=================  ==========  ==========
arc                degree 0    degree 1
=================  ==========  ==========
undotted cup/cap   ``v ^``     ``^ v``
dotted cup/cap     ``^ ^``     ``v v``
undotted ray       ``v``       (none)
dotted ray         ``^``       (none)
=================  ==========  ==========
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .graph import BOTTOM, TOP, ArcGraph, GraphComponent
from .weights import DOWN, UP, Block, Weight, WeightError, weights_in_block


class DiagramError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Cup:
    left: int
    right: int
    dotted: bool = False


@dataclass(frozen=True, order=True)
class Ray:
    pos: int
    dotted: bool = False


def _validate(block: Block, cups: tuple[Cup, ...], rays: tuple[Ray, ...], what: str) -> None:
    covered: list[int] = []
    for c in cups:
        if not c.left < c.right:
            raise DiagramError(f"{what} ({c.left},{c.right}) has left >= right")
        covered += [c.left, c.right]
    covered += [r.pos for r in rays]
    if sorted(covered) != list(block.bullets):
        raise DiagramError(f"{what}s must cover every bullet of {block} exactly once")
    for a, b in itertools.combinations(cups, 2):
        if a.left < b.left < a.right < b.right or b.left < a.left < b.right < a.right:
            raise DiagramError(f"{what}s ({a.left},{a.right}) and ({b.left},{b.right}) cross")
    for c in cups:
        for r in rays:
            if c.left < r.pos < c.right:
                raise DiagramError(f"ray {r.pos} lies inside {what} ({c.left},{c.right})")
    for c in cups:
        if not c.dotted:
            continue
        if any(o.left < c.left and c.right < o.right for o in cups):
            raise DiagramError(f"dotted {what} ({c.left},{c.right}) is nested")
        if any(r.pos < c.left for r in rays):
            raise DiagramError(f"dotted {what} ({c.left},{c.right}) lies right of a ray")
    for r in rays:
        if r.dotted and any(o.pos < r.pos for o in rays):
            raise DiagramError(f"dotted ray {r.pos} lies right of a ray")


_TOKEN = re.compile(r"(d?)(cup|cap|ray)\((\d+)(?:,(\d+))?\)")


class _ArcDiagram:
    block: Block
    cups: tuple[Cup, ...]
    rays: tuple[Ray, ...]
    _word = "cup"

    def _normalise(self) -> None:
        object.__setattr__(self, "cups", tuple(sorted(self.cups)))
        object.__setattr__(self, "rays", tuple(sorted(self.rays)))
        _validate(self.block, self.cups, self.rays, self._word)

    @property
    def defect(self) -> int:
        return len(self.cups)

    @cached_property
    def partner(self) -> dict[int, int | None]:
        out: dict[int, int | None] = {}
        for c in self.cups:
            out[c.left] = c.right
            out[c.right] = c.left
        for r in self.rays:
            out[r.pos] = None
        return out

    def arc_at(self, pos: int) -> Cup | Ray:
        for c in self.cups:
            if pos in (c.left, c.right):
                return c
        for r in self.rays:
            if r.pos == pos:
                return r
        raise KeyError(pos)

    def text(self) -> str:
        toks = [(c.left, f"{'d' if c.dotted else ''}{self._word}({c.left},{c.right})") for c in self.cups]
        toks += [(r.pos, f"{'d' if r.dotted else ''}ray({r.pos})") for r in self.rays]
        return " ".join(t for _, t in sorted(toks))

    def __str__(self) -> str:
        return self.text()

    @classmethod
    def parse(cls, text: str, block: Block):
        cups, rays = [], []
        for tok in text.split():
            m = _TOKEN.fullmatch(tok)
            if not m or (m.group(2) == "ray") != (m.group(4) is None):
                raise DiagramError(f"bad token {tok!r}")
            if m.group(2) not in ("ray", cls._word):
                raise DiagramError(f"token {tok!r} does not belong to a {cls._word} diagram")
            dotted = m.group(1) == "d"
            if m.group(2) == "ray":
                rays.append(Ray(int(m.group(3)), dotted))
            else:
                cups.append(Cup(int(m.group(3)), int(m.group(4)), dotted))
        return cls(block, tuple(cups), tuple(rays))

    def _rows(self) -> list[str]:
        width = 2 * max(self.block.length, 1) - 1
        depth: dict[Cup, int] = {}
        for c in sorted(self.cups, key=lambda c: c.right - c.left):
            inner = [depth[o] for o in depth if c.left < o.left and o.right < c.right]
            depth[c] = 1 + max(inner, default=0)
        rows = max(depth.values(), default=0) + 1
        grid = [[" "] * width for _ in range(rows)]
        col = lambda p: 2 * (p - 1)  # noqa: E731
        for c, d in depth.items():
            for r in range(d - 1):
                grid[r][col(c.left)] = "|"
                grid[r][col(c.right)] = "|"
            grid[d - 1][col(c.left)] = "\\"
            grid[d - 1][col(c.right)] = "/"
            for x in range(col(c.left) + 1, col(c.right)):
                grid[d - 1][x] = "_"
            if c.dotted:
                grid[d - 1][(col(c.left) + col(c.right)) // 2] = "*"
        for ray in self.rays:
            for r in range(rows):
                grid[r][col(ray.pos)] = "|"
            if ray.dotted:
                grid[0][col(ray.pos)] = "*"
        return ["".join(row).rstrip() for row in grid]


@dataclass(frozen=True)
class CupDiagram(_ArcDiagram):
    """Cups and rays below a weight line."""

    block: Block
    cups: tuple[Cup, ...]
    rays: tuple[Ray, ...]
    _word = "cup"

    def __post_init__(self) -> None:
        self._normalise()

    def ascii(self) -> str:
        return "\n".join(self._rows())


@dataclass(frozen=True)
class CapDiagram(_ArcDiagram):
    """The mirror image of a cup diagram, drawn above the weight line."""

    block: Block
    cups: tuple[Cup, ...]
    rays: tuple[Ray, ...]
    _word = "cap"

    def __post_init__(self) -> None:
        self._normalise()

    @property
    def caps(self) -> tuple[Cup, ...]:
        return self.cups

    def ascii(self) -> str:
        swap = str.maketrans({"\\": "/", "/": "\\", "_": "-"})
        return "\n".join(row.translate(swap) for row in reversed(self._rows()))


def mirror(d: CupDiagram | CapDiagram) -> CupDiagram | CapDiagram:
    """Reflect in the weight line: cups become caps and back."""
    if isinstance(d, CupDiagram):
        return CapDiagram(d.block, d.cups, d.rays)
    return CupDiagram(d.block, d.cups, d.rays)


@lru_cache(maxsize=None)
def cup_diagram(w: Weight) -> CupDiagram:
    """The cup diagram of ``w``.

    Neighbouring ``v ^`` pairs (ignoring joined vertices and non-bullets) are
    joined by undotted cups until none remain, the remaining ``v`` get undotted
    rays, the remaining ``^`` (all left of those rays) are joined from the left
    by dotted cups, and a leftover ``^`` gets a dotted ray.
    """
    stack: list[int] = []
    cups: list[Cup] = []
    free: list[int] = []
    for p in w.bullets:
        if w.label(p) == DOWN:
            stack.append(p)
        elif stack:
            cups.append(Cup(stack.pop(), p))
        else:
            free.append(p)
    rays = [Ray(p) for p in stack]
    for a, b in zip(free[0::2], free[1::2]):
        cups.append(Cup(a, b, True))
    if len(free) % 2:
        rays.append(Ray(free[-1], True))
    return CupDiagram(w.block, tuple(cups), tuple(rays))


def cap_diagram(w: Weight) -> CapDiagram:
    return mirror(cup_diagram(w))  # type: ignore[return-value]


def weight_of_cup(c: CupDiagram | CapDiagram) -> Weight:
    """The unique weight whose cup diagram is ``c`` (degree-0 orientation)."""
    chars = list(c.block.skeleton)
    for i, ch in enumerate(chars):
        chars[i] = {"b": "?", "x": "x", "o": "o"}[ch]
    for cup in c.cups:
        chars[cup.left - 1] = UP if cup.dotted else DOWN
        chars[cup.right - 1] = UP
    for r in c.rays:
        chars[r.pos - 1] = UP if r.dotted else DOWN
    w = Weight("".join(chars))
    return w


def arc_degree(labels: tuple[str, str], dotted: bool) -> int | None:
    if dotted:
        return {(UP, UP): 0, (DOWN, DOWN): 1}.get(labels)
    return {(DOWN, UP): 0, (UP, DOWN): 1}.get(labels)


def orient(c: CupDiagram | CapDiagram, nu: Weight) -> int | None:
    """Degree of the orientation of ``c`` by ``nu``, or None if illegal."""
    if nu.block.skeleton != c.block.skeleton:
        raise WeightError(f"weight {nu} is not in block {c.block}")
    if nu.block.parity != c.block.parity:
        return None
    deg = 0
    for cup in c.cups:
        d = arc_degree((nu.label(cup.left), nu.label(cup.right)), cup.dotted)
        if d is None:
            return None
        deg += d
    for r in c.rays:
        if nu.label(r.pos) != (UP if r.dotted else DOWN):
            return None
    return deg


def orientations(c: CupDiagram | CapDiagram) -> list[tuple[Weight, int]]:
    """All ``(nu, degree)`` orienting ``c``; there are ``2**defect`` of them."""
    base = weight_of_cup(c)
    out = []
    for flips in itertools.product((False, True), repeat=len(c.cups)):
        pos = [p for cup, f in zip(c.cups, flips) if f for p in (cup.left, cup.right)]
        out.append((base.flip(pos), sum(flips)))
    out.sort(key=lambda t: (t[1], t[0].labels))
    return out


def orientations_bruteforce(c: CupDiagram | CapDiagram) -> list[tuple[Weight, int]]:
    """Reference version of :func:`orientations` filtering the whole block."""
    out = []
    for nu in weights_in_block(c.block):
        d = orient(c, nu)
        if d is not None:
            out.append((nu, d))
    out.sort(key=lambda t: (t[1], t[0].labels))
    return out


@dataclass(frozen=True)
class CircleDiagram:
    cup: CupDiagram
    cap: CapDiagram

    def __post_init__(self) -> None:
        if self.cup.block != self.cap.block:
            raise DiagramError("cup and cap diagrams live in different blocks")

    @property
    def block(self) -> Block:
        return self.cup.block

    def graph(self) -> ArcGraph:
        g = ArcGraph()
        for c in self.cup.cups:
            g.add_arc("cup", (c.left, 0), (c.right, 0), c.dotted)
        for r in self.cup.rays:
            g.add_ray((r.pos, 0), r.dotted, BOTTOM)
        for c in self.cap.cups:
            g.add_arc("cap", (c.left, 0), (c.right, 0), c.dotted)
        for r in self.cap.rays:
            g.add_ray((r.pos, 0), r.dotted, TOP)
        return g

    def ascii(self, nu: Weight | None = None) -> str:
        line = " ".join((nu or weight_of_cup(self.cup)).label(p) if p in self.block.bullets else
                        self.block.skeleton[p - 1] for p in range(1, self.block.length + 1))
        return "\n".join([self.cap.ascii(), line, self.cup.ascii()])


CIRCLE = "circle"
PROPAGATING = "propagating_line"
BOTTOM_BOTTOM = "line_bottom_bottom"
TOP_TOP = "line_top_top"


@dataclass(frozen=True)
class Component:
    kind: str
    vertices: tuple[int, ...]
    dot_count: int
    undotted_arc_count: int
    orientable: bool


def _kind(gc: GraphComponent) -> str:
    if not gc.is_line:
        return CIRCLE
    b = sorted(gc.boundaries)
    if b == [BOTTOM, TOP]:
        return PROPAGATING
    return BOTTOM_BOTTOM if b == [BOTTOM, BOTTOM] else TOP_TOP


def components(d: CircleDiagram) -> list[Component]:
    out = []
    for gc in d.graph().components():
        out.append(Component(
            kind=_kind(gc),
            vertices=tuple(v[0] for v in gc.vertices),
            dot_count=gc.dot_count,
            undotted_arc_count=gc.undotted_arc_count,
            orientable=gc.orientable,
        ))
    return out


def orientations_of_circle(d: CircleDiagram) -> list[tuple[Weight, int]]:
    """Weights orienting both halves, with the total degree."""
    out = []
    for nu, dl in orientations(d.cup):
        du = orient(d.cap, nu)
        if du is not None:
            out.append((nu, dl + du))
    return out


@dataclass(frozen=True, order=True)
class LambdaPair:
    """A cup of ``source``'s cup diagram read as a move ``source -> target``.

    ``alpha`` is the bullet index of the left end, negated for a dotted cup;
    ``beta`` is the bullet index of the right end.
    """

    alpha: int
    beta: int
    cup: Cup
    source: Weight
    target: Weight


def bullet_index(block: Block, pos: int) -> int:
    """Number of bullets at or left of ``pos``."""
    return sum(1 for p in block.bullets if p <= pos)


def lambda_pairs(w: Weight) -> list[LambdaPair]:
    out = []
    for c in cup_diagram(w).cups:
        a = bullet_index(w.block, c.left)
        b = bullet_index(w.block, c.right)
        out.append(LambdaPair(-a if c.dotted else a, b, c, w, w.flip((c.left, c.right))))
    return sorted(out)
