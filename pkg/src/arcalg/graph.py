"""Planar arc graphs: components, orientability and sign normalisation.

Vertices are ``(pos, row)`` pairs.  Each vertex meets at most two pieces:
arcs (cups or caps, dotted or not), vertical segments joining the same
position in neighbouring rows, and rays running to the bottom or top
boundary.

Along an undotted arc the two labels differ; along a dotted arc or a vertical
segment they agree.  The same rule with signs in place of labels gives the
relations ``X_i + X_j = 0`` (undotted) and ``X_i - X_j = 0`` (dotted) of the
circle ring, so one traversal yields both the orientations and the signs.
The root of a component is its vertex with the largest ``(pos, row)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .weights import DOWN, UP

Vertex = tuple[int, int]

BOTTOM = "bottom"
TOP = "top"


@dataclass(frozen=True)
class Piece:
    """One arc, vertical segment or ray of an :class:`ArcGraph`."""

    kind: str  # "cup", "cap", "vertical" or "ray"
    ends: tuple[Vertex, ...]
    dotted: bool = False
    boundary: str | None = None  # rays only

    @property
    def flips(self) -> bool:
        return self.kind in ("cup", "cap") and not self.dotted


@dataclass
class GraphComponent:
    vertices: tuple[Vertex, ...]
    root: Vertex
    sign: dict[Vertex, int]
    is_line: bool
    boundaries: tuple[str, ...]
    orientable: bool
    forced_root_label: str | None
    dot_count: int
    undotted_arc_count: int
    pieces: tuple[Piece, ...] = field(default=())

    def label(self, v: Vertex, root_label: str) -> str:
        if self.sign[v] == 1:
            return root_label
        return DOWN if root_label == UP else UP

    @property
    def propagating(self) -> bool:
        return self.is_line and sorted(self.boundaries) == [BOTTOM, TOP]


class ArcGraph:
    def __init__(self) -> None:
        self.pieces: list[Piece] = []
        self._at: dict[Vertex, list[int]] = {}

    def copy(self) -> "ArcGraph":
        g = ArcGraph()
        g.pieces = list(self.pieces)
        g._at = {v: list(ix) for v, ix in self._at.items()}
        return g

    def _add(self, piece: Piece) -> None:
        idx = len(self.pieces)
        self.pieces.append(piece)
        for v in piece.ends:
            self._at.setdefault(v, []).append(idx)

    def add_arc(self, kind: str, u: Vertex, v: Vertex, dotted: bool) -> None:
        self._add(Piece(kind, (u, v), dotted))

    def add_vertical(self, u: Vertex, v: Vertex) -> None:
        self._add(Piece("vertical", (u, v)))

    def add_ray(self, v: Vertex, dotted: bool, boundary: str) -> None:
        self._add(Piece("ray", (v,), dotted, boundary))

    def remove(self, piece: Piece) -> None:
        idx = self.pieces.index(piece)
        self.pieces[idx] = None  # type: ignore[assignment]
        for v in piece.ends:
            self._at[v].remove(idx)

    def find(self, kind: str, u: Vertex, v: Vertex) -> Piece:
        for idx in self._at.get(u, []):
            p = self.pieces[idx]
            if p.kind == kind and set(p.ends) == {u, v}:
                return p
        raise KeyError((kind, u, v))

    def pieces_at(self, v: Vertex) -> list[Piece]:
        return [self.pieces[i] for i in self._at.get(v, [])]

    def vertices(self) -> list[Vertex]:
        return sorted(v for v, ix in self._at.items() if ix)

    def components(self) -> list[GraphComponent]:
        seen: set[Vertex] = set()
        out = []
        for start in self.vertices():
            if start in seen:
                continue
            out.append(self._walk(start, seen))
        out.sort(key=lambda c: c.root)
        return out

    def _walk(self, start: Vertex, seen: set[Vertex]) -> GraphComponent:
        rel = {start: 1}
        stack = [start]
        used: set[int] = set()
        ok = True
        boundaries = []
        demands = []  # (vertex, required label)
        while stack:
            v = stack.pop()
            seen.add(v)
            for idx in self._at.get(v, []):
                if idx in used:
                    continue
                used.add(idx)
                p = self.pieces[idx]
                if p.kind == "ray":
                    boundaries.append(p.boundary)
                    demands.append((v, UP if p.dotted else DOWN))
                    continue
                (w,) = [e for e in p.ends if e != v] or [v]
                s = -rel[v] if p.flips else rel[v]
                if w in rel:
                    if rel[w] != s:
                        ok = False
                else:
                    rel[w] = s
                    stack.append(w)
        root = max(rel)
        sign = {v: s * rel[root] for v, s in rel.items()}
        forced = None
        for v, lab in demands:
            want = lab if sign[v] == 1 else (DOWN if lab == UP else UP)
            if forced is None:
                forced = want
            elif forced != want:
                ok = False
        pieces = tuple(self.pieces[i] for i in sorted(used))
        return GraphComponent(
            vertices=tuple(sorted(rel)),
            root=root,
            sign=sign,
            is_line=bool(boundaries),
            boundaries=tuple(boundaries),
            orientable=ok,
            forced_root_label=forced,
            dot_count=sum(1 for p in pieces if p.dotted),
            undotted_arc_count=sum(1 for p in pieces if p.kind in ("cup", "cap") and not p.dotted),
            pieces=pieces,
        )
