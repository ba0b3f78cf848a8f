"""Unsigned surgery over F2, written independently of the signed product.

States are labellings of the stacked diagram; every surgery maps a state to
zero, one or two states via

* ``1 (x) 1 -> 1``, ``1 (x) x -> x``, ``x (x) x -> 0`` for merges,
* ``1 -> 1 (x) x + x (x) 1``, ``x -> x (x) x`` for splits,
* ``1 (x) y -> y``, ``x (x) y -> 0``, ``y -> y (x) x`` with lines, and
  ``y (x) y -> y (x) y`` only for two propagating lines,

where ``1`` is an anticlockwise circle, ``x`` a clockwise one and ``y`` a line.
A state that cannot be labelled consistently is dropped.  Multiplicities are
kept mod 2.
"""

from __future__ import annotations

from .algebra import BasisVector
from .weights import DOWN, UP

# an edge is (kind, u, v, dotted) with kind in {"cup", "cap", "vert"}; a ray is (v, dotted, side)


class _Stack:
    def __init__(self) -> None:
        self.edges: set[tuple] = set()
        self.rays: set[tuple] = set()

    def copy(self) -> "_Stack":
        s = _Stack()
        s.edges = set(self.edges)
        s.rays = set(self.rays)
        return s

    def nbrs(self, v):
        for e in self.edges:
            if e[1] == v:
                yield e[2], e
            elif e[2] == v:
                yield e[1], e

    def component(self, v) -> tuple[set, list]:
        seen = {v}
        todo = [v]
        while todo:
            u = todo.pop()
            for w, _ in self.nbrs(u):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        ends = [r for r in self.rays if r[0] in seen]
        return seen, ends


def _relabel(st: _Stack, verts: set, seed, seed_label: str, labels: dict) -> bool:
    """Propagate ``seed_label`` from ``seed`` over ``verts``; False on conflict."""
    new = {seed: seed_label}
    todo = [seed]
    while todo:
        u = todo.pop()
        for w, e in st.nbrs(u):
            flip = e[0] != "vert" and not e[3]
            want = new[u] if not flip else (DOWN if new[u] == UP else UP)
            if w in new:
                if new[w] != want:
                    return False
            else:
                new[w] = want
                todo.append(w)
    for v, dotted, _side in st.rays:
        if v in new and new[v] != (UP if dotted else DOWN):
            return False
    labels.update(new)
    return True


def _line_label(st: _Stack, verts: set, ends: list, labels: dict) -> bool:
    v, dotted, _ = ends[0]
    return _relabel(st, verts, v, UP if dotted else DOWN, labels)


def _is_clockwise(verts: set, labels: dict) -> bool:
    top = max(p for p, _ in verts)
    seen = {labels[(p, r)] for p, r in verts if p == top}
    assert len(seen) == 1, "rightmost vertices of a circle disagree"
    return seen.pop() == DOWN


def _circle_state(st: _Stack, verts: set, clockwise: bool, labels: dict) -> bool:
    root = max(verts)
    return _relabel(st, verts, root, DOWN if clockwise else UP, labels)


def multiply_f2(x: BasisVector, y: BasisVector) -> frozenset[BasisVector]:
    """The product ``x y`` over F2, as the set of basis vectors with odd coefficient."""
    if x.upper != y.lower:
        return frozenset()
    st = _Stack()
    labels: dict = {}
    bullets = x.block.bullets
    for p in bullets:
        labels[(p, 0)] = x.nu.label(p)
        labels[(p, 1)] = y.nu.label(p)
    for c in x.cup.cups:
        st.edges.add(("cup", (c.left, 0), (c.right, 0), c.dotted))
    for r in x.cup.rays:
        st.rays.add(((r.pos, 0), r.dotted, "bottom"))
    for c in x.cap.cups:
        st.edges.add(("cap", (c.left, 0), (c.right, 0), c.dotted))
    for c in y.cup.cups:
        st.edges.add(("cup", (c.left, 1), (c.right, 1), c.dotted))
    for c in y.cap.cups:
        st.edges.add(("cap", (c.left, 1), (c.right, 1), c.dotted))
    for r in y.cap.rays:
        st.rays.add(((r.pos, 1), r.dotted, "top"))
    for r in x.cap.rays:
        if labels[(r.pos, 0)] != labels[(r.pos, 1)]:
            return frozenset()
        st.edges.add(("vert", (r.pos, 0), (r.pos, 1), False))

    states = {tuple(sorted(labels.items())): 1}
    pairs = sorted(((c.left, c.right, c.dotted) for c in x.cap.cups), key=lambda t: t[1] - t[0])
    todo = list(pairs)
    while todo and states:
        outer = [p for p in todo if not any(q[0] < p[0] and p[1] < q[1] for q in todo)]
        l, r, dotted = max(outer)
        todo.remove((l, r, dotted))
        cap = ("cap", (l, 0), (r, 0), dotted)
        cup = ("cup", (l, 1), (r, 1), dotted)
        c1, e1 = st.component((l, 0))
        c2, e2 = st.component((l, 1))
        nxt = st.copy()
        nxt.edges -= {cap, cup}
        nxt.edges |= {("vert", (l, 0), (l, 1), False), ("vert", (r, 0), (r, 1), False)}
        merge = (l, 1) not in c1
        new_states: dict = {}

        def emit(lab: dict) -> None:
            key = tuple(sorted(lab.items()))
            new_states[key] = (new_states.get(key, 0) + 1) % 2

        for key, mult in states.items():
            if not mult:
                continue
            lab = dict(key)
            if merge:
                n, ne = nxt.component((l, 0))
                if not e1 and not e2:
                    x1, x2 = _is_clockwise(c1, lab), _is_clockwise(c2, lab)
                    if x1 and x2:
                        continue
                    if _circle_state(nxt, n, x1 or x2, lab):
                        emit(lab)
                elif e1 and e2:
                    prop = lambda ends: sorted(s for _, _, s in ends) == ["bottom", "top"]  # noqa: E731
                    if not (prop(e1) and prop(e2)):
                        continue
                    ok = True
                    for seed in ((l, 0), (r, 0)):
                        verts, ends = nxt.component(seed)
                        ok = ok and _line_label(nxt, verts, ends, lab)
                    if ok:
                        emit(lab)
                else:
                    circ = c2 if e1 else c1
                    if _is_clockwise(circ, lab):
                        continue
                    if _line_label(nxt, n, ne, lab):
                        emit(lab)
            else:
                ca, ea = nxt.component((l, 0))
                cb, eb = nxt.component((r, 0))
                if e1:
                    line, lends, circ = (ca, ea, cb) if ea else (cb, eb, ca)
                    if _line_label(nxt, line, lends, lab) and _circle_state(nxt, circ, True, lab):
                        emit(lab)
                elif _is_clockwise(c1, lab):
                    if _circle_state(nxt, ca, True, lab) and _circle_state(nxt, cb, True, lab):
                        emit(lab)
                else:
                    for first in (True, False):
                        trial = dict(lab)
                        if _circle_state(nxt, ca, first, trial) and _circle_state(nxt, cb, not first, trial):
                            emit(trial)
        states = {k: m for k, m in new_states.items() if m}
        st = nxt

    out: dict[BasisVector, int] = {}
    for key in states:
        lab = dict(key)
        nu = x.nu.replace({p: lab[(p, 0)] for p in bullets})
        v = BasisVector(x.lower, nu, y.upper)
        out[v] = (out.get(v, 0) + 1) % 2
    return frozenset(v for v, m in out.items() if m)
