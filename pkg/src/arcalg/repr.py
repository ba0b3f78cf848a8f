"""Cartan and decomposition matrices, cell modules and the Ext quiver."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BasisVector, Coeff, Element, basis, s_scalar
from .diagrams import cup_diagram, lambda_pairs, orient, orientations
from .laurent import ZERO, GradedMatrix, LaurentPoly
from .weights import Block, Weight, weights_in_block


def cartan_entry(lam: Weight, mu: Weight) -> LaurentPoly:
    """Graded dimension of ``e_lam D e_mu``: sum over ``nu`` orienting both halves."""
    acc: dict[int, int] = {}
    for nu, d in orientations(cup_diagram(lam)):
        e = orient(cup_diagram(mu), nu)
        if e is not None:
            acc[d + e] = acc.get(d + e, 0) + 1
    return LaurentPoly(acc)


def cartan_matrix(block: Block) -> GradedMatrix:
    ws = weights_in_block(block)
    return GradedMatrix.build(ws, ws, cartan_entry)


def cartan_from_basis(block: Block) -> GradedMatrix:
    """The Cartan matrix counted from the basis, as an independent check."""
    ws = weights_in_block(block)
    acc: dict[tuple[Weight, Weight], dict[int, int]] = {}
    for v in basis(block):
        d = acc.setdefault((v.lower, v.upper), {})
        d[v.degree] = d.get(v.degree, 0) + 1
    return GradedMatrix.build(ws, ws, lambda a, b: LaurentPoly(acc.get((a, b), {})))


def dec_entry(lam: Weight, mu: Weight) -> LaurentPoly:
    """``q**deg`` if ``mu`` orients the cup diagram of ``lam``, else 0."""
    d = orient(cup_diagram(lam), mu)
    return ZERO if d is None else LaurentPoly.monomial(d)


def decomposition_matrix(block: Block) -> GradedMatrix:
    """Rows and columns in block order; entry ``(r, c)`` is ``dec_entry(c, r)``."""
    ws = weights_in_block(block)
    return GradedMatrix.build(ws, ws, lambda r, c: dec_entry(c, r))


# ---------------------------------------------------------------------------
# cell modules


@dataclass(frozen=True)
class CellModule:
    """Basis ``(c mu|`` indexed by the weights ``c`` whose cup diagram ``mu`` orients."""

    mu: Weight
    basis: tuple[tuple[Weight, int], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def graded_dimension(self) -> LaurentPoly:
        acc: dict[int, int] = {}
        for _, d in self.basis:
            acc[d] = acc.get(d, 0) + 1
        return LaurentPoly(acc)


def cell_basis(mu: Weight) -> CellModule:
    out = []
    for lam in weights_in_block(mu.block):
        d = orient(cup_diagram(lam), mu)
        if d is not None:
            out.append((lam, d))
    return CellModule(mu, tuple(out))


def cell_action(x: Element, mu: Weight, vec: dict[Weight, Coeff]) -> dict[Weight, Coeff]:
    """Act on ``sum c_w (w mu|`` by ``(a nu b)(c mu| = s(mu) (a mu|`` when ``b = c``."""
    out: dict[Weight, Coeff] = {}
    for v, cv in x.terms.items():
        coeff = vec.get(v.upper, 0)
        if not coeff or orient(cup_diagram(v.lower), mu) is None:
            continue
        s = s_scalar(v, mu)
        if s:
            out[v.lower] = out.get(v.lower, 0) + cv * coeff * s
    return {w: c for w, c in out.items() if c}


def cell_filtration(lam: Weight) -> list[tuple[Weight, int]]:
    """Cell subquotients ``V(mu)<shift>`` of the projective ``P(lam)``, largest ``mu`` first.

    ``mu`` occurs iff it orients the cup diagram of ``lam``; the shift is the degree.
    """
    ws = weights_in_block(lam.block)
    out = []
    for mu in ws:
        d = orient(cup_diagram(lam), mu)
        if d is not None:
            out.append((mu, d))
    return out


def projective_dimension(lam: Weight) -> LaurentPoly:
    acc = ZERO
    for mu, shift in cell_filtration(lam):
        acc = acc + cell_basis(mu).graded_dimension().shift(shift)
    return acc


def cell_radical_layers(mu: Weight) -> list[list[Weight]]:
    """Layer ``j`` holds the ``lam`` whose cup diagram ``mu`` orients in degree ``j``."""
    layers: dict[int, list[Weight]] = {}
    for lam, d in cell_basis(mu).basis:
        layers.setdefault(d, []).append(lam)
    top = max(layers, default=-1)
    return [layers.get(j, []) for j in range(top + 1)]


# ---------------------------------------------------------------------------
# quiver


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[Weight, ...]
    edges: tuple[tuple[Weight, Weight], ...]  # (smaller, larger) per lambda-pair

    def arrows(self) -> list[tuple[Weight, Weight]]:
        out = []
        for a, b in self.edges:
            out += [(a, b), (b, a)]
        return out

    def index_edges(self) -> set[tuple[int, int]]:
        pos = {w: i + 1 for i, w in enumerate(self.vertices)}
        return {tuple(sorted((pos[a], pos[b]))) for a, b in self.edges}

    def to_dot(self) -> str:
        pos = {w: i + 1 for i, w in enumerate(self.vertices)}
        lines = ["digraph quiver {"]
        for w in self.vertices:
            label = f"{w.labels}\\n{cup_diagram(w).text()}"
            lines.append(f'  n{pos[w]} [label="{label}"];')
        for i, (a, b) in enumerate(self.edges, start=1):
            lines.append(f'  n{pos[a]} -> n{pos[b]} [label="a{i}"];')
            lines.append(f'  n{pos[b]} -> n{pos[a]} [label="b{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def quiver(block: Block) -> Quiver:
    ws = weights_in_block(block)
    edges = []
    for w in ws:
        for lp in lambda_pairs(w):
            edges.append((w, lp.target))
    rank = {w: i for i, w in enumerate(ws)}
    edges.sort(key=lambda e: (rank[e[1]], rank[e[0]]))
    return Quiver(ws, tuple(edges))
