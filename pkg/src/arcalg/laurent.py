"""Sparse Laurent polynomials in ``q`` with integer coefficients, and matrices of them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class LaurentPoly:
    """Immutable ``sum c_j q^j`` with finitely many nonzero ``c_j``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other) -> "LaurentPoly":
        other = _lift(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return _lift(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = _lift(other)
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, j: int) -> "LaurentPoly":
        """Multiply by ``q**j``."""
        return LaurentPoly({e + j: c for e, c in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """Substitute ``q -> q**-1``."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def __call__(self, q):
        return sum(c * q**e for e, c in self._c.items())

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._c.values())

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            c = self._c[e]
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(s + b for s, b in parts[1:])

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: accepts e.g. ``1+2q^2+q^4`` or ``-q^(-1)``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        terms = re.findall(r"([+-]?)(\d*)(q(?:\^\(?(-?\d+)\)?)?)?", s)
        out: dict[int, int] = {}
        consumed = 0
        for sign, num, qpart, exp in terms:
            chunk = sign + num + qpart
            if not chunk:
                continue
            if not num and not qpart:
                raise ValueError(f"bad polynomial {text!r}")
            consumed += len(chunk)
            c = int(num) if num else 1
            if sign == "-":
                c = -c
            e = 0 if not qpart else (int(exp) if exp else 1)
            out[e] = out.get(e, 0) + c
        if consumed != len(s):
            raise ValueError(f"bad polynomial {text!r}")
        return cls(out)


def _lift(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)


@dataclass(frozen=True)
class GradedMatrix:
    """A matrix of Laurent polynomials with labelled rows and columns."""

    rows: tuple
    cols: tuple
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise ValueError("entry shape does not match the index lists")

    @classmethod
    def build(cls, rows: Sequence, cols: Sequence, f) -> "GradedMatrix":
        return cls(tuple(rows), tuple(cols), tuple(tuple(f(r, c) for c in cols) for r in rows))

    @classmethod
    def from_rows(cls, rows: Sequence, cols: Sequence, data: Iterable[Iterable]) -> "GradedMatrix":
        ent = tuple(tuple(_lift(x) if not isinstance(x, str) else LaurentPoly.parse(x) for x in r) for r in data)
        return cls(tuple(rows), tuple(cols), ent)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def __getitem__(self, rc: tuple[int, int]) -> LaurentPoly:
        return self.entries[rc[0]][rc[1]]

    def entry(self, r, c) -> LaurentPoly:
        return self.entries[self.rows.index(r)][self.cols.index(c)]

    def transpose(self) -> "GradedMatrix":
        return GradedMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.entries else ())

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        if len(self.cols) != len(other.rows):
            raise ValueError("inner dimensions differ")
        n = len(self.cols)
        ent = tuple(
            tuple(sum((self.entries[i][t] * other.entries[t][j] for t in range(n)), ZERO)
                  for j in range(len(other.cols)))
            for i in range(len(self.rows))
        )
        return GradedMatrix(self.rows, other.cols, ent)

    def same_entries(self, other: "GradedMatrix") -> bool:
        return self.entries == other.entries

    def reindex(self, rows: Sequence, cols: Sequence) -> "GradedMatrix":
        """Permute to the given row and column orders (same label sets)."""
        return GradedMatrix.build(rows, cols, self.entry)

    def evaluate(self, q: float = 1.0) -> np.ndarray:
        return np.array([[p(q) for p in row] for row in self.entries], dtype=float)

    def total(self) -> LaurentPoly:
        return sum((p for row in self.entries for p in row), ZERO)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.entries == tuple(zip(*self.entries))

    def to_csv(self) -> str:
        head = "," + ",".join(str(c) for c in self.cols)
        lines = [head] + [str(r) + "," + ",".join(str(p) for p in row) for r, row in zip(self.rows, self.entries)]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "rows": [str(r) for r in self.rows],
            "cols": [str(c) for c in self.cols],
            "entries": [[str(p) for p in row] for row in self.entries],
        }

    def ascii(self) -> str:
        cells = [[""] + [str(c) for c in self.cols]] + [
            [str(r)] + [str(p) for p in row] for r, row in zip(self.rows, self.entries)
        ]
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        return "\n".join("  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells) + "\n"
