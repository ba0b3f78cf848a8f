"""Weight diagrams, blocks and the Bruhat order.

A weight is a finite word over ``^`` (up), ``v`` (down), ``x`` (cross) and
``o`` (nought); position ``i`` (1-based) carries the ``i``-th letter and every
position past the end is ``o``.  Positions labelled ``^`` or ``v`` are the
*bullets* of the weight.  A block is fixed by its skeleton (where the bullets,
crosses and noughts sit) together with the parity of the number of ``^``.

Order convention: ``bruhat_leq(a, b)`` holds iff ``a`` is reached from ``b`` by
basic moves, each of which makes a weight smaller:

* swap a neighbouring pair of bullets ``^ v`` into ``v ^``;
* turn ``v v`` at the first two bullets into ``^ ^``.

So the all-``v`` weight is the maximum of an even principal block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

UP = "^"
DOWN = "v"
CROSS = "x"
NOUGHT = "o"
LABELS = (UP, DOWN, CROSS, NOUGHT)

_SKELETON = {UP: "b", DOWN: "b", CROSS: "x", NOUGHT: "o"}


class WeightError(ValueError):
    """Malformed weight or block text; ``position`` is 1-based when known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def flip_label(label: str) -> str:
    if label == UP:
        return DOWN
    if label == DOWN:
        return UP
    raise WeightError(f"cannot flip non-bullet label {label!r}")


@dataclass(frozen=True, order=True)
class Block:
    """Skeleton over ``b``/``x``/``o`` plus the parity of the number of ``^``."""

    skeleton: str
    parity: int = 0

    def __post_init__(self) -> None:
        for i, ch in enumerate(self.skeleton, start=1):
            if ch not in "bxo":
                raise WeightError(f"bad skeleton symbol {ch!r}", i)
        if self.parity not in (0, 1):
            raise WeightError(f"parity must be 0 or 1, got {self.parity!r}")
        stripped = self.skeleton.rstrip("o")
        if stripped != self.skeleton:
            object.__setattr__(self, "skeleton", stripped)
        if not self.bullets and self.parity:
            raise WeightError("a block without bullets has parity 0")

    @cached_property
    def bullets(self) -> tuple[int, ...]:
        return tuple(i for i, ch in enumerate(self.skeleton, start=1) if ch == "b")

    @property
    def rank(self) -> int:
        return len(self.bullets)

    @property
    def length(self) -> int:
        return len(self.skeleton)

    def to_json(self) -> dict:
        return {"skeleton": self.skeleton, "parity": self.parity}

    @classmethod
    def from_json(cls, data: dict) -> "Block":
        return cls(str(data["skeleton"]), int(data["parity"]))

    def __str__(self) -> str:
        return f"{self.skeleton or '-'}/{self.parity}"


def principal_block(k: int, parity: int = 0) -> Block:
    """The block of weights with ``k`` bullets and nothing else."""
    if k < 1:
        raise WeightError(f"principal block needs k >= 1, got {k}")
    return Block("b" * k, parity)


@dataclass(frozen=True, order=True)
class Weight:
    """A weight diagram; trailing ``o`` are implicit and stripped."""

    labels: str

    def __post_init__(self) -> None:
        for i, ch in enumerate(self.labels, start=1):
            if ch not in LABELS:
                raise WeightError(f"bad weight label {ch!r}", i)
        stripped = self.labels.rstrip(NOUGHT)
        if stripped != self.labels:
            object.__setattr__(self, "labels", stripped)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        return cls(text.strip())

    def __str__(self) -> str:
        return self.labels

    def __repr__(self) -> str:
        return f"Weight({self.labels!r})"

    def __len__(self) -> int:
        return len(self.labels)

    def label(self, pos: int) -> str:
        """Label at the 1-based position ``pos``."""
        if pos < 1:
            raise WeightError("positions are 1-based", pos)
        return self.labels[pos - 1] if pos <= len(self.labels) else NOUGHT

    @cached_property
    def block(self) -> Block:
        skeleton = "".join(_SKELETON[ch] for ch in self.labels)
        return Block(skeleton, self.labels.count(UP) % 2)

    @property
    def bullets(self) -> tuple[int, ...]:
        return self.block.bullets

    def bullet_labels(self) -> str:
        return "".join(self.labels[p - 1] for p in self.bullets)

    def replace(self, changes: dict[int, str]) -> "Weight":
        """Copy with the labels at the given positions replaced."""
        chars = list(self.labels)
        top = max(changes, default=0)
        if top > len(chars):
            chars.extend(NOUGHT * (top - len(chars)))
        for pos, lab in changes.items():
            chars[pos - 1] = lab
        return Weight("".join(chars))

    def flip(self, positions) -> "Weight":
        return self.replace({p: flip_label(self.label(p)) for p in positions})

    def pad(self, left: str = "", right: str = "") -> "Weight":
        """Prepend and append raw labels; used to enlarge weights."""
        body = self.labels + NOUGHT * max(0, len(self.block.skeleton) - len(self.labels))
        return Weight(left + body + right)


def weight_in_block(labels: str, block: Block) -> Weight:
    w = Weight(labels)
    if w.block != block:
        raise WeightError(f"weight {labels!r} is not in block {block}")
    return w


def _fill(block: Block, bullet_word: str) -> Weight:
    chars = list(block.skeleton)
    it = iter(bullet_word)
    for i, ch in enumerate(chars):
        if ch == "b":
            chars[i] = next(it)
        elif ch == "x":
            chars[i] = CROSS
        else:
            chars[i] = NOUGHT
    return Weight("".join(chars))


def basic_moves(w: Weight) -> list[Weight]:
    """Weights one basic move below ``w``."""
    bullets = w.bullets
    out = []
    for p, q in zip(bullets, bullets[1:]):
        if w.label(p) == UP and w.label(q) == DOWN:
            out.append(w.replace({p: DOWN, q: UP}))
    if len(bullets) >= 2:
        p, q = bullets[0], bullets[1]
        if w.label(p) == DOWN and w.label(q) == DOWN:
            out.append(w.replace({p: UP, q: UP}))
    return out


@lru_cache(maxsize=None)
def _block_data(block: Block):
    words = [
        "".join(t)
        for t in itertools.product((UP, DOWN), repeat=block.rank)
        if "".join(t).count(UP) % 2 == block.parity
    ]
    members = [_fill(block, word) for word in words]
    below = {w: basic_moves(w) for w in members}
    # longest-path depth from the top gives a linear extension of the order
    indeg = {w: 0 for w in members}
    for w in members:
        for u in below[w]:
            indeg[u] += 1
    depth = {w: 0 for w in members if indeg[w] == 0}
    frontier = sorted(depth)
    seen = dict(indeg)
    while frontier:
        nxt = []
        for w in frontier:
            for u in below[w]:
                depth[u] = max(depth.get(u, 0), depth[w] + 1)
                seen[u] -= 1
                if seen[u] == 0:
                    nxt.append(u)
        frontier = nxt
    key = {w: (depth[w], w.bullet_labels().replace(DOWN, "0").replace(UP, "1")) for w in members}
    ordered = tuple(sorted(members, key=key.__getitem__))
    down: dict[Weight, frozenset[Weight]] = {}
    for w in reversed(ordered):
        acc = {w}
        for u in below[w]:
            acc |= down[u]
        down[w] = frozenset(acc)
    return ordered, down, {w: i for i, w in enumerate(ordered)}


def weights_in_block(block: Block) -> tuple[Weight, ...]:
    """All weights of the block, largest first.

    The order is a linear extension of the Bruhat order (longest chain from
    the top, ties broken with ``v`` before ``^``).  For the even principal
    block of rank 4 it is ``vvvv, ^^vv, ^v^v, v^^v, ^vv^, v^v^, vv^^, ^^^^``.
    """
    return _block_data(block)[0]


def weight_index(w: Weight) -> int:
    return _block_data(w.block)[2][w]


def down_set(w: Weight) -> frozenset[Weight]:
    """All weights ``u`` with ``u <= w``."""
    return _block_data(w.block)[1][w]


def bruhat_leq(a: Weight, b: Weight) -> bool:
    if a.block != b.block:
        return False
    return a in down_set(b)


def bruhat_lt(a: Weight, b: Weight) -> bool:
    return a != b and bruhat_leq(a, b)
