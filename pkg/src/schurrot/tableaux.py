"""Partitions, skew and boxed shapes, and (rotated) standard Young tableaux.

English notation: row 1 is on top, rows grow downward, cells are
``(row, col)`` pairs with both coordinates starting at 1.

The boxed shape of a partition ``lam`` is realized as the skew shape
``(lam[0] + 1, lam[0], lam[1], ...) / (lam[0],)``: the disconnected box sits
alone in row 1, column ``lam[0] + 1``, and ``lam`` occupies rows 2 and below.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .permcore import Permutation, PermMultiset, inverse, mod1

Cell = tuple[int, int]
Partition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition")
    return parts


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` in decreasing lexicographic order."""

    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam >= mu`` in dominance order (same size assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def addable_corners(lam: Sequence[int]) -> list[Partition]:
    """Partitions obtained from ``lam`` by adding one box."""
    lam = tuple(lam)
    out = []
    for i in range(len(lam) + 1):
        cur = lam[i] if i < len(lam) else 0
        if i == 0 or lam[i - 1] > cur:
            out.append(lam[:i] + (cur + 1,) + lam[i + 1:])
    return out


def hook_length_count(lam: Sequence[int]) -> int:
    """Number of SYT of straight shape ``lam`` via the hook length formula."""
    lam = tuple(lam)
    conj = conjugate(lam)
    hooks = prod(
        (lam[r] - c - 1) + (conj[c] - r - 1) + 1
        for r in range(len(lam))
        for c in range(lam[r])
    )
    return factorial(sum(lam)) // hooks


@dataclass(frozen=True)
class Shape:
    """A skew shape ``outer / inner``; straight when ``inner`` is empty."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer = check_partition(self.outer)
        inner = tuple(int(p) for p in self.inner)
        while inner and inner[-1] == 0:
            inner = inner[:-1]
        inner = check_partition(inner)
        if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
            raise ValueError(f"{inner} is not contained in {outer}")
        # a single box floating above a straight shape is moved to the canonical offset
        if len(inner) == 1 and len(outer) >= 2 and outer[0] == inner[0] + 1:
            lam = outer[1:]
            if inner[0] >= lam[0]:
                outer = (lam[0] + 1,) + lam
                inner = (lam[0],)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def straight(cls, lam: Sequence[int]) -> Shape:
        return cls(tuple(lam))

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """Cells in row-major order."""
        out = []
        for r, length in enumerate(self.outer, start=1):
            start = self.inner[r - 1] if r - 1 < len(self.inner) else 0
            out.extend((r, c) for c in range(start + 1, length + 1))
        return tuple(out)

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {cell: i for i, cell in enumerate(self.cells)}

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def boxed(self) -> bool:
        return (
            len(self.inner) == 1
            and len(self.outer) >= 2
            and self.outer[0] == self.inner[0] + 1
            and self.inner[0] == self.outer[1]
        )

    @property
    def kind(self) -> str:
        if self.boxed:
            return "boxed"
        return "skew" if self.inner else "straight"

    @property
    def base(self) -> Partition:
        """The partition ``lam`` of a boxed shape ``lam^box``."""
        if not self.boxed:
            raise ValueError(f"{self} is not a boxed shape")
        return self.outer[1:]

    @property
    def box_cell(self) -> Cell:
        if not self.boxed:
            raise ValueError(f"{self} is not a boxed shape")
        return (1, self.outer[0])

    def above(self, cell: Cell) -> Cell | None:
        nb = (cell[0] - 1, cell[1])
        return nb if nb in self.cell_set else None

    def left(self, cell: Cell) -> Cell | None:
        nb = (cell[0], cell[1] - 1)
        return nb if nb in self.cell_set else None

    def below(self, cell: Cell) -> Cell | None:
        nb = (cell[0] + 1, cell[1])
        return nb if nb in self.cell_set else None

    def right(self, cell: Cell) -> Cell | None:
        nb = (cell[0], cell[1] + 1)
        return nb if nb in self.cell_set else None

    def to_json(self) -> dict:
        if self.boxed:
            return {"lambda": list(self.base), "boxed": True}
        out: dict = {"lambda": list(self.outer), "boxed": False}
        if self.inner:
            out["mu"] = list(self.inner)
        return out

    @classmethod
    def from_json(cls, data: dict) -> Shape:
        lam = check_partition(data["lambda"])
        if data.get("boxed"):
            return boxed_shape(lam)
        return cls(lam, tuple(data.get("mu", ())))

    def __str__(self) -> str:
        if self.boxed:
            return f"{list(self.base)}^box"
        if self.inner:
            return f"{list(self.outer)}/{list(self.inner)}"
        return str(list(self.outer))


def boxed_shape(lam: Sequence[int]) -> Shape:
    """``lam`` with a disconnected box placed north-east of it."""
    lam = check_partition(lam)
    if not lam:
        raise ValueError("the boxed shape needs a nonempty partition")
    return Shape((lam[0] + 1,) + lam, (lam[0],))


@dataclass(frozen=True)
class Tableau:
    """A filling of a shape by ``1..n``, each letter once.

    ``values`` is aligned with ``shape.cells``.
    """

    shape: Shape
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != self.shape.size:
            raise ValueError(
                f"{len(values)} entries for a shape with {self.shape.size} cells"
            )
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"entries {values} are not 1..{len(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()) -> Tableau:
        inner = tuple(inner)
        outer = tuple(
            (inner[r] if r < len(inner) else 0) + len(row) for r, row in enumerate(rows)
        )
        while outer and outer[-1] == 0:
            outer = outer[:-1]
        return cls(Shape(outer, inner), tuple(v for row in rows for v in row))

    @classmethod
    def from_mapping(cls, shape: Shape, mapping: dict[Cell, int]) -> Tableau:
        return cls(shape, tuple(mapping[c] for c in shape.cells))

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, cell: Cell) -> int:
        return self.values[self.shape.index[cell]]

    @cached_property
    def positions(self) -> dict[int, Cell]:
        return {v: cell for cell, v in zip(self.shape.cells, self.values)}

    def mapping(self) -> dict[Cell, int]:
        return dict(zip(self.shape.cells, self.values))

    def row_of(self, v: int) -> int:
        return self.positions[v][0]

    def rows(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in self.shape.outer]
        for (r, _), v in zip(self.shape.cells, self.values):
            out[r - 1].append(v)
        return [tuple(row) for row in out]

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "rows": [list(r) for r in self.rows()]}

    @classmethod
    def from_json(cls, data: dict | str) -> Tableau:
        if isinstance(data, str):
            data = json.loads(data)
        shape = Shape.from_json(data["shape"])
        rows = [tuple(r) for r in data["rows"]]
        expected = [0] * len(shape.outer)
        for r, _ in shape.cells:
            expected[r - 1] += 1
        if [len(r) for r in rows] != expected:
            raise ValueError(f"rows {rows} do not fit the shape {shape}")
        return cls(shape, tuple(v for r in rows for v in r))

    def render(self) -> str:
        """ASCII drawing in English notation, blank where the shape has no cell."""
        width = len(str(self.n))
        lines = []
        for r, length in enumerate(self.shape.outer, start=1):
            parts = []
            for c in range(1, length + 1):
                cell = (r, c)
                parts.append(
                    str(self[cell]).rjust(width) if cell in self.shape.cell_set else " " * width
                )
            lines.append(" ".join(parts).rstrip())
        return "\n".join(lines)

    def __str__(self) -> str:
        return "/".join("".join(str(v) for v in row) for row in self.rows())


def boxed_tableau(box: int, rows: Sequence[Sequence[int]]) -> Tableau:
    """Tableau of shape ``lam^box`` with ``box`` in the disconnected cell and
    ``rows`` filling ``lam``."""
    lam = tuple(len(r) for r in rows)
    shape = boxed_shape(lam)
    return Tableau(shape, (box,) + tuple(v for r in rows for v in r))


def _increasing(t: Tableau, key) -> bool:
    shape = t.shape
    for cell, v in zip(shape.cells, t.values):
        for nb in (shape.right(cell), shape.below(cell)):
            if nb is not None and key(t[nb]) <= key(v):
                return False
    return True


def is_standard(t: Tableau) -> bool:
    return _increasing(t, lambda v: v)


def rotation_witnesses(t: Tableau) -> list[int]:
    """All ``k`` in ``1..n`` for which ``t`` increases in the order
    ``k+1 < ... < n < 1 < ... < k``."""
    n = t.n
    return [k for k in range(1, n + 1) if _increasing(t, lambda v, k=k: mod1(v - k, n))]


def is_rotated_standard(t: Tableau) -> bool:
    return bool(rotation_witnesses(t))


def add_mod(t: Tableau, k: int) -> Tableau:
    """``k + t``: add ``k`` modulo ``n`` to every entry."""
    n = t.n
    return Tableau(t.shape, tuple(mod1(v + k, n) for v in t.values))


def des_tableau(t: Tableau) -> frozenset[int]:
    if not is_standard(t):
        raise ValueError(f"{t} is not standard")
    pos = t.positions
    return frozenset(i for i in range(1, t.n) if pos[i + 1][0] > pos[i][0])


def cdes_rot(t: Tableau) -> frozenset[int]:
    """``{i in [n] : i+1 lies in a lower row than i}``, with ``n+1`` read as ``1``."""
    n = t.n
    pos = t.positions
    return frozenset(i for i in range(1, n + 1) if pos[mod1(i + 1, n)][0] > pos[i][0])


def des_rot(t: Tableau) -> frozenset[int]:
    """Descent set of a rotated tableau: its rotated cyclic descents below ``n``."""
    return cdes_rot(t) - {t.n}


def cdes_rot_prime(t: Tableau) -> frozenset[int]:
    """Like :func:`cdes_rot`, but ``i+1`` strictly west in the same row also counts."""
    n = t.n
    pos = t.positions
    out = set()
    for i in range(1, n + 1):
        (r, c), (r2, c2) = pos[i], pos[mod1(i + 1, n)]
        if r2 > r or (r2 == r and c2 < c):
            out.add(i)
    return frozenset(out)


def reading_word(t: Tableau) -> Permutation:
    """Rows read left to right, bottom row first."""
    return Permutation(tuple(v for row in reversed(t.rows()) for v in row))


def inverse_reading_word(t: Tableau) -> Permutation:
    return inverse(reading_word(t))


def delta(t: Tableau) -> int:
    """Entry of the disconnected box."""
    return t[t.shape.box_cell]


def enumerate_syt(shape: Shape | Sequence[int]) -> list[Tableau]:
    """All standard fillings, ordered lexicographically by reading word."""
    if not isinstance(shape, Shape):
        shape = Shape.straight(shape)
    n = shape.size
    filling: dict[Cell, int] = {}
    found: list[Tableau] = []

    def ready(cell: Cell) -> bool:
        return all(
            nb is None or nb in filling for nb in (shape.above(cell), shape.left(cell))
        )

    def fill(v: int) -> None:
        if v > n:
            found.append(Tableau.from_mapping(shape, filling))
            return
        for cell in shape.cells:
            if cell not in filling and ready(cell):
                filling[cell] = v
                fill(v + 1)
                del filling[cell]

    fill(1)
    found.sort(key=lambda t: reading_word(t).word)
    return found


def phi(tau: Permutation, lam: Sequence[int]) -> Tableau:
    """The tableau of shape ``lam^box`` whose reading word is ``tau^{-1}``.

    Only defined on horizontal rotations of inverse reading words of SYT(lam);
    anything else raises ``ValueError``.
    """
    lam = check_partition(lam)
    shape = boxed_shape(lam)
    if tau.n != shape.size:
        raise ValueError(f"{tau} has size {tau.n}, shape {shape} has {shape.size} cells")
    word = inverse(tau).word
    rows, pos = [], 0
    for length in reversed(lam):
        rows.append(word[pos:pos + length])
        pos += length
    rows.reverse()
    box = word[pos]
    t = boxed_tableau(box, rows)
    base = add_mod(t, -box)
    if not is_standard(base) or delta(base) != t.n:
        raise ValueError(f"{tau} is not a horizontal rotation of an element of A_{list(lam)}")
    return t


def a_lambda(lam: Sequence[int]) -> PermMultiset:
    """Inverse reading words of the SYT of shape ``lam``."""
    lam = check_partition(lam)
    return PermMultiset.from_perms(
        (inverse_reading_word(q) for q in enumerate_syt(Shape.straight(lam))), sum(lam)
    )
