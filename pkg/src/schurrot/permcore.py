"""Permutations in one-line notation, descent statistics and horizontal rotations.

Positions and values are 1-based.  Residues mod ``n`` are represented in
``{1, ..., n}``, so residue 0 is written as ``n``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator

DescentSet = frozenset


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of ``{1, ..., n}`` in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        if not word:
            raise ValueError("a permutation needs at least one letter")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(i) = self(other(i))
        if other.n != self.n:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.word[j - 1] for j in other.word))

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self)!r})"

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return parse_perm(text)


def parse_perm(text: str) -> Permutation:
    """Parse ``"314256"`` or ``"3,1,4,2,5,6"``."""
    text = text.strip()
    try:
        if "," in text:
            word = tuple(int(tok) for tok in text.split(","))
        else:
            word = tuple(int(ch) for ch in text)
        return Permutation(word)
    except ValueError as exc:
        raise ValueError(f"malformed permutation {text!r}: {exc}") from None


def format_perm(p: Permutation) -> str:
    if p.n <= 9:
        return "".join(str(x) for x in p.word)
    return ",".join(str(x) for x in p.word)


def format_set(d: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(d)) + "}"


def mod1(x: int, n: int) -> int:
    """Reduce ``x`` into ``{1, ..., n}``."""
    return (x - 1) % n + 1


def shift_set(d: Iterable[int], k: int, n: int) -> frozenset[int]:
    """``k + D`` with addition mod ``n`` (0 identified with ``n``)."""
    return frozenset(mod1(x + k, n) for x in d)


def descent_set(p: Permutation) -> frozenset[int]:
    w = p.word
    return frozenset(i for i in range(1, p.n) if w[i - 1] > w[i])


def cyclic_descent_set(p: Permutation) -> frozenset[int]:
    if p.n < 2:
        raise ValueError("cyclic descents need n >= 2")
    des = descent_set(p)
    if p.word[-1] > p.word[0]:
        return des | {p.n}
    return des


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.word, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


_inverse = inverse


def long_cycle(n: int, power: int = 1) -> Permutation:
    """The power ``c**power`` of the cycle ``c = (1, 2, ..., n)``."""
    return Permutation(tuple(mod1(i + power, n) for i in range(1, n + 1)))


def rotate(p: Permutation, k: int) -> Permutation:
    """Horizontal rotation ``p * c**k``, i.e. ``i -> p(i + k)``."""
    n = p.n
    return Permutation(tuple(p.word[mod1(i + k, n) - 1] for i in range(1, n + 1)))


def embed(p: Permutation) -> Permutation:
    """View ``p`` in S_{n-1} as the permutation of S_n fixing ``n``."""
    return Permutation(p.word + (p.n + 1,))


class PermMultiset:
    """A multiset of permutations of a common size ``n``."""

    def __init__(self, n: int, entries: dict[Permutation, int] | None = None):
        self.n = n
        self.entries: Counter[Permutation] = Counter()
        for perm, mult in (entries or {}).items():
            self.add(perm, mult)

    @classmethod
    def from_perms(cls, perms: Iterable[Permutation], n: int | None = None) -> PermMultiset:
        perms = list(perms)
        if n is None:
            if not perms:
                raise ValueError("cannot infer n from an empty collection")
            n = perms[0].n
        ms = cls(n)
        for p in perms:
            ms.add(p)
        return ms

    def add(self, perm: Permutation, mult: int = 1) -> None:
        if perm.n != self.n:
            raise ValueError(f"{perm} has size {perm.n}, expected {self.n}")
        if mult < 0:
            raise ValueError("multiplicities must be nonnegative")
        if mult:
            self.entries[perm] += mult

    def __iter__(self) -> Iterator[Permutation]:
        return iter(sorted(self.entries))

    def items(self) -> list[tuple[Permutation, int]]:
        return sorted(self.entries.items())

    def __len__(self) -> int:
        return sum(self.entries.values())

    def __contains__(self, perm: object) -> bool:
        return perm in self.entries

    def __getitem__(self, perm: Permutation) -> int:
        return self.entries.get(perm, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermMultiset):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __add__(self, other: PermMultiset) -> PermMultiset:
        if other.n != self.n:
            raise ValueError("cannot add multisets of different sizes")
        out = PermMultiset(self.n, dict(self.entries))
        for p, m in other.entries.items():
            out.add(p, m)
        return out

    def __repr__(self) -> str:
        body = ", ".join(
            f"{p}" if m == 1 else f"{p}^{m}" for p, m in self.items()
        )
        return f"PermMultiset(n={self.n}, {{{body}}})"

    def to_json(self) -> list[dict]:
        return [{"perm": format_perm(p), "mult": m} for p, m in self.items()]

    @classmethod
    def from_json(cls, data: list[dict] | str, n: int | None = None) -> PermMultiset:
        if isinstance(data, str):
            data = json.loads(data)
        pairs = [(parse_perm(str(rec["perm"])), int(rec.get("mult", 1))) for rec in data]
        if n is None:
            if not pairs:
                raise ValueError("cannot infer n from an empty multiset")
            n = pairs[0][0].n
        return cls(n, _sum_pairs(pairs))


def _sum_pairs(pairs) -> Counter:
    acc: Counter = Counter()
    for p, m in pairs:
        acc[p] += m
    return acc


def symmetric_group(n: int) -> Iterator[Permutation]:
    for w in permutations(range(1, n + 1)):
        yield Permutation(w)


def cyclic_group(n: int) -> PermMultiset:
    """``C_n = {c**k : 0 <= k < n}``."""
    return PermMultiset.from_perms((long_cycle(n, k) for k in range(n)), n)


def horizontal_closure(a: PermMultiset) -> PermMultiset:
    """``A C_n``: all horizontal rotations of the members of ``A``, embedded in S_n."""
    n = a.n + 1
    out = PermMultiset(n)
    for p, mult in a.entries.items():
        hat = embed(p)
        for k in range(n):
            out.add(rotate(hat, -k), mult)
    return out


def left_closure(a: PermMultiset) -> PermMultiset:
    """``C_n A``: the vertical rotations ``c**k * p`` of the embedded members of ``A``."""
    n = a.n + 1
    out = PermMultiset(n)
    for p, mult in a.entries.items():
        hat = embed(p)
        for k in range(n):
            out.add(long_cycle(n, k) * hat, mult)
    return out


def descent_class(n: int, j: Iterable[int], inverse: bool = False) -> PermMultiset:
    """``D_{n,J}``, or ``D_{n,J}^{-1}`` when ``inverse`` is set."""
    j = frozenset(j)
    if not j <= set(range(1, n)):
        raise ValueError(f"J={format_set(j)} is not a subset of [{n - 1}]")
    members = (p for p in symmetric_group(n) if descent_set(p) == j)
    if inverse:
        members = (_inverse(p) for p in members)
    return PermMultiset.from_perms(members, n)


def subsets(n: int) -> Iterator[frozenset[int]]:
    """All subsets of ``[n]``, by size then lexicographically."""
    for size in range(n + 1):
        for combo in combinations(range(1, n + 1), size):
            yield frozenset(combo)


def rotated_descent_formula(d: Iterable[int], n: int, k: int) -> frozenset[int]:
    """Descent set of ``embed(s) * c**(-k)`` from ``Des(s)`` alone, for ``s`` in S_{n-1}.

    Only ``1 <= k <= n - 1``; for ``k = 0`` the rotation is trivial and the
    descent set is ``d`` itself.
    """
    d = frozenset(d)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} outside 1..{n - 1}")
    if not d <= set(range(1, n - 1)):
        raise ValueError(f"{format_set(d)} is not a descent set in S_{n - 1}")
    return (shift_set(d, k, n) - {n}) | {k}


def rsk(p: Permutation):
    """Row-insertion Robinson-Schensted.  Returns ``(P, Q)`` as tableaux."""
    from .tableaux import Tableau

    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(p.word, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[r]
            # first entry larger than x
            pos = next((i for i, y in enumerate(row) if y > x), None)
            if pos is None:
                row.append(x)
                q_rows[r].append(step)
                break
            row[pos], x = x, row[pos]
            r += 1
    return Tableau.from_rows(p_rows), Tableau.from_rows(q_rows)
