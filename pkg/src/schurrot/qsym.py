"""Exact quasisymmetric and symmetric function arithmetic in degree ``n``.

Three bases are used:

* ``F`` (fundamental quasisymmetric), indexed by subsets ``D`` of ``[n-1]``;
* ``M`` (monomial quasisymmetric), indexed by compositions of ``n``;
* ``s`` (Schur), indexed by partitions of ``n``.

All coefficients are Python ints.  Explicit polynomials in finitely many
variables (``f_to_polynomial``) serve as an independent oracle.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from itertools import combinations_with_replacement, permutations
from typing import Iterable, Sequence

from .permcore import PermMultiset, descent_set, subsets
from .tableaux import Shape, check_partition, enumerate_syt, addable_corners, des_tableau, partitions


class NotSymmetric(ValueError):
    pass


class _Expansion:
    basis = "?"

    def __init__(self, n: int, coeffs: dict | None = None):
        self.n = n
        self.coeffs: dict = {}
        for key, c in (coeffs or {}).items():
            self._accumulate(self._key(key), c)

    @staticmethod
    def _key(key):
        return key

    def _accumulate(self, key, c: int) -> None:
        total = self.coeffs.get(key, 0) + c
        if total:
            self.coeffs[key] = total
        else:
            self.coeffs.pop(key, None)

    def _same_space(self, other) -> None:
        if type(other) is not type(self) or other.n != self.n:
            raise ValueError(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other):
        self._same_space(other)
        out = type(self)(self.n, self.coeffs)
        for k, c in other.coeffs.items():
            out._accumulate(k, c)
        return out

    def __neg__(self):
        return type(self)(self.n, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar: int):
        return type(self)(self.n, {k: scalar * c for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, self.n, frozenset(self.coeffs.items())))

    def __getitem__(self, key) -> int:
        return self.coeffs.get(self._key(key), 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def sorted_terms(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kv: self._order(kv[0]))

    def _order(self, key):
        return key

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "n": self.n,
            "terms": [{"index": sorted(k) if isinstance(k, frozenset) else list(k), "coeff": c}
                      for k, c in self.sorted_terms()],
        }

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, {self})"


def _render(terms: list[tuple[str, int]]) -> str:
    if not terms:
        return "0"
    out = ""
    for i, (label, c) in enumerate(terms):
        mag = abs(c)
        body = label if mag == 1 else f"{mag}*{label}"
        if i == 0:
            out = body if c > 0 else f"-{body}"
        else:
            out += f" + {body}" if c > 0 else f" - {body}"
    return out


class QSymF(_Expansion):
    """Degree-``n`` quasisymmetric function in the fundamental basis."""

    basis = "F"

    @staticmethod
    def _key(key):
        return frozenset(key)

    def _order(self, key):
        return (len(key), sorted(key))

    def __str__(self) -> str:
        return _render([(f"F{{{','.join(map(str, sorted(k)))}}}", c) for k, c in self.sorted_terms()])


class MExpansion(_Expansion):
    """Degree-``n`` quasisymmetric function in the monomial basis."""

    basis = "M"

    @staticmethod
    def _key(key):
        return tuple(key)

    def _order(self, key):
        return (len(key), key)

    def __str__(self) -> str:
        return _render([(f"M({','.join(map(str, k))})", c) for k, c in self.sorted_terms()])


class SchurExpansion(_Expansion):
    """Symmetric function of degree ``n`` in the Schur basis."""

    basis = "s"

    @staticmethod
    def _key(key):
        return check_partition(key)

    def _order(self, key):
        return tuple(-p for p in key)

    def __str__(self) -> str:
        return _render([(f"s[{','.join(map(str, k))}]", c) for k, c in self.sorted_terms()])


def q_of(b: PermMultiset) -> QSymF:
    """Sum of ``F_{n, Des(p)}`` over ``b``, counted with multiplicity."""
    tally: Counter = Counter()
    for p, mult in b.entries.items():
        if p.n != b.n:
            raise ValueError(f"{p} does not have size {b.n}")
        tally[descent_set(p)] += mult
    return QSymF(b.n, tally)


def fundamental(n: int, d: Iterable[int]) -> QSymF:
    return QSymF(n, {frozenset(d): 1})


def composition_of(d: Iterable[int], n: int) -> tuple[int, ...]:
    """Composition of ``n`` whose partial sums are the elements of ``d``."""
    cuts = [0] + sorted(d) + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def subset_of(alpha: Sequence[int]) -> frozenset[int]:
    out, acc = set(), 0
    for part in alpha[:-1]:
        acc += part
        out.add(acc)
    return frozenset(out)


def compositions(n: int) -> list[tuple[int, ...]]:
    return [composition_of(d, n) for d in subsets(n - 1)]


def f_to_m(q: QSymF) -> MExpansion:
    """``F_D = sum of M_{comp(E)}`` over all ``E`` containing ``D``."""
    n = q.n
    out = MExpansion(n)
    for d, c in q.coeffs.items():
        free = sorted(set(range(1, n)) - d)
        for extra in subsets(len(free)):
            e = d | {free[i - 1] for i in extra}
            out._accumulate(composition_of(e, n), c)
    return out


def m_to_f(m: MExpansion) -> QSymF:
    """Inverse of :func:`f_to_m` by Moebius inversion on the subset lattice."""
    n = m.n
    out = QSymF(n)
    for alpha, c in m.coeffs.items():
        e = subset_of(alpha)
        free = sorted(set(range(1, n)) - e)
        for extra in subsets(len(free)):
            out._accumulate(e | {free[i - 1] for i in extra}, c * (-1) ** len(extra))
    return out


@lru_cache(maxsize=None)
def _fundamental_polynomial(n: int, d: frozenset[int], m: int) -> dict[tuple[int, ...], int]:
    poly: Counter = Counter()
    for idx in combinations_with_replacement(range(m), n):
        if all(idx[j - 1] < idx[j] for j in d):
            exps = [0] * m
            for i in idx:
                exps[i] += 1
            poly[tuple(exps)] += 1
    return dict(poly)


def f_to_polynomial(q: QSymF, m: int) -> dict[tuple[int, ...], int]:
    """Expand ``q`` as a polynomial in ``x_1..x_m``: exponent vector -> coefficient."""
    if m < 1:
        raise ValueError("need at least one variable")
    poly: Counter = Counter()
    for d, c in q.coeffs.items():
        for exps, k in _fundamental_polynomial(q.n, d, m).items():
            poly[exps] += c * k
    return {e: c for e, c in poly.items() if c}


def poly_mul(a: dict, b: dict) -> dict:
    out: Counter = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


def _arrangements(exps: tuple[int, ...]) -> int:
    return factorial(len(exps)) // prod(factorial(k) for k in Counter(exps).values())


def is_symmetric_polynomial(poly: dict) -> bool:
    """True iff every rearrangement of an exponent vector carries the same coefficient."""
    orbits: Counter = Counter()
    for e, c in poly.items():
        canon = tuple(sorted(e, reverse=True))
        if poly.get(canon, 0) != c:
            return False
        orbits[canon] += 1
    return all(count == _arrangements(canon) for canon, count in orbits.items())


def is_symmetric(q: QSymF) -> bool:
    """Symmetric iff rearranged compositions carry equal ``M`` coefficients."""
    m = f_to_m(q)
    seen: set = set()
    for alpha in m.coeffs:
        lam = tuple(sorted(alpha, reverse=True))
        if lam in seen:
            continue
        seen.add(lam)
        c = m[lam]
        if any(m[beta] != c for beta in set(permutations(lam))):
            return False
    return True


def schur_in_f(shape: Shape | Sequence[int]) -> QSymF:
    """``s_shape`` as the descent generating function of its SYT."""
    if not isinstance(shape, Shape):
        shape = Shape.straight(shape)
    tally: Counter = Counter(des_tableau(t) for t in enumerate_syt(shape))
    return QSymF(shape.size, tally)


def schur_to_f(e: SchurExpansion) -> QSymF:
    out = QSymF(e.n)
    for lam, c in e.coeffs.items():
        out = out + c * schur_in_f(lam)
    return out


def ssyt(lam: Sequence[int], content: Sequence[int]):
    """Semistandard tableaux of shape ``lam`` and the given content, as row tuples.

    Built by adding the letters ``1, 2, ...`` as successive horizontal strips.
    """
    lam = tuple(lam)
    rows0 = tuple(() for _ in lam)

    def extend(rows, letter):
        if letter > len(content):
            if tuple(len(r) for r in rows) == lam:
                yield rows
            return
        count = content[letter - 1]
        yield from place(rows, letter, 0, count)

    def place(rows, letter, r, left):
        # choose how many copies of `letter` go in row r, top to bottom
        if r == len(lam):
            if left == 0:
                yield from extend(rows, letter + 1)
            return
        cur = len(rows[r])
        cap = lam[r] - cur
        for k in range(min(cap, left), -1, -1):
            # new cells in row r sit in columns cur..cur+k-1; the row above must
            # already hold a strictly smaller letter there
            if r > 0 and k:
                above = rows[r - 1]
                if len(above) < cur + k or above[cur + k - 1] >= letter:
                    continue
            new = rows[:r] + (rows[r] + (letter,) * k,) + rows[r + 1:]
            yield from place(new, letter, r + 1, left - k)

    yield from extend(rows0, 1)


@lru_cache(maxsize=None)
def kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if sum(lam) != sum(mu):
        return 0
    return sum(1 for _ in ssyt(lam, mu))


def schur_in_m(lam: Sequence[int]) -> MExpansion:
    """``s_lam = sum over compositions alpha of K_{lam, sort(alpha)} M_alpha``."""
    lam = check_partition(lam)
    n = sum(lam)
    out = MExpansion(n)
    for alpha in compositions(n):
        out._accumulate(alpha, kostka(lam, tuple(sorted(alpha, reverse=True))))
    return out


def schur_expand(q: QSymF) -> SchurExpansion:
    """Schur expansion of a symmetric ``q``; raises :class:`NotSymmetric` otherwise."""
    if not is_symmetric(q):
        raise NotSymmetric("not symmetric")
    n = q.n
    m = f_to_m(q)
    # lexicographic order on partitions is a linear extension of dominance
    remainder = {lam: m[lam] for lam in partitions(n)}
    out = SchurExpansion(n)
    for lam in partitions(n):
        a = remainder[lam]
        if not a:
            continue
        out._accumulate(lam, a)
        for mu in partitions(n):
            remainder[mu] -= a * kostka(lam, mu)
    check = m
    for lam, c in out.coeffs.items():
        check = check - c * schur_in_m(lam)
    if check:
        raise RuntimeError(f"Schur expansion left a nonzero remainder {check}")
    return out


def is_schur_positive(q: QSymF) -> bool:
    if not is_symmetric(q):
        return False
    return all(c >= 0 for c in schur_expand(q).coeffs.values())


def pieri_s1(e: SchurExpansion) -> SchurExpansion:
    """Multiply by ``s_1``: each ``s_lam`` becomes the sum over its addable corners."""
    out = SchurExpansion(e.n + 1)
    for lam, c in e.coeffs.items():
        for mu in addable_corners(lam):
            out._accumulate(mu, c)
    return out
