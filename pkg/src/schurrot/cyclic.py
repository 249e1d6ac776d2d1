"""Straightening of rotated tableaux of boxed shape and the cyclic action it induces.

``jdt`` takes ``k + T`` (``T`` standard of shape ``lam^box`` with ``n`` in the
box) to a standard tableau with ``k`` in the box, by repeatedly switching the
smallest *short* entry (one smaller than its upper or left neighbour) with
the larger of those neighbours.  ``ijdt`` undoes it by switching the largest
*tall* entry with the smaller of its lower and right neighbours.

Both record a :class:`StraighteningTrace`.  With ``check=True`` the trace is
audited as it is produced: every switch must pair a moving entry with a
non-moving one, the two restrictions must stay standard, and moving entries
must be handled one at a time in order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterator, Sequence

from .permcore import (
    Permutation,
    cyclic_descent_set,
    descent_set,
    format_set,
    rotate,
    shift_set,
    symmetric_group,
)
from .tableaux import (
    Cell,
    Shape,
    Tableau,
    add_mod,
    boxed_shape,
    cdes_rot,
    cdes_rot_prime,
    delta,
    des_rot,
    des_tableau,
    enumerate_syt,
    is_standard,
)


class DomainError(ValueError):
    """Input outside the domain of a straightening map."""


class NoStep(ValueError):
    """An elementary step was requested on a tableau that admits none."""


class InvariantError(AssertionError):
    pass


class NotClosed(ValueError):
    """A group action leaves the object list it was given."""


@dataclass(frozen=True)
class Step:
    entry: int
    partner: int
    direction: str
    before: Cell
    after: Cell


@dataclass
class StraighteningTrace:
    initial: Tableau
    final: Tableau | None = None
    moving: frozenset[int] = frozenset()
    steps: list[Step] = field(default_factory=list)

    def states(self) -> Iterator[Tableau]:
        """The tableau before the first step, after each step, in order."""
        t = self.initial
        mapping = t.mapping()
        yield t
        for s in self.steps:
            mapping[s.before], mapping[s.after] = mapping[s.after], mapping[s.before]
            yield Tableau.from_mapping(t.shape, mapping)


_NW = (("north", -1, 0), ("west", 0, -1))
_SE = (("south", 1, 0), ("east", 0, 1))


def _switch(shape: Shape, mapping: dict, pos: dict, v: int, cell: Cell, target: Cell, direction: str) -> Step:
    w = mapping[target]
    mapping[cell], mapping[target] = w, v
    pos[v], pos[w] = target, cell
    return Step(v, w, direction, cell, target)


def _ele(shape: Shape, mapping: dict, pos: dict, n: int) -> Step | None:
    for v in range(1, n + 1):
        r, c = pos[v]
        best = None
        for direction, dr, dc in _NW:
            nb = (r + dr, c + dc)
            if nb in shape.cell_set and mapping[nb] > v:
                if best is None or mapping[nb] > mapping[best[1]]:
                    best = (direction, nb)
        if best is not None:
            return _switch(shape, mapping, pos, v, (r, c), best[1], best[0])
    return None


def _ele_inv(shape: Shape, mapping: dict, pos: dict, n: int) -> Step | None:
    for v in range(n, 0, -1):
        r, c = pos[v]
        best = None
        for direction, dr, dc in _SE:
            nb = (r + dr, c + dc)
            if nb in shape.cell_set and mapping[nb] < v:
                if best is None or mapping[nb] < mapping[best[1]]:
                    best = (direction, nb)
        if best is not None:
            return _switch(shape, mapping, pos, v, (r, c), best[1], best[0])
    return None


def _apply_once(t: Tableau, stepper) -> Tableau:
    mapping = t.mapping()
    pos = dict(t.positions)
    if stepper(t.shape, mapping, pos, t.n) is None:
        raise NoStep(f"{t} is already standard")
    return Tableau.from_mapping(t.shape, mapping)


def elementary_step(t: Tableau) -> Tableau:
    """Switch the minimal short entry with the larger of its upper/left neighbours."""
    return _apply_once(t, _ele)


def elementary_step_inv(t: Tableau) -> Tableau:
    """Switch the maximal tall entry with the smaller of its lower/right neighbours."""
    return _apply_once(t, _ele_inv)


def _restriction_standard(pos: dict, entries: Sequence[int]) -> bool:
    # no smaller entry weakly south-east of a larger one
    ordered = sorted(entries)
    for i, a in enumerate(ordered):
        ra, ca = pos[a]
        for b in ordered[i + 1:]:
            rb, cb = pos[b]
            if ra >= rb and ca >= cb:
                return False
    return True


def _is_left_justified(cells: set[Cell], top_row: int) -> bool:
    for r, c in cells:
        if r < top_row:
            return False
        if c > 1 and (r, c - 1) not in cells:
            return False
        if r > top_row and (r - 1, c) not in cells:
            return False
    return True


class _Auditor:
    def __init__(self, trace: StraighteningTrace, shape: Shape, increasing: bool):
        self.trace = trace
        self.shape = shape
        self.increasing = increasing
        self.moving = trace.moving
        self.non_moving = [v for v in range(1, trace.initial.n + 1) if v not in trace.moving]
        self.last_entry: int | None = None

    def fail(self, msg: str):
        raise InvariantError(f"{msg} (straightening {self.trace.initial})")

    def state(self, pos: dict) -> None:
        if not _restriction_standard(pos, sorted(self.moving)):
            self.fail("restriction to moving entries is not standard")
        if not _restriction_standard(pos, self.non_moving):
            self.fail("restriction to non-moving entries is not standard")

    def step(self, step: Step, pos_before: dict) -> None:
        if (step.entry in self.moving) == (step.partner in self.moving):
            self.fail(f"step {step} does not pair a moving with a non-moving entry")
        if step.entry not in self.moving:
            self.fail(f"step {step} moves a non-moving entry")
        if self.last_entry is not None and step.entry != self.last_entry:
            ahead = step.entry > self.last_entry if self.increasing else step.entry < self.last_entry
            if not ahead:
                self.fail(f"entry {step.entry} moved after {self.last_entry}")
        if self.increasing and step.entry != self.last_entry:
            # entries below the one starting to move must form a straight SYT inside lam
            done = {pos_before[v] for v in range(1, step.entry)}
            if not _is_left_justified(done, top_row=2):
                self.fail(f"entries below {step.entry} are not left-justified")
        self.last_entry = step.entry


def _straighten(r: Tableau, moving: frozenset[int], stepper, check: bool, increasing: bool):
    trace = StraighteningTrace(initial=r, moving=moving)
    mapping = r.mapping()
    pos = dict(r.positions)
    auditor = _Auditor(trace, r.shape, increasing) if check else None
    ceiling = r.n * r.n
    while True:
        if auditor:
            auditor.state(pos)
            before = dict(pos)
        step = stepper(r.shape, mapping, pos, r.n)
        if step is None:
            break
        if auditor:
            auditor.step(step, before)
        trace.steps.append(step)
        if len(trace.steps) > ceiling:
            raise InvariantError(f"straightening {r} exceeded {ceiling} steps")
    trace.final = Tableau.from_mapping(r.shape, mapping)
    return trace.final, trace


def _check_boxed(t: Tableau) -> None:
    if not t.shape.boxed:
        raise DomainError(f"{t} does not have a boxed shape")


def jdt(r: Tableau, check: bool = False) -> tuple[Tableau, StraighteningTrace]:
    """Straighten ``k + T`` into the standard tableau with ``k`` in the box."""
    _check_boxed(r)
    n = r.n
    k = delta(r) % n
    if not is_standard(add_mod(r, -k)):
        raise DomainError(f"{r} is not of the form k+T with T standard and n in the box")
    out, trace = _straighten(r, frozenset(range(1, k)), _ele, check, increasing=True)
    if check and (not is_standard(out) or delta(out) != delta(r)):
        raise InvariantError(f"jdt({r}) = {out} is not standard with box {delta(r)}")
    return out, trace


def ijdt(r: Tableau, k: int, check: bool = False) -> tuple[Tableau, StraighteningTrace]:
    """Straighten ``-k + P`` (``P`` standard, ``k`` in its box) back to a standard tableau."""
    _check_boxed(r)
    n = r.n
    k %= n
    p = add_mod(r, k)
    if not is_standard(p) or delta(p) % n != k:
        raise DomainError(f"{r} is not of the form -k+P with P standard and k={k} in the box")
    moving = frozenset(range(n + 1 - k, n)) if k else frozenset()
    out, trace = _straighten(r, moving, _ele_inv, check, increasing=False)
    if check and (not is_standard(out) or delta(out) != n):
        raise InvariantError(f"ijdt({r}) = {out} is not standard with n in the box")
    return out, trace


def jdt_inverse(p: Tableau, check: bool = False) -> Tableau:
    """The rotated tableau ``d + ijdt(-d + p)``, ``d`` the box entry of ``p``."""
    _check_boxed(p)
    if not is_standard(p):
        raise DomainError(f"{p} is not standard")
    k = delta(p) % p.n
    straight, _ = ijdt(add_mod(p, -k), k, check=check)
    return add_mod(straight, k)


def cdes_boxed(p: Tableau) -> frozenset[int]:
    """Cyclic descent set of a standard tableau of boxed shape."""
    return cdes_rot(jdt_inverse(p))


def psi_generator(p: Tableau) -> Tableau:
    return jdt(add_mod(jdt_inverse(p), 1))[0]


def psi(p: Tableau, k: int) -> Tableau:
    """``k``-fold application of ``P -> jdt(1 + jdt^{-1}(P))``."""
    if not is_standard(p):
        raise DomainError(f"{p} is not standard")
    _check_boxed(p)
    for _ in range(k % p.n):
        p = psi_generator(p)
    return p


def psi_direct(p: Tableau, k: int) -> Tableau:
    """``jdt(k + jdt^{-1}(P))`` in one straightening."""
    return jdt(add_mod(jdt_inverse(p), k))[0]


def psi_orbits(lam: Sequence[int]) -> list[list[Tableau]]:
    """Orbits of the cyclic action on SYT(lam^box), each starting at its
    first element in enumeration order."""
    seen: set[Tableau] = set()
    orbits = []
    for p in enumerate_syt(boxed_shape(lam)):
        if p in seen:
            continue
        orbit = [p]
        q = psi_generator(p)
        while q != p:
            orbit.append(q)
            q = psi_generator(q)
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def orbit_of(p: Tableau) -> list[Tableau]:
    orbit = [p]
    q = psi_generator(p)
    while q != p:
        orbit.append(q)
        q = psi_generator(q)
    return orbit


@dataclass
class CyclicExtensionWitness:
    """Objects with a descent map, a cyclic descent map and a Z_n action."""

    n: int
    objects: list
    des: Callable[[Hashable], frozenset]
    cdes: Callable[[Hashable], frozenset]
    action: Callable[[int, Hashable], Hashable]
    name: str = ""


@dataclass
class ExtensionReport:
    name: str
    n: int
    checked: int
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_extension(w: CyclicExtensionWitness, max_violations: int = 20) -> ExtensionReport:
    """Check the action laws and both cyclic-descent axioms on every object."""
    n = w.n
    universe = set(w.objects)
    table: dict = {}
    for x in w.objects:
        for k in range(n):
            y = w.action(k, x)
            if y not in universe:
                raise NotClosed(f"action({k}, {x}) = {y} leaves the object list")
            table[k, x] = y
    violations: list[str] = []

    def report(msg: str) -> None:
        if len(violations) < max_violations:
            violations.append(msg)

    for x in w.objects:
        if table[0, x] != x:
            report(f"action(0, {x}) = {table[0, x]} is not the identity")
        if w.action(n, x) != x:
            report(f"action({n}, {x}) is not the identity")
        for a in range(n):
            for b in range(n):
                if table[a, table[b, x]] != table[(a + b) % n, x]:
                    report(f"action({a}) after action({b}) differs from action({(a + b) % n}) on {x}")
        cd = w.cdes(x)
        if cd - {n} != w.des(x):
            report(f"cdes({x}) = {format_set(cd)} does not restrict to des = {format_set(w.des(x))}")
        for k in range(n):
            got = w.cdes(table[k, x])
            want = shift_set(cd, k, n)
            if got != want:
                report(f"cdes(action({k}, {x})) = {format_set(got)}, expected {format_set(want)}")
    return ExtensionReport(w.name, n, len(w.objects), violations)


def permutation_witness(n: int) -> CyclicExtensionWitness:
    """S_n with horizontal rotation ``p -> p c^{-k}``."""
    return CyclicExtensionWitness(
        n=n,
        objects=list(symmetric_group(n)),
        des=descent_set,
        cdes=cyclic_descent_set,
        action=lambda k, p: rotate(p, -k),
        name=f"permutations of size {n}, rotation",
    )


def rotated_syt_witness(shape: Shape | Sequence[int]) -> CyclicExtensionWitness:
    """Rotated SYT of a fixed shape with addition mod ``n``."""
    if not isinstance(shape, Shape):
        shape = Shape.straight(shape)
    n = shape.size
    objects = sorted(
        {add_mod(t, k) for t in enumerate_syt(shape) for k in range(n)},
        key=lambda t: t.values,
    )
    return CyclicExtensionWitness(
        n=n,
        objects=objects,
        des=des_rot,
        cdes=cdes_rot,
        action=lambda k, t: add_mod(t, k),
        name=f"rotated SYT of shape {shape}, addition mod n",
    )


def boxed_syt_witness(lam: Sequence[int]) -> CyclicExtensionWitness:
    """SYT(lam^box) with the straightening action and its cyclic descents."""
    shape = boxed_shape(lam)
    cache: dict = {}

    def cdes(p):
        if p not in cache:
            cache[p] = cdes_boxed(p)
        return cache[p]

    return CyclicExtensionWitness(
        n=shape.size,
        objects=enumerate_syt(shape),
        des=des_tableau,
        cdes=cdes,
        action=lambda k, p: psi(p, k),
        name=f"SYT of shape {shape}, straightening action",
    )


def rot_prime_disagreements(shape: Shape | Sequence[int]) -> list[Tableau]:
    """Rotated SYT of ``shape`` on which the two rotated cyclic descent rules differ."""
    if not isinstance(shape, Shape):
        shape = Shape.straight(shape)
    return [
        t
        for t in rotated_syt_witness(shape).objects
        if cdes_rot(t) != cdes_rot_prime(t)
    ]
