"""Exhaustive and seeded checks of the rotation, straightening and cyclic descent results.

Each ``check_*`` function returns a :class:`Check`; suites bundle them under
the statement they verify.  ``nmax`` always bounds ``n``, the size of the
rotated permutations and of the boxed tableaux (so ``lam`` ranges over
partitions of at most ``nmax - 1``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .cyclic import (
    boxed_syt_witness,
    cdes_boxed,
    ijdt,
    jdt,
    jdt_inverse,
    permutation_witness,
    psi,
    psi_direct,
    psi_orbits,
    rotated_syt_witness,
    verify_extension,
)
from .permcore import (
    Permutation,
    PermMultiset,
    cyclic_descent_set,
    cyclic_group,
    descent_class,
    descent_set,
    format_perm,
    format_set,
    horizontal_closure,
    inverse,
    left_closure,
    rotate,
    rotated_descent_formula,
    rsk,
    shift_set,
    subsets,
    symmetric_group,
)
from .qsym import (
    QSymF,
    SchurExpansion,
    f_to_polynomial,
    is_schur_positive,
    is_symmetric,
    poly_mul,
    q_of,
    schur_expand,
    pieri_s1,
    schur_in_f,
)
from .tableaux import (
    a_lambda,
    add_mod,
    boxed_shape,
    cdes_rot,
    cdes_rot_prime,
    delta,
    des_rot,
    des_tableau,
    enumerate_syt,
    inverse_reading_word,
    partitions,
    phi,
)


@dataclass
class Check:
    name: str
    scope: str
    passed: bool
    counterexample: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "scope": self.scope, "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  counterexample: {self.counterexample}" if self.counterexample else ""
        return f"[{status}] {self.name} ({self.scope}){tail}"


@dataclass
class SuiteReport:
    suite: str
    statement: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "statement": self.statement,
            "pass": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }

    def text(self) -> str:
        lines = [f"== {self.suite}: {self.statement}"]
        lines += [c.line() for c in self.checks]
        return "\n".join(lines)


def _first_failure(items, test: Callable) -> str | None:
    for item in items:
        msg = test(item)
        if msg:
            return msg
    return None


def _check(name: str, scope: str, items, test: Callable) -> Check:
    bad = _first_failure(items, test)
    return Check(name, scope, bad is None, bad)


def _lambdas(nmax: int, nmin: int = 2):
    for n in range(nmin, nmax + 1):
        for lam in partitions(n - 1):
            yield n, lam


# -- rotations and Schur positivity ------------------------------------------

def check_main_theorem(nmax: int) -> Check:
    def test(item):
        n, lam = item
        got = schur_expand(q_of(horizontal_closure(a_lambda(lam))))
        want = pieri_s1(SchurExpansion(n - 1, {lam: 1}))
        if got != want:
            return f"lambda={list(lam)}: Q(A_lambda C_n) = {got}, expected {want}"
    return _check("Q(A_lambda C_n) = s_lambda * s_1", f"lambda |- n-1, 2<=n<={nmax}",
                  _lambdas(nmax), test)


def check_a_lambda_is_schur(nmax: int) -> Check:
    def test(item):
        n, lam = item
        got = schur_expand(q_of(a_lambda(lam)))
        if got != SchurExpansion(n - 1, {lam: 1}):
            return f"lambda={list(lam)}: Q(A_lambda) = {got}"
    return _check("Q(A_lambda) = s_lambda", f"lambda |- n-1, 2<=n<={nmax}", _lambdas(nmax), test)


def check_rotation_product_form(nmax: int) -> Check:
    """``Q(A C_n) Q({id}) = Q(A) Q(C_n)`` compared as polynomials in ``2n - 1`` variables."""
    def test(item):
        n, lam = item
        a = a_lambda(lam)
        m = 2 * n - 1
        lhs = poly_mul(f_to_polynomial(q_of(horizontal_closure(a)), m),
                       f_to_polynomial(q_of(PermMultiset.from_perms([Permutation.identity(n - 1)])), m))
        rhs = poly_mul(f_to_polynomial(q_of(a), m), f_to_polynomial(q_of(cyclic_group(n)), m))
        if lhs != rhs:
            return f"lambda={list(lam)}: products differ"
    return _check("Q(A C_n) Q({id}) = Q(A) Q(C_n)", f"A = A_lambda, lambda |- n-1, 2<=n<={nmax}",
                  _lambdas(nmax), test)


def check_er_theorem(nmax: int) -> Check:
    def items():
        for n in range(3, nmax + 1):
            for j in subsets(n - 2):
                yield n, j

    def test(item):
        n, j = item
        d_inv = descent_class(n - 1, j, inverse=True)
        q = q_of(horizontal_closure(d_inv))
        if not is_schur_positive(q):
            return f"n={n}, J={format_set(j)}: not Schur-positive"
        want = pieri_s1(schur_expand(q_of(d_inv)))
        if schur_expand(q) != want:
            return f"n={n}, J={format_set(j)}: {schur_expand(q)} != {want}"
    return _check("inverse descent classes rotate to Schur-positive sets, Q = Q(D^-1) s_1",
                  f"J subset of [n-2], 3<=n<={nmax}", items(), test)


def _descent_shuffle(a: PermMultiset, rng: random.Random) -> PermMultiset:
    """Replace each member by a random permutation with the same descent set."""
    classes: dict = {}
    for p in symmetric_group(a.n):
        classes.setdefault(descent_set(p), []).append(p)
    out = PermMultiset(a.n)
    for p, mult in a.items():
        for _ in range(mult):
            out.add(rng.choice(classes[descent_set(p)]))
    return out


def check_closure_depends_on_q(nmax: int, seed: int = 0, trials: int = 40) -> Check:
    rng = random.Random(seed)

    def items():
        for _ in range(trials):
            n = rng.randint(2, nmax)
            perms = list(symmetric_group(n - 1))
            a = PermMultiset(n - 1)
            for _ in range(rng.randint(1, 6)):
                a.add(rng.choice(perms), rng.randint(1, 3))
            yield a, _descent_shuffle(a, rng)

    def test(pair):
        a, b = pair
        if q_of(a) != q_of(b):
            return f"shuffle changed Q: {a} vs {b}"
        if q_of(horizontal_closure(a)) != q_of(horizontal_closure(b)):
            return f"Q(A)=Q(A') but Q(AC_n) != Q(A'C_n) for A={a}, A'={b}"
    return _check("Q(A)=Q(A') implies Q(AC_n)=Q(A'C_n)", f"{trials} seeded multisets, n<={nmax}, seed={seed}",
                  items(), test)


def check_rotated_descent_formula(nmax: int) -> Check:
    def items():
        for n in range(2, nmax + 1):
            for s in symmetric_group(n - 1):
                for k in range(1, n):
                    yield n, s, k

    def test(item):
        n, s, k = item
        hat = Permutation(s.word + (n,))
        got = rotated_descent_formula(descent_set(s), n, k)
        want = descent_set(rotate(hat, -k))
        if got != want:
            return f"sigma={s}, k={k}: formula {format_set(got)} != {format_set(want)}"
    return _check("Des(sigma c^-k) = (k + Des(sigma)) minus {n}, plus {k}", f"n<={nmax}", items(), test)


def check_cyclic_group(nmax: int) -> Check:
    def test(n):
        got = schur_expand(q_of(cyclic_group(n)))
        want = SchurExpansion(n, {(n,): 1, (n - 1, 1): 1})
        if got != want:
            return f"n={n}: Q(C_n) = {got}"
    return _check("Q(C_n) = s_n + s_(n-1,1)", f"2<=n<={nmax}", range(2, nmax + 1), test)


def check_remark_arbitrary_set() -> Check:
    a = PermMultiset.from_perms([Permutation.parse("132")])
    closure = q_of(horizontal_closure(a))
    problems = []
    if not is_symmetric(closure) or schur_expand(closure) != SchurExpansion(4, {(2, 2): 2}):
        problems.append(f"Q({{132}}C_4) = {closure}")
    if is_symmetric(q_of(a)):
        problems.append("Q({132}) is symmetric")
    return Check("A={132}: Q(AC_4) = 2 s_(2,2) while Q(A) is not symmetric", "n=4",
                 not problems, "; ".join(problems) or None)


def check_remark_vertical_rotation() -> Check:
    a = PermMultiset.from_perms([Permutation.parse("3142"), Permutation.parse("1423")])
    problems = []
    if not is_schur_positive(q_of(a)):
        problems.append("Q(A) not Schur-positive")
    if not is_schur_positive(q_of(horizontal_closure(a))):
        problems.append("Q(AC_5) not Schur-positive")
    if is_symmetric(q_of(left_closure(a))):
        problems.append("Q(C_5 A) is symmetric")
    return Check("A={3142,1423}: Q(A), Q(AC_5) Schur-positive, Q(C_5 A) not symmetric", "n=5",
                 not problems, "; ".join(problems) or None)


# -- permutations and RSK ----------------------------------------------------

def check_cyclic_rotation(nmax: int) -> Check:
    def items():
        for n in range(2, nmax + 1):
            for p in symmetric_group(n):
                yield p

    def test(p):
        n = p.n
        cd = cyclic_descent_set(p)
        if not cd or len(cd) == n:
            return f"cDes({p}) = {format_set(cd)}"
        for k in range(n):
            if cyclic_descent_set(rotate(p, -k)) != shift_set(cd, k, n):
                return f"cDes({p} c^-{k}) != {k} + cDes({p})"
    return _check("cDes(p c^-k) = k + cDes(p)", f"S_n, 2<=n<={nmax}", items(), test)


def check_rsk(nmax: int) -> Check:
    def items():
        for n in range(1, nmax + 1):
            yield from symmetric_group(n)

    def test(p):
        P, Q = rsk(p)
        Pi, Qi = rsk(inverse(p))
        if (Pi, Qi) != (Q, P):
            return f"RSK of {p} and its inverse are not swapped"
        if des_tableau(Q) != descent_set(p) or des_tableau(P) != descent_set(inverse(p)):
            return f"RSK of {p} does not preserve descents"
    return _check("RSK symmetry and Des(p)=Des(Q), Des(p^-1)=Des(P)", f"S_n, n<={nmax}", items(), test)


# -- straightening -----------------------------------------------------------

def _rotated_inputs(nmax: int):
    """``(lam, T, k)`` for T in SYT(lam^box) with n in the box and 0 <= k < n."""
    for n, lam in _lambdas(nmax):
        for t in enumerate_syt(boxed_shape(lam)):
            if delta(t) == n:
                for k in range(n):
                    yield lam, t, k


def check_jdt_bijection(nmax: int) -> Check:
    def items():
        for n, lam in _lambdas(nmax):
            yield n, lam

    def test(item):
        n, lam = item
        syt = enumerate_syt(boxed_shape(lam))
        sources = [t for t in syt if delta(t) == n]
        for k in range(n):
            image = [jdt(add_mod(t, k))[0] for t in sources]
            target = {p for p in syt if delta(p) % n == k}
            if len(set(image)) != len(image):
                return f"lambda={list(lam)}, k={k}: jdt is not injective"
            if set(image) != target:
                return f"lambda={list(lam)}, k={k}: image differs from {{P : box = {k or n}}}"
            for t, p in zip(sources, image):
                if jdt_inverse(p) != add_mod(t, k):
                    return f"jdt_inverse(jdt({k}+{t})) != {k}+{t}"
                if jdt(jdt_inverse(p))[0] != p:
                    return f"jdt(jdt_inverse({p})) != {p}"
    return _check("jdt is a bijection onto {P : box = k} with inverse k + ijdt(-k + P)",
                  f"lambda |- n-1, n<={nmax}, all k", items(), test)


def check_trace_invariants(nmax: int) -> Check:
    def test(item):
        lam, t, k = item
        try:
            p, _ = jdt(add_mod(t, k), check=True)
            ijdt(add_mod(p, -k), k, check=True)
        except AssertionError as exc:
            return str(exc)
    return _check("every switch pairs moving with non-moving entries; both restrictions stay standard",
                  f"lambda |- n-1, n<={nmax}, all k", _rotated_inputs(nmax), test)


def check_step_reversal(nmax: int) -> Check:
    def test(item):
        lam, t, k = item
        p, forward = jdt(add_mod(t, k))
        _, backward = ijdt(add_mod(p, -k), k)
        fwd = [add_mod(s, -k) for s in forward.states()]
        if list(backward.states()) != fwd[::-1]:
            return f"ijdt does not retrace jdt on {k}+{t}"
    return _check("ijdt retraces jdt step by step", f"lambda |- n-1, n<={nmax}, all k",
                  _rotated_inputs(nmax), test)


def check_des_preservation(nmax: int) -> Check:
    def test(item):
        lam, t, k = item
        r = add_mod(t, k)
        p, _ = jdt(r)
        if des_tableau(p) != des_rot(r):
            return f"Des(jdt({k}+{t})) = {format_set(des_tableau(p))} != {format_set(des_rot(r))}"
    return _check("Des(jdt(k+T)) = Des(k+T)", f"lambda |- n-1, n<={nmax}, all k", _rotated_inputs(nmax), test)


def check_phi(nmax: int) -> Check:
    def test(item):
        lam, t, k = item
        pi = inverse_reading_word(t)
        tau = rotate(pi, -k)
        r = add_mod(t, k)
        if inverse_reading_word(r) != tau:
            return f"inverse reading word of {k}+{t} is not {format_perm(tau)}"
        if phi(tau, lam) != r:
            return f"phi({format_perm(tau)}) != {k}+{t}"
        if des_rot(r) != descent_set(tau):
            return f"Des({k}+{t}) != Des({format_perm(tau)})"
        if cdes_rot(r) != cyclic_descent_set(tau) or cdes_rot_prime(r) != cdes_rot(r):
            return f"cyclic descents of {k}+{t} and {format_perm(tau)} disagree"
    return _check("phi is a Des-preserving bijection onto {k+T : box = n}",
                  f"lambda |- n-1, n<={nmax}, all k", _rotated_inputs(nmax), test)


def check_composite(nmax: int) -> Check:
    """jdt after phi matches A_lambda C_n with SYT(lam^box), descents included."""
    def test(item):
        n, lam = item
        closure = horizontal_closure(a_lambda(lam))
        images = []
        for tau in closure:
            p, _ = jdt(phi(tau, lam))
            if des_tableau(p) != descent_set(tau):
                return f"Des changes along phi and jdt at {format_perm(tau)}"
            images.append(p)
        if sorted(images, key=lambda p: p.values) != sorted(enumerate_syt(boxed_shape(lam)), key=lambda p: p.values):
            return f"lambda={list(lam)}: not a bijection onto SYT(lambda^box)"
        if q_of(closure) != schur_in_f(boxed_shape(lam)):
            return f"lambda={list(lam)}: Q(A_lambda C_n) != s_(lambda^box)"
    return _check("A_lambda C_n -> SYT(lambda^box) via phi then jdt is a Des-preserving bijection",
                  f"lambda |- n-1, n<={nmax}", _lambdas(nmax), test)


# -- cyclic descents on boxed tableaux ---------------------------------------

def _boxed_tableaux(nmax: int):
    for n, lam in _lambdas(nmax):
        for p in enumerate_syt(boxed_shape(lam)):
            yield p


def check_boxed_cdes(nmax: int) -> Check:
    def test(p):
        n = p.n
        cd = cdes_boxed(p)
        if cd - {n} != des_tableau(p):
            return f"cDes({p}) = {format_set(cd)} does not restrict to Des"
        if not cd or len(cd) == n:
            return f"cDes({p}) = {format_set(cd)} is trivial"
        if cdes_boxed(psi(p, 1)) != shift_set(cd, 1, n):
            return f"cDes(psi({p})) != 1 + cDes({p})"
        if psi(p, n) != p:
            return f"psi^n({p}) != {p}"
        for k in range(n):
            if psi(p, k) != psi_direct(p, k):
                return f"psi^{k}({p}) != jdt({k} + jdt^-1({p}))"
    return _check("cDes restricts to Des, psi^n = id, cDes(psi P) = 1 + cDes(P)",
                  f"SYT(lambda^box), n<={nmax}", _boxed_tableaux(nmax), test)


def check_orbits(nmax: int) -> Check:
    def test(item):
        n, lam = item
        orbits = psi_orbits(lam)
        sizes = [len(o) for o in orbits]
        if any(n % s for s in sizes):
            return f"lambda={list(lam)}: orbit sizes {sizes} do not divide {n}"
        if sum(sizes) != len(enumerate_syt(boxed_shape(lam))):
            return f"lambda={list(lam)}: orbits do not cover SYT(lambda^box)"
    return _check("psi orbit sizes divide n and cover SYT(lambda^box)", f"n<={nmax}", _lambdas(nmax), test)


def check_extension_witnesses(nmax: int) -> list[Check]:
    perm = [permutation_witness(n) for n in range(2, min(nmax, 6) + 1)]
    rot = [rotated_syt_witness(lam) for n in range(2, nmax + 1) for lam in partitions(n)]
    boxed = [boxed_syt_witness(lam) for _, lam in _lambdas(nmax)]
    out = []
    for label, scope, witnesses in (
        ("permutations with rotation", f"2<=n<={min(nmax, 6)}", perm),
        ("rotated SYT with addition mod n", f"straight shapes, 2<=n<={nmax}", rot),
        ("SYT(lambda^box) with psi", f"lambda |- n-1, n<={nmax}", boxed),
    ):
        bad = None
        for w in witnesses:
            report = verify_extension(w)
            if not report.ok:
                bad = f"{w.name}: {report.violations[0]}"
                break
        out.append(Check(f"cyclic descent extension axioms: {label}", scope, bad is None, bad))
    return out


def check_rot_prime(nmax: int) -> Check:
    def test(item):
        lam, t, k = item
        r = add_mod(t, k)
        if cdes_rot(r) != cdes_rot_prime(r):
            return f"cDes_rot and cDes'_rot differ on {k}+{t}"
    return _check("cDes_rot = cDes'_rot on k+T with n in the box", f"n<={nmax}", _rotated_inputs(nmax), test)


def check_rotated_tableau_shift(nmax: int) -> Check:
    def items():
        for n in range(1, nmax + 1):
            for lam in partitions(n):
                yield from enumerate_syt(lam)

    def test(t):
        n = t.n
        cd = cdes_rot(t)
        if cd - {n} != des_tableau(t):
            return f"cDes_rot({t}) does not restrict to Des"
        for k in range(n):
            if cdes_rot(add_mod(t, k)) != shift_set(cd, k, n):
                return f"cDes_rot({k}+{t}) != {k} + cDes_rot({t})"
    return _check("cDes_rot(k+T) = k + cDes_rot(T)", f"straight SYT, n<={nmax}", items(), test)


# -- suites ------------------------------------------------------------------

SUITES: dict[str, tuple[str, Callable[[int, int], list[Check]]]] = {
    "main-theorem": (
        "horizontal rotations of Schur-positive sets are Schur-positive, with Q(AC_n) = Q(A) s_1",
        lambda nmax, seed: [
            check_a_lambda_is_schur(nmax),
            check_main_theorem(nmax),
            check_composite(nmax),
            check_rotated_descent_formula(nmax),
            check_closure_depends_on_q(nmax, seed),
            check_rotation_product_form(min(nmax, 4)),
        ],
    ),
    "er-theorem": (
        "rotated inverse descent classes D^-1_(n-1,J) C_n are Schur-positive",
        lambda nmax, seed: [check_er_theorem(nmax)],
    ),
    "jdt-bijection": (
        "jdt is a bijection {k+T : box = n} -> {P : box = k}, inverted by ijdt",
        lambda nmax, seed: [
            check_jdt_bijection(nmax),
            check_trace_invariants(nmax),
            check_step_reversal(nmax),
        ],
    ),
    "des-preservation": (
        "jdt and phi preserve descent sets",
        lambda nmax, seed: [
            check_des_preservation(nmax),
            check_phi(nmax),
            check_rsk(min(nmax, 6)),
        ],
    ),
    "extension-axioms": (
        "cyclic descent extensions: rotation on S_n, addition on rotated SYT, psi on SYT(lambda^box)",
        lambda nmax, seed: [
            check_cyclic_rotation(min(nmax, 6)),
            check_rotated_tableau_shift(nmax),
            check_boxed_cdes(nmax),
            check_orbits(nmax),
            *check_extension_witnesses(nmax),
        ],
    ),
    "remarks": (
        "Q(C_n) = s_n + s_(n-1,1); {132}C_4; vertical rotation of {3142,1423}; cDes_rot vs cDes'_rot",
        lambda nmax, seed: [
            check_cyclic_group(max(nmax, 2)),
            check_remark_arbitrary_set(),
            check_remark_vertical_rotation(),
            check_rot_prime(nmax),
        ],
    ),
}


def run_suite(name: str, nmax: int, seed: int = 0) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    statement, build = SUITES[name]
    return SuiteReport(name, statement, build(nmax, seed))
