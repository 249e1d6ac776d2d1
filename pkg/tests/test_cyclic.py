import pytest
from hypothesis import given, settings, strategies as st

from schurrot.cyclic import (
    CyclicExtensionWitness,
    DomainError,
    InvariantError,
    NoStep,
    NotClosed,
    _ele,
    _straighten,
    boxed_syt_witness,
    cdes_boxed,
    elementary_step,
    elementary_step_inv,
    ijdt,
    jdt,
    jdt_inverse,
    orbit_of,
    permutation_witness,
    psi,
    psi_direct,
    psi_orbits,
    rot_prime_disagreements,
    rotated_syt_witness,
    verify_extension,
)
from schurrot.permcore import cyclic_descent_set, descent_set, parse_perm, rotate
from schurrot.tableaux import (
    Tableau,
    add_mod,
    boxed_shape,
    boxed_tableau,
    cdes_rot,
    cdes_rot_prime,
    delta,
    des_tableau,
    enumerate_syt,
    hook_length_count,
    inverse_reading_word,
    is_standard,
    partitions,
    phi,
)

T_EX = boxed_tableau(6, [[1, 3, 5], [2, 4]])


def B(box, *rows):
    return boxed_tableau(box, [list(r) for r in rows])


def rotated_inputs(min_n, max_n):
    """Every (T, k) with T standard of boxed shape and n in the box."""
    for n in range(min_n, max_n + 1):
        for lam in partitions(n - 1):
            for t in enumerate_syt(boxed_shape(lam)):
                if delta(t) == n:
                    for k in range(n):
                        yield t, k


def cdes_via_reading_word(p):
    """Cyclic descents read off the preimage word: rotate the inverse reading
    word of the n-in-box tableau and take cDes of the permutation."""
    n = p.n
    k = delta(p) % n
    t, _ = ijdt(add_mod(p, -k), k)
    return cyclic_descent_set(rotate(inverse_reading_word(t), -k))


class TestElementarySteps:
    def test_worked_sequence(self):
        r = B(3, (4, 1, 2), (5, 6))
        s1 = elementary_step(r)
        assert s1 == B(3, (1, 4, 2), (5, 6))
        s2 = elementary_step(s1)
        assert s2 == B(3, (1, 2, 4), (5, 6))
        with pytest.raises(NoStep):
            elementary_step(s2)

    def test_inverse_step(self):
        assert elementary_step_inv(B(6, (4, 5, 1), (2, 3))) == B(6, (4, 1, 5), (2, 3))

    def test_inverse_no_step(self):
        with pytest.raises(NoStep):
            elementary_step_inv(T_EX)


class TestJdt:
    def test_examples(self):
        assert jdt(add_mod(T_EX, 2))[0] == B(2, (1, 3, 5), (4, 6))
        assert jdt(add_mod(T_EX, 4))[0] == B(4, (1, 3, 5), (2, 6))
        assert jdt(add_mod(T_EX, 3))[0] == B(3, (1, 2, 4), (5, 6))

    def test_identity_when_k_zero(self):
        out, trace = jdt(T_EX, check=True)
        assert out == T_EX and trace.steps == []

    def test_trace_replays(self):
        r = add_mod(T_EX, 3)
        out, trace = jdt(r, check=True)
        states = list(trace.states())
        assert states[0] == r and states[-1] == out
        assert len(states) == len(trace.steps) + 1
        assert trace.moving == {1, 2}
        assert all(s.entry in trace.moving and s.partner not in trace.moving for s in trace.steps)

    def test_domain(self):
        with pytest.raises(DomainError):
            jdt(Tableau.from_rows([[1, 2], [3]]))
        with pytest.raises(DomainError):
            jdt(B(6, (1, 5, 3), (2, 4)))

    def test_auditor_catches_wrong_moving_set(self):
        # straightening 2+T moves the entry 1; declare nothing as moving
        r = add_mod(T_EX, 2)
        with pytest.raises(InvariantError):
            _straighten(r, frozenset(), _ele, check=True, increasing=True)
        _straighten(r, frozenset({1}), _ele, check=True, increasing=True)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_exhaustive_with_audit(self, n):
        for t, k in rotated_inputs(n, n):
            out, _ = jdt(add_mod(t, k), check=True)
            assert is_standard(out) and delta(out) == (k or n)
            # des is read with the rotated rule on the input side
            assert des_tableau(out) == cdes_rot(add_mod(t, k)) - {n}


class TestIjdt:
    def test_example(self):
        r = B(6, (4, 5, 1), (2, 3))
        out, trace = ijdt(r, 3, check=True)
        assert out == B(6, (1, 3, 5), (2, 4))
        assert [str(s) for s in trace.states()] == ["6/451/23", "6/415/23", "6/145/23", "6/135/24"]

    def test_domain(self):
        with pytest.raises(DomainError):
            ijdt(B(6, (4, 5, 1), (2, 3)), 2)

    def test_jdt_inverse_example(self):
        p = B(3, (1, 2, 4), (5, 6))
        r = jdt_inverse(p, check=True)
        assert r == B(3, (4, 6, 2), (5, 1))
        assert r == phi(parse_perm("256314"), (3, 2))
        assert cdes_boxed(p) == {3, 4, 6}

    @pytest.mark.parametrize("n", range(2, 9))
    def test_bijection(self, n):
        for lam in partitions(n - 1):
            syt = enumerate_syt(boxed_shape(lam))
            images = set()
            for p in syt:
                r = jdt_inverse(p, check=True)
                assert jdt(r, check=True)[0] == p
                images.add(r)
            assert len(images) == len(syt) == n * hook_length_count(lam)

    def test_jdt_inverse_rejects_nonstandard(self):
        with pytest.raises(DomainError):
            jdt_inverse(add_mod(T_EX, 2))


class TestCyclicAction:
    def test_psi_example(self):
        p = B(3, (1, 2, 4), (5, 6))
        assert psi(p, 1) == B(4, (1, 3, 5), (2, 6))
        assert psi(p, 0) == p
        assert psi(p, 6) == p

    def test_psi_needs_standard_boxed(self):
        with pytest.raises(DomainError):
            psi(Tableau.from_rows([[1, 2], [3]]), 1)
        with pytest.raises(DomainError):
            psi(add_mod(T_EX, 2), 1)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_psi_matches_direct(self, n):
        for lam in partitions(n - 1):
            for p in enumerate_syt(boxed_shape(lam)):
                for k in range(n):
                    assert psi(p, k) == psi_direct(p, k)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_cdes_agrees_with_permutations(self, n):
        for lam in partitions(n - 1):
            for p in enumerate_syt(boxed_shape(lam)):
                cd = cdes_boxed(p)
                assert cd == cdes_via_reading_word(p)
                assert cd - {n} == des_tableau(p)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_orbits(self, n):
        for lam in partitions(n - 1):
            orbits = psi_orbits(lam)
            assert sum(len(o) for o in orbits) == n * hook_length_count(lam)
            for o in orbits:
                assert n % len(o) == 0
                assert orbit_of(o[0]) == o
                assert [cdes_boxed(p) for p in o] == [
                    frozenset((d + k - 1) % n + 1 for d in cdes_boxed(o[0])) for k in range(len(o))
                ]

    @settings(max_examples=40)
    @given(st.integers(1, 7).flatmap(lambda m: st.sampled_from(partitions(m))), st.data())
    def test_action_law_random(self, lam, data):
        p = data.draw(st.sampled_from(enumerate_syt(boxed_shape(lam))))
        n = p.n
        a, b = data.draw(st.integers(0, 2 * n)), data.draw(st.integers(0, 2 * n))
        assert psi(psi(p, b), a) == psi(p, a + b)


class TestVerifyExtension:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_permutations(self, n):
        assert verify_extension(permutation_witness(n)).ok

    @pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1)])
    def test_boxed(self, lam):
        report = verify_extension(boxed_syt_witness(lam))
        assert report.ok, report.violations
        assert report.checked == (sum(lam) + 1) * hook_length_count(lam)

    @pytest.mark.parametrize("lam", [(2,), (2, 1), (3, 2), (2, 2, 1)])
    def test_rotated_straight(self, lam):
        assert verify_extension(rotated_syt_witness(lam)).ok

    def test_not_closed(self):
        w = permutation_witness(3)
        w.objects = w.objects[:-1]
        with pytest.raises(NotClosed):
            verify_extension(w)

    def test_broken_cdes_is_reported(self):
        w = permutation_witness(3)
        w.cdes = lambda p: descent_set(p) | {3}
        report = verify_extension(w)
        assert not report.ok
        assert any("expected" in v for v in report.violations)

    def test_broken_action_is_reported(self):
        objs = ["a", "b", "c"]
        w = CyclicExtensionWitness(
            n=3,
            objects=objs,
            des=lambda x: frozenset(),
            cdes=lambda x: frozenset({3}),
            action=lambda k, x: "a" if k else x,
            name="collapse",
        )
        report = verify_extension(w, max_violations=5)
        assert not report.ok and len(report.violations) == 5


class TestRotPrime:
    def test_boxed_agree(self):
        for lam in [(1,), (2,), (2, 1), (3, 2), (2, 2, 1)]:
            for t in enumerate_syt(boxed_shape(lam)):
                if delta(t) == t.n:
                    for k in range(t.n):
                        r = add_mod(t, k)
                        assert cdes_rot_prime(r) == cdes_rot(r)

    def test_straight_disagree(self):
        bad = rot_prime_disagreements((2, 1))
        assert Tableau.from_rows([[1, 3], [2]]) in bad
