from collections import Counter
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from schurrot.permcore import PermMultiset, cyclic_group, parse_perm, subsets, symmetric_group
from schurrot.qsym import (
    MExpansion,
    NotSymmetric,
    QSymF,
    SchurExpansion,
    composition_of,
    compositions,
    f_to_m,
    f_to_polynomial,
    fundamental,
    is_schur_positive,
    is_symmetric,
    is_symmetric_polynomial,
    kostka,
    m_to_f,
    pieri_s1,
    poly_mul,
    q_of,
    schur_expand,
    schur_in_f,
    schur_in_m,
    schur_to_f,
    subset_of,
)
from schurrot.tableaux import Shape, hook_length_count, partitions


def brute_fundamental(n, d, m):
    """F_{n,D}(x_1..x_m) from all index words i_1 <= ... <= i_n, strict at D."""
    poly = Counter()
    for idx in product(range(m), repeat=n):
        if all(idx[j] <= idx[j + 1] for j in range(n - 1)) and all(idx[j - 1] < idx[j] for j in d):
            poly[tuple(idx.count(v) for v in range(m))] += 1
    return dict(poly)


def brute_symmetric(poly, m):
    """Compare against every permutation of the variables."""
    for sigma in permutations(range(m)):
        for e, c in poly.items():
            if poly.get(tuple(e[sigma[i]] for i in range(m)), 0) != c:
                return False
    return True


def brute_ssyt_fillings(lam, m):
    """Every filling of lam with letters 1..m, kept when rows weakly and columns strictly increase."""
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    for vals in product(range(1, m + 1), repeat=len(cells)):
        at = dict(zip(cells, vals))
        if all(at[(r, c)] <= at[(r, c + 1)] for (r, c) in cells if (r, c + 1) in at) and all(
            at[(r, c)] < at[(r + 1, c)] for (r, c) in cells if (r + 1, c) in at
        ):
            yield at


def brute_kostka(lam, mu):
    return sum(
        1 for at in brute_ssyt_fillings(lam, len(mu))
        if all(list(at.values()).count(i + 1) == mu[i] for i in range(len(mu)))
    )


def brute_schur_polynomial(lam, m):
    poly = Counter()
    for at in brute_ssyt_fillings(lam, m):
        vals = list(at.values())
        poly[tuple(vals.count(v) for v in range(1, m + 1))] += 1
    return dict(poly)


@st.composite
def qsym_elements(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    keys = draw(st.lists(st.sampled_from(list(subsets(n - 1))), max_size=5))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(keys), max_size=len(keys)))
    return QSymF(n, dict(zip(keys, coeffs)))


class TestExpansionArithmetic:
    def test_zero_dropped_and_equality(self):
        a = QSymF(3, {frozenset({1}): 2, frozenset(): 0})
        assert a.coeffs == {frozenset({1}): 2}
        assert a - a == QSymF(3)
        assert not QSymF(3)
        assert a + a == 2 * a

    def test_different_n_rejected(self):
        with pytest.raises(ValueError):
            QSymF(3) + QSymF(4)

    def test_render(self):
        assert str(SchurExpansion(4, {(2, 2): 2})) == "2*s[2,2]"
        assert str(SchurExpansion(4, {(4,): 1, (3, 1): 1})) == "s[4] + s[3,1]"
        assert str(SchurExpansion(4, {(3, 1): -1})) == "-s[3,1]"
        assert str(QSymF(3)) == "0"

    def test_json(self):
        j = SchurExpansion(4, {(2, 2): 2}).to_json()
        assert j == {"basis": "s", "n": 4, "terms": [{"index": [2, 2], "coeff": 2}]}


class TestCompositions:
    def test_roundtrip(self):
        assert composition_of({1, 3}, 5) == (1, 2, 2)
        assert subset_of((1, 2, 2)) == {1, 3}
        for n in range(1, 7):
            comps = compositions(n)
            assert len(comps) == 2 ** (n - 1)
            assert all(composition_of(subset_of(a), n) == a for a in comps)


class TestFundamental:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_polynomial_matches_brute_force(self, n):
        for d in subsets(n - 1):
            for m in range(1, 4):
                assert f_to_polynomial(fundamental(n, d), m) == brute_fundamental(n, d, m)

    def test_f_to_m_examples(self):
        assert f_to_m(fundamental(3, set())) == MExpansion(3, {(3,): 1, (1, 2): 1, (2, 1): 1, (1, 1, 1): 1})
        assert f_to_m(fundamental(3, {1, 2})) == MExpansion(3, {(1, 1, 1): 1})

    @given(qsym_elements())
    def test_m_to_f_inverts(self, q):
        assert m_to_f(f_to_m(q)) == q

    def test_q_of(self):
        q = q_of(PermMultiset.from_perms([parse_perm("132"), parse_perm("231"), parse_perm("123")]))
        assert q == QSymF(3, {frozenset({2}): 2, frozenset(): 1})


class TestSymmetry:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_against_variable_permutations(self, n):
        # every single F and every sum of two F's, checked in n variables
        keys = list(subsets(n - 1))
        cases = [fundamental(n, d) for d in keys]
        cases += [fundamental(n, a) + fundamental(n, b) for a in keys for b in keys]
        for q in cases:
            poly = f_to_polynomial(q, n)
            expected = brute_symmetric(poly, n)
            assert is_symmetric(q) == expected
            assert is_symmetric_polynomial(poly) == expected

    def test_examples(self):
        assert is_symmetric(fundamental(3, set()))
        assert not is_symmetric(fundamental(3, {1}))
        assert is_symmetric(fundamental(3, {1}) + fundamental(3, {2}))
        assert is_symmetric(QSymF(3))

    def test_schur_positive_needs_symmetry(self):
        assert not is_schur_positive(fundamental(3, {1}))
        assert is_schur_positive(fundamental(3, {1}) + fundamental(3, {2}))
        assert not is_schur_positive(-fundamental(3, set()))


class TestKostka:
    def test_examples(self):
        assert kostka((2, 1), (1, 1, 1)) == 2
        assert kostka((3,), (1, 1, 1)) == 1
        assert kostka((1, 1, 1), (3,)) == 0
        assert kostka((2, 2), (2, 1, 1)) == 1

    @pytest.mark.parametrize("n", range(1, 6))
    def test_against_brute_force(self, n):
        for lam in partitions(n):
            for mu in partitions(n):
                assert kostka(lam, mu) == brute_kostka(lam, mu)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_unitriangular(self, n):
        ps = partitions(n)
        for i, lam in enumerate(ps):
            assert kostka(lam, lam) == 1
            for mu in ps[:i]:
                assert kostka(lam, mu) == 0


class TestSchur:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_schur_polynomials(self, n):
        for lam in partitions(n):
            for m in range(1, 4):
                assert f_to_polynomial(schur_in_f(lam), m) == brute_schur_polynomial(lam, m)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_two_descriptions_agree(self, n):
        for lam in partitions(n):
            assert f_to_m(schur_in_f(lam)) == schur_in_m(lam)
            assert schur_expand(schur_in_f(lam)) == SchurExpansion(n, {lam: 1})

    def test_skew_schur(self):
        # s_{(2,1)/(1)} = s_2 + s_{1,1}
        assert schur_expand(schur_in_f(Shape((2, 1), (1,)))) == SchurExpansion(2, {(2,): 1, (1, 1): 1})

    def test_not_symmetric_raises(self):
        with pytest.raises(NotSymmetric):
            schur_expand(fundamental(3, {1}))

    def test_symmetric_group_is_regular(self):
        # sum over S_n of F_{Des} is h_1^n
        for n in range(1, 6):
            e = schur_expand(q_of(PermMultiset.from_perms(symmetric_group(n))))
            assert all(e[lam] == hook_length_count(lam) for lam in partitions(n))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_cyclic_group(self, n):
        assert schur_expand(q_of(cyclic_group(n))) == SchurExpansion(n, {(n,): 1, (n - 1, 1): 1})

    @settings(max_examples=60)
    @given(st.integers(1, 6).flatmap(
        lambda n: st.dictionaries(st.sampled_from(partitions(n)), st.integers(-4, 4), max_size=4)
        .map(lambda d: SchurExpansion(n, d))))
    def test_expand_roundtrip(self, e):
        assert schur_expand(schur_to_f(e)) == e


class TestPieri:
    def test_example(self):
        assert pieri_s1(SchurExpansion(2, {(1, 1): 1})) == SchurExpansion(3, {(2, 1): 1, (1, 1, 1): 1})

    @pytest.mark.parametrize("n", range(1, 5))
    def test_against_polynomial_product(self, n):
        m = n + 1
        s1 = f_to_polynomial(fundamental(1, set()), m)
        for lam in partitions(n):
            lhs = poly_mul(f_to_polynomial(schur_in_f(lam), m), s1)
            rhs = f_to_polynomial(schur_to_f(pieri_s1(SchurExpansion(n, {lam: 1}))), m)
            assert lhs == rhs
