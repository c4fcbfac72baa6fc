import itertools
from collections import defaultdict

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dp3scroll.scroll import (
    DivisorClass,
    EmptyLinearSystemError,
    Monomial,
    Scroll,
)


def brute_monomials(degrees, a, b):
    """Independent enumeration: filter the full (a+1)^k exponent grid."""
    if a < 0:
        return []
    out = []
    for exps in itertools.product(range(a + 1), repeat=len(degrees)):
        if sum(exps) != a:
            continue
        deg = b + sum(i * d for i, d in zip(exps, degrees))
        if deg >= 0:
            out.append((exps, deg))
    return sorted(out)


def brute_intersection(degrees, classes):
    """Term-by-term expansion in Z[M, L], then evaluation of the degree-k
    monomials via M^k = sum(d), M^(k-1).L = 1, higher L powers = 0."""
    poly = {(0, 0): 1}
    for cls in classes:
        new = defaultdict(int)
        for (m, l), coeff in poly.items():
            new[(m + 1, l)] += coeff * cls.a
            new[(m, l + 1)] += coeff * cls.b
        poly = dict(new)
    k = len(degrees)
    total = 0
    for (m, l), coeff in poly.items():
        if l == 0 and m == k:
            total += coeff * sum(degrees)
        elif l == 1 and m == k - 1:
            total += coeff
    return total


@st.composite
def scrolls(draw, max_rank=5, max_degree=6):
    k = draw(st.integers(2, max_rank))
    degs = draw(
        st.lists(st.integers(0, max_degree), min_size=k - 1, max_size=k - 1)
    )
    return Scroll(tuple(sorted(degs, reverse=True) + [0]))


class TestScrollConstruction:
    def test_valid(self):
        assert Scroll((2, 1, 1, 0)).rank == 4
        assert Scroll((0, 0)).degree_sum == 0

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            Scroll((1, 2, 0))

    def test_rejects_nonzero_tail(self):
        with pytest.raises(ValueError):
            Scroll((3, 2, 1))

    def test_rejects_rank_one(self):
        with pytest.raises(ValueError):
            Scroll((0,))

    def test_normalize_sorts_and_shifts(self):
        assert Scroll.normalize([3, 1, 2]).degrees == (2, 1, 0)
        assert Scroll.normalize([1, -1]).degrees == (2, 0)
        assert Scroll.normalize((0, 0, 0, 0)).degrees == (0, 0, 0, 0)

    def test_normalize_rejects_rank_one(self):
        with pytest.raises(ValueError):
            Scroll.normalize([5])


class TestMonomials:
    def test_constant_section(self):
        ms = Scroll((0, 0, 0, 0)).monomials(DivisorClass(0, 0))
        assert ms == [Monomial((0, 0, 0, 0), 0)]

    def test_cubic_on_trivial_scroll(self):
        ms = Scroll((0, 0, 0, 0)).monomials(DivisorClass(3, 1))
        assert len(ms) == 20  # C(6,3) degree-3 monomials in 4 variables
        assert all(m.coeff_degree == 1 for m in ms)
        assert [m.exponents for m in ms] == [
            e for e, _ in brute_monomials((0, 0, 0, 0), 3, 1)
        ]

    def test_pencil(self):
        ms = Scroll((2, 2, 0)).monomials(DivisorClass(1, -2))
        assert [(m.exponents, m.coeff_degree) for m in ms] == [
            ((0, 1, 0), 0),
            ((1, 0, 0), 0),
        ]

    def test_negative_a_empty(self):
        assert Scroll((1, 0)).monomials(DivisorClass(-1, 5)) == []

    @given(scrolls(max_rank=4, max_degree=4), st.integers(0, 4), st.integers(-12, 12))
    def test_matches_brute_enumeration(self, scroll, a, b):
        got = [
            (m.exponents, m.coeff_degree)
            for m in scroll.monomials(DivisorClass(a, b))
        ]
        assert got == brute_monomials(scroll.degrees, a, b)


class TestH0:
    def test_examples(self):
        assert Scroll((0, 0, 0, 0)).h0(DivisorClass(0, 0)) == 1
        assert Scroll((0, 0, 0, 0)).h0(DivisorClass(3, 1)) == 40
        assert Scroll((2, 2, 0)).h0(DivisorClass(1, -2)) == 2

    def test_zero_for_negative_a(self):
        assert Scroll((3, 0)).h0(DivisorClass(-2, 100)) == 0

    @given(scrolls(), st.integers(0, 6), st.integers(-20, 20))
    def test_monotone_in_b(self, scroll, a, b):
        assert scroll.h0(DivisorClass(a, b + 1)) >= scroll.h0(DivisorClass(a, b))


class TestMultiplicity:
    def test_closed_form_examples(self):
        assert Scroll((0, 0, 0, 0)).mult_subscroll(DivisorClass(3, 5), 4) == 0
        assert Scroll((2, 2, 0)).mult_subscroll(DivisorClass(4, -2), 3) == 1
        assert Scroll((1, 1, 1, 0)).mult_subscroll(DivisorClass(3, -1), 4) == 1

    def test_oracle_examples(self):
        assert Scroll((0, 0, 0, 0)).mult_subscroll_oracle(DivisorClass(3, 0), 2) == 0
        assert Scroll((2, 2, 0)).mult_subscroll_oracle(DivisorClass(4, -2), 3) == 1
        assert Scroll((3, 1, 0, 0)).mult_subscroll_oracle(DivisorClass(2, -4), 2) == 1

    def test_empty_system(self):
        scroll = Scroll((2, 2, 0))
        empty = DivisorClass(1, -7)
        with pytest.raises(EmptyLinearSystemError):
            scroll.mult_subscroll(empty, 2)
        with pytest.raises(EmptyLinearSystemError):
            scroll.mult_subscroll_oracle(empty, 2)
        with pytest.raises(EmptyLinearSystemError):
            scroll.base_locus(empty)
        with pytest.raises(EmptyLinearSystemError):
            scroll.mult_subscroll(DivisorClass(-1, 0), 2)

    def test_subscroll_index_bounds(self):
        scroll = Scroll((1, 0))
        with pytest.raises(ValueError):
            scroll.mult_subscroll(DivisorClass(1, 0), 1)
        with pytest.raises(ValueError):
            scroll.mult_subscroll_oracle(DivisorClass(1, 0), 3)


class TestBaseLocus:
    def test_examples(self):
        assert Scroll((0, 0, 0, 0)).base_locus(DivisorClass(3, 1)) is None
        assert Scroll((1, 1, 1, 0)).base_locus(DivisorClass(3, -1)) == 4
        assert Scroll((2, 2, 0)).base_locus(DivisorClass(4, -2)) == 3


@given(scrolls(), st.integers(0, 6), st.integers(-20, 20))
@settings(max_examples=300)
def test_oracle_equivalence_and_closed_form(scroll, a, b):
    cls = DivisorClass(a, b)
    if a * scroll.degrees[0] + b < 0:
        with pytest.raises(EmptyLinearSystemError):
            scroll.mult_subscroll(cls, 2)
        return
    d1 = scroll.degrees[0]
    base = scroll.base_locus(cls)
    for j in range(2, scroll.rank + 1):
        mult = scroll.mult_subscroll(cls, j)
        assert mult == scroll.mult_subscroll_oracle(cls, j)
        dj = scroll.degrees[j - 1]
        for q in range(1, a + 2):
            assert (mult >= q) == (a * dj + b + (d1 - dj) * (q - 1) < 0)
    # base locus returns the smallest j carrying positive multiplicity
    if base is None:
        assert all(
            scroll.mult_subscroll(cls, j) == 0 for j in range(2, scroll.rank + 1)
        )
    else:
        assert scroll.mult_subscroll(cls, base) >= 1
        assert base == 2 or scroll.mult_subscroll(cls, base - 1) == 0


class TestIntersection:
    def test_defining_relations(self):
        quadric = Scroll((0, 0, 0, 0))
        m = DivisorClass(1, 0)
        l = DivisorClass(0, 1)
        assert quadric.intersection_number([m, m, m, l]) == 1
        assert Scroll((2, 1, 1, 0)).intersection_number([m, m, m, m]) == 4

    def test_k_cubed_of_smallest_family(self):
        # (K_V + X)^3 . X for X = 3M + L on the product scroll; K_V + X = -M - L
        scroll = Scroll((0, 0, 0, 0))
        kx = DivisorClass(-1, -1)
        x = DivisorClass(3, 1)
        assert scroll.intersection_number([kx, kx, kx, x]) == -10

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            Scroll((1, 0)).intersection_number([DivisorClass(1, 0)])
        with pytest.raises(ValueError):
            Scroll((1, 0)).intersection_number([DivisorClass(1, 0)] * 3)

    @given(
        scrolls(max_rank=4),
        st.lists(
            st.tuples(st.integers(-4, 4), st.integers(-6, 6)),
            min_size=2,
            max_size=4,
        ),
    )
    def test_matches_brute_expansion(self, scroll, pairs):
        classes = [DivisorClass(a, b) for a, b in pairs[: scroll.rank]]
        while len(classes) < scroll.rank:
            classes.append(DivisorClass(1, 1))
        assert scroll.intersection_number(classes) == brute_intersection(
            scroll.degrees, classes
        )

    @given(scrolls(max_rank=4), st.randoms(use_true_random=False))
    def test_symmetry(self, scroll, rng):
        classes = [
            DivisorClass(rng.randint(-4, 4), rng.randint(-6, 6))
            for _ in range(scroll.rank)
        ]
        value = scroll.intersection_number(classes)
        rng.shuffle(classes)
        assert scroll.intersection_number(classes) == value

    @given(scrolls(max_rank=4))
    def test_multilinearity_in_first_slot(self, scroll):
        rest = [DivisorClass(1, -2)] * (scroll.rank - 1)
        c1 = DivisorClass(2, 3)
        c2 = DivisorClass(-1, 4)
        assert scroll.intersection_number([c1 + c2, *rest]) == scroll.intersection_number(
            [c1, *rest]
        ) + scroll.intersection_number([c2, *rest])
        assert scroll.intersection_number([5 * c1, *rest]) == 5 * scroll.intersection_number(
            [c1, *rest]
        )

    @given(scrolls(max_rank=4))
    def test_two_fibres_vanish(self, scroll):
        l = DivisorClass(0, 1)
        rest = [DivisorClass(3, 7)] * (scroll.rank - 2)
        assert scroll.intersection_number([l, l, *rest]) == 0


class TestCanonicalClass:
    def test_examples(self):
        assert Scroll((0, 0, 0, 0)).canonical_class() == DivisorClass(-4, -2)
        assert Scroll((2, 1, 1, 0)).canonical_class() == DivisorClass(-4, 2)
        assert Scroll((2, 2, 0)).canonical_class() == DivisorClass(-3, 2)
