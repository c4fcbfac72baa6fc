import pytest
from hypothesis import given
from hypothesis import strategies as st

from dp3scroll.hirzebruch import FIBRE, S_INF, Hirzebruch, RuledClass

surfaces = st.builds(Hirzebruch, st.integers(0, 8))
ruled_classes = st.builds(RuledClass, st.integers(-10, 10), st.integers(-10, 10))


class TestIntersect:
    def test_section_meets_fibre_once(self):
        assert Hirzebruch(0).intersect(S_INF, FIBRE) == 1

    def test_tautological_section_self_intersection(self):
        for r in range(6):
            surface = Hirzebruch(r)
            s0 = surface.from_tautological(1, 0)
            assert surface.intersect(s0, s0) == r

    def test_node_count_product(self):
        # C ~ 2s_0 + (n+d1)l against Z ~ 2s_0 + (n+d2)l on F_{d3}
        for d1, d2, d3, n in [(0, 0, 0, 1), (2, 1, 1, -2), (3, 2, 0, 5)]:
            surface = Hirzebruch(d3)
            c = surface.from_tautological(2, n + d1)
            z = surface.from_tautological(2, n + d2)
            assert surface.intersect(c, z) == 2 * d1 + 2 * d2 + 4 * d3 + 4 * n

    @given(surfaces, ruled_classes, ruled_classes)
    def test_symmetric(self, surface, c1, c2):
        assert surface.intersect(c1, c2) == surface.intersect(c2, c1)

    @given(surfaces, ruled_classes, ruled_classes, ruled_classes, st.integers(-5, 5))
    def test_bilinear(self, surface, c1, c2, c3, t):
        assert surface.intersect(c1 + (t * c2), c3) == surface.intersect(
            c1, c3
        ) + t * surface.intersect(c2, c3)

    @given(surfaces)
    def test_generators(self, surface):
        assert surface.intersect(FIBRE, FIBRE) == 0
        assert surface.intersect(S_INF, S_INF) == -surface.e
        assert surface.intersect(S_INF, FIBRE) == 1


class TestCanonical:
    def test_examples(self):
        assert Hirzebruch(0).canonical() == RuledClass(-2, -2)
        assert Hirzebruch(2).canonical() == RuledClass(-2, -4)

    @given(surfaces)
    def test_k_squared_is_eight(self, surface):
        k = surface.canonical()
        assert surface.intersect(k, k) == 8


class TestEffectiveAndNef:
    def test_effective_examples(self):
        assert RuledClass(1, 0).is_effective
        assert not RuledClass(1, -1).is_effective
        assert RuledClass(0, 0).is_effective

    def test_nef_examples(self):
        assert Hirzebruch(2).is_nef(RuledClass(2, 4))
        assert not Hirzebruch(2).is_nef(RuledClass(2, 3))
        assert Hirzebruch(0).is_nef(RuledClass(0, 0))

    @given(surfaces, ruled_classes)
    def test_nef_implies_effective(self, surface, cls):
        if surface.is_nef(cls):
            assert cls.is_effective

    @given(surfaces, ruled_classes)
    def test_nef_is_nonnegative_on_generators(self, surface, cls):
        nef = surface.is_nef(cls)
        assert nef == (
            surface.intersect(cls, FIBRE) >= 0
            and surface.intersect(cls, S_INF) >= 0
        )


class TestBasisConversion:
    def test_examples(self):
        f2 = Hirzebruch(2)
        s0 = f2.from_tautological(1, 0)
        assert s0 == RuledClass(1, 2)
        assert f2.intersect(s0, s0) == 2
        assert Hirzebruch(0).from_tautological(3, -4) == RuledClass(3, -4)
        assert Hirzebruch(3).from_tautological(2, -1) == RuledClass(2, 5)

    @given(surfaces, st.integers(-8, 8), st.integers(-8, 8))
    def test_round_trip(self, surface, a, b):
        assert surface.to_tautological(surface.from_tautological(a, b)) == (a, b)

    @given(
        surfaces,
        st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
        st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
    )
    def test_preserves_intersections(self, surface, p1, p2):
        # pairing in the tautological basis: s_0^2 = e, s_0.l = 1, l^2 = 0
        taut = surface.e * p1[0] * p2[0] + p1[0] * p2[1] + p2[0] * p1[1]
        got = surface.intersect(
            surface.from_tautological(*p1), surface.from_tautological(*p2)
        )
        assert got == taut
