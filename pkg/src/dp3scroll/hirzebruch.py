"""Exact divisor-class arithmetic on Hirzebruch surfaces F_e.

Classes are written in the basis (s_inf, l) of the (-e)-section and a fibre,
with pairing s_inf^2 = -e, s_inf.l = 1, l^2 = 0.  The tautological section
s_0 = s_inf + e*l (of self-intersection e) is available through a basis
conversion.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RuledClass:
    """The class a*s_inf + b*l."""

    a: int
    b: int

    def __add__(self, other: "RuledClass") -> "RuledClass":
        return RuledClass(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "RuledClass":
        return RuledClass(-self.a, -self.b)

    def __rmul__(self, scalar: int) -> "RuledClass":
        return RuledClass(scalar * self.a, scalar * self.b)

    @property
    def is_effective(self) -> bool:
        # the effective cone of every F_e is spanned by s_inf and l
        return self.a >= 0 and self.b >= 0


S_INF = RuledClass(1, 0)
FIBRE = RuledClass(0, 1)


@dataclass(frozen=True)
class Hirzebruch:
    """The Hirzebruch surface F_e, e >= 0."""

    e: int

    def __post_init__(self) -> None:
        if self.e < 0:
            raise ValueError("F_e requires e >= 0")

    def intersect(self, c1: RuledClass, c2: RuledClass) -> int:
        return -self.e * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b

    def canonical(self) -> RuledClass:
        return RuledClass(-2, -(self.e + 2))

    def is_nef(self, cls: RuledClass) -> bool:
        """Nonnegative against both cone generators: cls.l >= 0, cls.s_inf >= 0."""
        return cls.a >= 0 and cls.b - self.e * cls.a >= 0

    def from_tautological(self, a: int, b: int) -> RuledClass:
        """Convert a*s_0 + b*l into the (s_inf, l) basis."""
        return RuledClass(a, b + self.e * a)

    def to_tautological(self, cls: RuledClass) -> tuple[int, int]:
        """Inverse of from_tautological."""
        return cls.a, cls.b - self.e * cls.a
