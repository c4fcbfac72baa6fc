"""Two self-contained verification gadgets.

The first concerns the degree-2 del Pezzo double cover of the scroll
Proj(O(2)+O(2)+O): the reducible fibres of the induced conic bundle over F_0
lie over the roots of the discriminant b^2 - 4ac of the fibrewise conic,
where (a, b, c) are binary forms of degrees (2, 4, 6).  Counting those roots
exactly gives mu = 8 singular fibres, the degeneration class
Xi = 6*sigma + 8*f on F_0, and the effectivity of |2K + Xi|.

The second is the orbit combinatorics of the ten components of the five
reducible conic fibres on the cubic-surface model over the function field:
the Picard rank stays 2 because no nonempty proper Galois-invariant union of
orbit blocks consists of pairwise disjoint curves.

All coefficient arithmetic is exact, either over the rationals or over a
declared prime field (default: the 31-bit prime 2^31 - 1).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .hirzebruch import Hirzebruch, RuledClass

DEFAULT_MODULUS = 2**31 - 1


class ZeroFormError(ValueError):
    """Raised when an operation needs a nonzero binary form."""


class DegenerateSeedError(ValueError):
    """Raised when a pseudo-random draw produces an identically zero
    discriminant; degenerate draws are reported, never resampled."""


@dataclass(frozen=True)
class BinaryForm:
    """A homogeneous binary form of declared degree len(coeffs) - 1.

    coeffs[i] multiplies t0^(degree-i) * t1^i.  Coefficients are Fractions
    (modulus None) or canonical residues of the given prime modulus.  The
    zero form is the form whose coefficients all vanish; it is detected by
    is_zero rather than by a degree convention.
    """

    coeffs: tuple
    modulus: Optional[int] = None

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a form needs at least one coefficient")
        if self.modulus is None:
            object.__setattr__(
                self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
            )
        else:
            if self.modulus < 2:
                raise ValueError("modulus must be a prime >= 2")
            object.__setattr__(
                self, "coeffs", tuple(int(c) % self.modulus for c in self.coeffs)
            )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _compatible(self, other: "BinaryForm") -> None:
        if self.modulus != other.modulus:
            raise ValueError("mixed coefficient domains")

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        self._compatible(other)
        if self.is_zero or other.is_zero:
            return BinaryForm((0,), self.modulus)
        out = [0] * (self.degree + other.degree + 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return BinaryForm(tuple(out), self.modulus)

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        # aligning declared degrees pads with zeros at the top, which is the
        # same as multiplying the lower-degree side by a power of t0
        self._compatible(other)
        size = max(len(self.coeffs), len(other.coeffs))
        out = [0] * size
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return BinaryForm(tuple(out), self.modulus)

    def scale(self, scalar) -> "BinaryForm":
        return BinaryForm(tuple(scalar * c for c in self.coeffs), self.modulus)

    def trim(self) -> "BinaryForm":
        """Drop vanishing top coefficients, lowering the declared degree."""
        top = len(self.coeffs) - 1
        while top > 0 and self.coeffs[top] == 0:
            top -= 1
        return BinaryForm(self.coeffs[: top + 1], self.modulus)


def discriminant(b: BinaryForm, a: BinaryForm, c: BinaryForm) -> BinaryForm:
    """b^2 - 4ac, trimmed to its true top degree.

    For forms with surviving top data the degree is
    max(2*deg b, deg a + deg c); cancellations at the top are trimmed away,
    and the zero form is returned as such when everything cancels.
    """
    four = BinaryForm((4,), b.modulus)
    return (b * b - (four * a * c)).trim()


def _gf_inv(x: int, p: int) -> int:
    return pow(x, -1, p)


def _gf_gcd_degree(f: list, g: list, p: int) -> int:
    """Degree of gcd over GF(p) by plain Euclid on coefficient lists."""
    f = [x % p for x in f]
    g = [x % p for x in g]
    while any(x != 0 for x in g):
        while g and g[-1] == 0:
            g.pop()
        while len(f) >= len(g):
            if f[-1] != 0:
                factor = f[-1] * _gf_inv(g[-1], p) % p
                shift = len(f) - len(g)
                for i, gc in enumerate(g):
                    f[i + shift] = (f[i + shift] - factor * gc) % p
            f.pop()
            if not f:
                break
        f, g = g, f
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return len(f) - 1


def _int_content(f: list) -> int:
    from math import gcd

    g = 0
    for c in f:
        g = gcd(g, c)
    return g or 1


def _int_primitive(f: list) -> list:
    g = _int_content(f)
    return [c // g for c in f]


def _int_pseudo_rem(f: list, g: list) -> list:
    """Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g over the integers."""
    f = list(f)
    lc = g[-1]
    while len(f) >= len(g) and any(c != 0 for c in f):
        if f[-1] == 0:
            f.pop()
            continue
        shift = len(f) - len(g)
        top = f[-1]
        f = [lc * c for c in f]
        for i, gc in enumerate(g):
            f[i + shift] -= top * gc
        f.pop()
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _int_gcd_degree(f: list, g: list) -> int:
    """Degree of gcd over Q via a primitive pseudo-remainder sequence, which
    keeps coefficients fraction-free without blowup."""
    f = _int_primitive(f)
    g = _int_primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while any(c != 0 for c in g):
        r = _int_pseudo_rem(f, g)
        f, g = g, _int_primitive(r) if any(c != 0 for c in r) else [0]
    return len(f) - 1


def _dehomogenized(f: BinaryForm) -> tuple[list, int]:
    """Coefficient list of p(x) = f(1, x) with its exact degree."""
    top = len(f.coeffs) - 1
    while top > 0 and f.coeffs[top] == 0:
        top -= 1
    return list(f.coeffs[: top + 1]), top


class RootCount(NamedTuple):
    total: int
    distinct: int


def root_count(f: BinaryForm) -> RootCount:
    """Roots of a nonzero form on P^1: total with multiplicity (= the declared
    degree) and the number of distinct roots, including the one at infinity
    when the top coefficient vanishes.  Distinct roots are counted through
    deg p - deg gcd(p, p') on the dehomogenization p."""
    if f.is_zero:
        raise ZeroFormError("root counting needs a nonzero form")
    p, dp = _dehomogenized(f)
    at_infinity = 1 if dp < f.degree else 0
    if dp == 0:
        return RootCount(f.degree, at_infinity)
    derivative = [i * c for i, c in enumerate(p)][1:]
    if f.modulus is None:
        lcm = 1
        for c in p:
            lcm = lcm * c.denominator // _int_content([lcm, c.denominator])
        ints = [int(c * lcm) for c in p]
        dints = [i * c for i, c in enumerate(ints)][1:]
        gcd_degree = _int_gcd_degree(ints, dints)
    else:
        gcd_degree = _gf_gcd_degree(p, derivative, f.modulus)
    return RootCount(f.degree, dp - gcd_degree + at_infinity)


def random_form(
    degree: int, rng: random.Random, modulus: Optional[int] = DEFAULT_MODULUS
) -> BinaryForm:
    """A form with uniform pseudo-random coefficients; over the rationals the
    coefficients are small integers, so degenerate draws stay possible and
    visible."""
    if modulus is None:
        return BinaryForm(
            tuple(rng.randint(-9, 9) for _ in range(degree + 1)), None
        )
    return BinaryForm(
        tuple(rng.randrange(modulus) for _ in range(degree + 1)), modulus
    )


def singular_fiber_count(k_squared: int) -> int:
    """Number of degenerate fibres, 8 - K^2, of a conic bundle on a surface
    fibred over a rational curve."""
    if k_squared > 8:
        raise ValueError("K^2 of a ruled surface with a conic bundle is <= 8")
    return 8 - k_squared


DP2_FIBRE_K_SQUARED = 2


@dataclass(frozen=True)
class Dp2Report:
    """Outcome of the double-cover check for one coefficient draw."""

    seed: Optional[int]
    lambda_: int
    mu: int
    mu_distinct: int
    xi_class: RuledClass
    two_k_plus_xi: RuledClass
    two_k_plus_xi_effective: bool
    nonruled: bool
    generic: bool


def dp2_report_from_forms(
    a: BinaryForm, b: BinaryForm, c: BinaryForm, seed: Optional[int] = None
) -> Dp2Report:
    """Assemble the degree-2 del Pezzo degeneration report from explicit
    conic coefficients a*x^2 + b*xy + c*y^2.

    lambda = 8 - K^2 = 6 counts the degenerate fibres over a general section,
    mu counts the discriminant roots, Xi = lambda*sigma + mu*f on F_0, and
    the verdict is the effectivity of |2K + Xi|.  A draw is generic when the
    discriminant is squarefree of full degree 8.
    """
    disc = discriminant(b, a, c)
    if disc.is_zero:
        raise DegenerateSeedError("identically zero discriminant")
    counts = root_count(disc)
    lambda_ = singular_fiber_count(DP2_FIBRE_K_SQUARED)
    mu = counts.total
    f0 = Hirzebruch(0)
    xi = f0.from_tautological(lambda_, mu)
    two_k_plus_xi = 2 * f0.canonical() + xi
    effective = two_k_plus_xi.is_effective
    return Dp2Report(
        seed=seed,
        lambda_=lambda_,
        mu=mu,
        mu_distinct=counts.distinct,
        xi_class=xi,
        two_k_plus_xi=two_k_plus_xi,
        two_k_plus_xi_effective=effective,
        nonruled=effective,
        generic=disc.degree == 8 and counts.distinct == 8,
    )


def dp2_report(seed: int, modulus: Optional[int] = DEFAULT_MODULUS) -> Dp2Report:
    """Run the double-cover check on a deterministic pseudo-random draw of
    coefficient forms of degrees (2, 4, 6)."""
    rng = random.Random(seed)
    a = random_form(2, rng, modulus)
    b = random_form(4, rng, modulus)
    c = random_form(6, rng, modulus)
    return dp2_report_from_forms(a, b, c, seed=seed)


@dataclass(frozen=True)
class CurveSystem:
    """Finitely many curves with a group-orbit partition and a symmetric,
    irreflexive incidence relation on {1..size}."""

    size: int
    orbits: tuple[tuple[int, ...], ...]
    meets: frozenset

    def __init__(self, size: int, orbits: Iterable, meets: Iterable) -> None:
        object.__setattr__(self, "size", size)
        object.__setattr__(
            self, "orbits", tuple(tuple(sorted(block)) for block in orbits)
        )
        object.__setattr__(
            self, "meets", frozenset(frozenset(pair) for pair in meets)
        )
        seen: set[int] = set()
        for block in self.orbits:
            if seen & set(block):
                raise ValueError("orbit blocks must be disjoint")
            seen |= set(block)
        if seen != set(range(1, size + 1)):
            raise ValueError("orbits must partition {1..size}")
        for pair in self.meets:
            if len(pair) != 2 or not pair <= seen:
                raise ValueError("meets must be unordered pairs of distinct curves")


def invariant_disjoint_subsets(system: CurveSystem) -> list[tuple[int, ...]]:
    """Every nonempty proper union of orbit blocks whose members are pairwise
    disjoint, by brute force over the 2^blocks - 2 candidate unions."""
    found = []
    blocks = system.orbits
    for r in range(1, len(blocks)):
        for combo in itertools.combinations(range(len(blocks)), r):
            members = set()
            for index in combo:
                members |= set(blocks[index])
            if all(not pair <= members for pair in system.meets):
                found.append(tuple(sorted(members)))
    return found


def conic_fiber_system() -> CurveSystem:
    """The ten components of the five reducible conic fibres.

    Curves i and i+5 are the two components of fibre i; components of one
    fibre meet, components of distinct fibres are disjoint.  The Galois
    orbits are the six components over the cubic-root fibres, the pair over
    x = 0 and the pair over y = 0.
    """
    return CurveSystem(
        size=10,
        orbits=((1, 2, 3, 6, 7, 8), (4, 9), (5, 10)),
        meets=[(i, i + 5) for i in range(1, 6)],
    )


def picard_rank_two_witness(system: Optional[CurveSystem] = None) -> bool:
    """True when the (canonical) curve system admits no nonempty proper
    invariant union of pairwise disjoint curves, which pins the Picard rank
    of the cubic-surface model at 2."""
    if system is None:
        system = conic_fiber_system()
    return not invariant_disjoint_subsets(system)
