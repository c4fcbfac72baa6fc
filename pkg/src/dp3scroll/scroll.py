"""Divisor-class combinatorics on rational normal scrolls over P^1.

A rank-k scroll is Proj(O(d_1) + ... + O(d_k)) with the degree vector in
normal form d_1 >= ... >= d_k = 0.  Its Picard lattice is Z*M + Z*L, where
M is the tautological class and L a fibre of the projection to P^1, so a
divisor class a*M + b*L is stored as the integer pair (a, b).

The linear system |aM + bL| is spanned by monomials x_1^{i_1}...x_k^{i_k}
with i_1 + ... + i_k = a, each carrying a binary-form coefficient of degree
b + sum_j i_j*d_j; a monomial is admissible when that degree is >= 0.  The
module enumerates those monomials exactly, computes h^0 and generic
multiplicities along the coordinate subscrolls Y_j = {x_1 = ... = x_{j-1} = 0}
(both by the closed-form criterion and by brute-force enumeration), and
evaluates Chow products through M^k = sum(d_i), M^{k-1}.L = 1, L^2 = 0.

All arithmetic is exact arbitrary-precision integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Optional


class EmptyLinearSystemError(ValueError):
    """Raised when an operation requires at least one admissible monomial."""


@dataclass(frozen=True)
class DivisorClass:
    """The divisor class a*M + b*L; negative coefficients are allowed."""

    a: int
    b: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b)

    def __rmul__(self, scalar: int) -> "DivisorClass":
        return DivisorClass(scalar * self.a, scalar * self.b)


@dataclass(frozen=True)
class Monomial:
    """A monomial x_1^{i_1}...x_k^{i_k} together with its coefficient degree."""

    exponents: tuple[int, ...]
    coeff_degree: int

    @property
    def is_admissible(self) -> bool:
        return self.coeff_degree >= 0


@lru_cache(maxsize=None)
def _exponent_vectors(k: int, total: int) -> tuple[tuple[int, ...], ...]:
    """All k-tuples of nonnegative integers summing to total, in lex order."""
    if total < 0:
        return ()
    if k == 1:
        return ((total,),)
    out = []
    for head in range(total + 1):
        for tail in _exponent_vectors(k - 1, total - head):
            out.append((head,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_table(
    degrees: tuple[int, ...], a: int
) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    # (exponents, prefix sums, degree weight) per exponent vector; shared by
    # the enumeration and the brute-force multiplicity oracle.
    rows = []
    for exps in _exponent_vectors(len(degrees), a):
        prefix = tuple(accumulate(exps))
        weight = sum(i * d for i, d in zip(exps, degrees))
        rows.append((exps, prefix, weight))
    return tuple(rows)


@dataclass(frozen=True)
class Scroll:
    """A rank-k scroll in normal form (degrees sorted non-increasing, last 0)."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.degrees)
        if k < 2:
            raise ValueError("a scroll has rank >= 2")
        if any(x < y for x, y in zip(self.degrees, self.degrees[1:])):
            raise ValueError("degrees must be sorted non-increasingly")
        if self.degrees[-1] != 0:
            raise ValueError("normal form requires the last degree to be 0")
        # nonnegativity follows from sortedness and the last entry being 0

    @classmethod
    def normalize(cls, degrees) -> "Scroll":
        """Sort a degree vector and shift it so that the smallest entry is 0."""
        ds = sorted(degrees, reverse=True)
        if len(ds) < 2:
            raise ValueError("a scroll has rank >= 2")
        shift = ds[-1]
        return cls(tuple(d - shift for d in ds))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)

    def canonical_class(self) -> DivisorClass:
        """K = -k*M + (sum(d_i) - 2)*L."""
        return DivisorClass(-self.rank, self.degree_sum - 2)

    def monomials(self, cls: DivisorClass) -> list[Monomial]:
        """Admissible monomial basis of |aM + bL|, in lex order of exponents.

        Empty when a < 0 or when no exponent vector reaches coefficient
        degree >= 0.
        """
        if cls.a < 0:
            return []
        return [
            Monomial(exps, cls.b + weight)
            for exps, _, weight in _monomial_table(self.degrees, cls.a)
            if cls.b + weight >= 0
        ]

    def h0(self, cls: DivisorClass) -> int:
        """dim H^0(aM + bL) = sum over admissible monomials of (degree + 1)."""
        if cls.a < 0:
            return 0
        return sum(
            cls.b + weight + 1
            for _, _, weight in _monomial_table(self.degrees, cls.a)
            if cls.b + weight >= 0
        )

    def _check_subscroll_index(self, j: int) -> None:
        if not 2 <= j <= self.rank:
            raise ValueError(f"subscroll index must satisfy 2 <= j <= {self.rank}")

    def _require_nonempty(self, cls: DivisorClass) -> None:
        # the largest attainable coefficient degree puts all of a on x_1
        if cls.a < 0 or cls.a * self.degrees[0] + cls.b < 0:
            raise EmptyLinearSystemError(f"|{cls.a}M+{cls.b}L| has no members")

    def mult_subscroll(self, cls: DivisorClass, j: int) -> int:
        """Multiplicity of a general member of |aM + bL| along Y_j.

        Uses the closed-form criterion
            mult >= q  <=>  a*d_j + b + (d_1 - d_j)*(q - 1) < 0,
        and never exceeds a because the criterion fails at q = a + 1 for any
        nonempty system.
        """
        self._check_subscroll_index(j)
        self._require_nonempty(cls)
        d1 = self.degrees[0]
        dj = self.degrees[j - 1]
        q = 0
        while cls.a * dj + cls.b + (d1 - dj) * q < 0:  # criterion at q + 1
            q += 1
        return q

    def mult_subscroll_oracle(self, cls: DivisorClass, j: int) -> int:
        """Brute-force multiplicity along Y_j: the minimum of i_1 + ... + i_{j-1}
        over all admissible monomials."""
        self._check_subscroll_index(j)
        self._require_nonempty(cls)
        return min(
            prefix[j - 2]
            for _, prefix, weight in _monomial_table(self.degrees, cls.a)
            if cls.b + weight >= 0
        )

    def base_locus(self, cls: DivisorClass) -> Optional[int]:
        """Smallest index j with a*d_j + b < 0, i.e. the largest coordinate
        subscroll Y_j contained in the base locus; None when b >= 0 and the
        system is free of coordinate base strata."""
        self._require_nonempty(cls)
        for j in range(2, self.rank + 1):
            if cls.a * self.degrees[j - 1] + cls.b < 0:
                return j
        return None

    def intersection_number(self, classes) -> int:
        """Product of exactly k divisor classes in the Chow ring.

        Multilinear expansion against M^k = sum(d_i), M^{k-1}.L = 1 and
        L^2 = 0: the result is prod(a_i)*sum(d) + sum_i b_i*prod_{j!=i} a_j.
        """
        classes = list(classes)
        if len(classes) != self.rank:
            raise ValueError(
                f"rank-{self.rank} scroll needs exactly {self.rank} classes, "
                f"got {len(classes)}"
            )
        total = math.prod(c.a for c in classes) * self.degree_sum
        for i, c in enumerate(classes):
            total += c.b * math.prod(
                classes[t].a for t in range(len(classes)) if t != i
            )
        return total
