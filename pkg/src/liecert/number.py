"""Real algebraic numbers as minimal polynomial plus isolating interval.

Used where an exact value exists but is irrational, so reports can carry
a certificate (the polynomial and a rational interval containing exactly
one of its roots) instead of a bare float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import frac
from .poly import (
    RationalPolynomial,
    count_real_roots_in_interval,
    isolate_real_roots,
    squarefree_part,
)


@dataclass(frozen=True)
class AlgebraicNumber:
    """One real root of `minpoly`, isolated in [lo, hi].

    A degenerate interval lo == hi denotes an exact rational value.
    """

    minpoly: RationalPolynomial
    lo: Fraction
    hi: Fraction

    @staticmethod
    def from_rational(value) -> "AlgebraicNumber":
        v = frac(value)
        return AlgebraicNumber(RationalPolynomial([-v, Fraction(1)]), v, v)

    @staticmethod
    def roots_of(p: RationalPolynomial) -> tuple["AlgebraicNumber", ...]:
        """All real roots of p, each with its isolating interval."""
        sf = squarefree_part(p)
        return tuple(
            AlgebraicNumber(sf, lo, hi) for lo, hi in isolate_real_roots(sf)
        )

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    def refined(self, bits: int = 20) -> "AlgebraicNumber":
        lo, hi = self.lo, self.hi
        if lo == hi:
            return self
        f = self.minpoly
        for _ in range(bits):
            mid = (lo + hi) / 2
            if f(mid) == 0:
                return AlgebraicNumber(f, mid, mid)
            if count_real_roots_in_interval(f, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        return AlgebraicNumber(f, lo, hi)

    def sign(self) -> int:
        if self.lo == self.hi:
            v = self.lo
            return (v > 0) - (v < 0)
        if self.lo < 0 < self.hi and self.minpoly(Fraction(0)) == 0:
            # zero is a root and the interval isolates exactly one root
            return 0
        r = self
        while r.lo < 0 < r.hi:
            r = r.refined(4)
            if r.lo == r.hi:
                v = r.lo
                return (v > 0) - (v < 0)
        if r.lo >= 0:
            return 1 if r.hi > 0 else 0
        return -1

    def to_float(self) -> float:
        r = self.refined(40)
        return float((r.lo + r.hi) / 2)

    def __repr__(self):
        if self.is_rational:
            return f"AlgebraicNumber({self.lo})"
        return (
            f"AlgebraicNumber(root of {list(self.minpoly.coeffs)} in "
            f"[{self.lo}, {self.hi}])"
        )
