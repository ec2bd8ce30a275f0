"""Exact extended-rational slopes and negative continued fractions.

A slope is a reduced fraction num/den with den >= 0, where 1/0 stands for
the slope at infinity.  All arithmetic is exact integer arithmetic; nothing
here ever touches a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Slope:
    """An extended rational number num/den in lowest terms.

    den == 0 encodes infinity, canonicalized as 1/0 (a -1/0 input is
    normalized away).  For finite slopes den > 0 and the sign lives on num.
    """

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is not a slope")
            num = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(num, den)
            if g > 1:
                num, den = num // g, den // g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinite slope has no rational value")
        return Fraction(self.num, self.den)

    def __neg__(self) -> "Slope":
        return Slope(-self.num, self.den)

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Slope({self})"

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse "p/q", a bare integer, or "inf"; round-trips with str()."""
        text = text.strip()
        if text in ("inf", "-inf", "1/0", "-1/0"):
            return INFINITY
        if "/" in text:
            n, d = text.split("/", 1)
            return cls(int(n), int(d))
        return cls(int(text))

    @classmethod
    def from_fraction(cls, value) -> "Slope":
        f = Fraction(value)
        return cls(f.numerator, f.denominator)


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)


def farey_sum(a: Slope, b: Slope) -> Slope:
    """Mediant of two slopes, reduced unconditionally.

    The unreduced mediant is meaningful only for Farey neighbors; we always
    return the reduced fraction and never expose the raw pair.
    """
    num = a.num + b.num
    den = a.den + b.den
    if num == 0 and den == 0:
        raise ValueError(f"Farey sum of {a} and {b} is undefined")
    return Slope(num, den)


def farey_mul(a: Slope, b: Slope) -> int:
    """Cross-determinant a.num*b.den - a.den*b.num.

    Its absolute value is 1 exactly when a and b span an edge of the Farey
    graph, and it is antisymmetric in its arguments.
    """
    return a.num * b.den - a.den * b.num


def neg_cf(x: Slope, form: str = "lens") -> list[int]:
    """Negative continued fraction coefficients [r_0, ..., r_n] of x.

    x = r_0 - 1/(r_1 - 1/(... - 1/r_n)).  In "lens" form every r_i <= -2,
    which requires x < -1; in "solid" form the final coefficient may be -1,
    which admits x = -1 as well.
    """
    if form not in ("lens", "solid"):
        raise ValueError(f"unknown form {form!r}")
    if x.is_infinite:
        raise ValueError("cannot expand an infinite slope")
    v = x.as_fraction()
    if form == "lens" and v >= -1:
        raise ValueError(f"lens-form expansion needs x < -1, got {x}")
    if form == "solid" and v > -1:
        raise ValueError(f"solid-form expansion needs x <= -1, got {x}")
    coeffs = []
    while True:
        r = v.numerator // v.denominator
        coeffs.append(r)
        if v == r:
            break
        v = Fraction(-1) / (v - r)
    assert all(r <= -2 for r in coeffs[:-1]) and coeffs[-1] <= -1
    if form == "lens":
        assert coeffs[-1] <= -2
    return coeffs


def eval_neg_cf(coeffs: list[int]) -> Slope:
    """Evaluate [r_0, ..., r_n] back to the slope it expands."""
    if not coeffs:
        raise ValueError("empty coefficient list")
    acc = Fraction(coeffs[-1])
    for r in reversed(coeffs[:-1]):
        acc = r - Fraction(1) / acc
    return Slope.from_fraction(acc)


def cf_matrix_identity(coeffs: list[int]) -> tuple[int, int, int, int]:
    """Entries (p, p', q, q') of the product of the matrices
    [[-r_i, 1], [-1, 0]] over the lens-form coefficients of -p/q.

    The product equals [[p, p'], [-q, -q']]; it satisfies pq' - p'q = -1,
    and reversing the coefficients expands -p/p'.
    """
    a, b, c, d = 1, 0, 0, 1
    for r in coeffs:
        a, b, c, d = a * (-r) + b * (-1), a, c * (-r) + d * (-1), c
    p, p_, q, q_ = a, b, -c, -d
    assert p * q_ - p_ * q == -1
    assert eval_neg_cf(list(reversed(coeffs))) == Slope(-p, p_)
    return p, p_, q, q_


def dual_fraction(p: int, q: int) -> Slope:
    """The largest extended rational p'/q' with pq' - p'q = -1.

    "Largest" puts 1/0 above every finite rational, so the answer is 1/0
    exactly when q == 1; otherwise it is the solution with the smallest
    positive q'.
    """
    if not (p > q > 0) or math.gcd(p, q) != 1:
        raise ValueError(f"need coprime p > q > 0, got ({p}, {q})")
    if q == 1:
        return INFINITY
    q_ = (-pow(p, -1, q)) % q
    p_ = (p * q_ + 1) // q
    return Slope(p_, q_)
