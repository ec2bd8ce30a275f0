"""Chain surgery presentations of rational unknots and the linking-matrix
rotation number formula.

The rational unknots in L(p,q) arise from a chain of unknots with framings
given by the negative continued fraction of -p/q, with a meridian hung on
the first or the last component.  All linear algebra is fraction-free
integer elimination; no floats.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .slopes import Slope, neg_cf

KNOTS = ("k1", "k2")


@dataclass(frozen=True)
class SurgeryChain:
    """Chain of unknot surgery components with integer framings <= -2.

    Component i sits at tb = framings[i] + 1; the meridian that realizes
    the rational unknot links the first component (k1) or the last (k2).
    """

    framings: tuple[int, ...]
    meridian_of: str = "first"

    def __post_init__(self):
        if any(r > -2 for r in self.framings):
            raise ValueError("chain framings must be <= -2")
        if self.meridian_of not in ("first", "last"):
            raise ValueError("meridian_of must be 'first' or 'last'")


@dataclass(frozen=True)
class LinkingData:
    """Inputs to the surgery-presentation rotation number formula."""

    matrix: tuple[tuple[int, ...], ...]
    rot: tuple[int, ...]
    lk: tuple[int, ...]
    rot0: int = 0


def build_chain(p: int, q: int, knot: str = "k1") -> SurgeryChain:
    """Surgery chain presenting the rational unknot k1 or k2 in L(p,q)."""
    if not (p > q > 0) or math.gcd(p, q) != 1:
        raise ValueError(f"need coprime p > q > 0, got ({p}, {q})")
    if knot not in KNOTS:
        raise ValueError(f"knot must be one of {KNOTS}, got {knot!r}")
    framings = tuple(neg_cf(Slope(-p, q)))
    return SurgeryChain(framings, "first" if knot == "k1" else "last")


def linking_matrix(chain: SurgeryChain) -> tuple[tuple[int, ...], ...]:
    """Tridiagonal linking matrix: framings on the diagonal, 1 off it."""
    n = len(chain.framings)
    return tuple(
        tuple(
            chain.framings[i] if i == j else (1 if abs(i - j) == 1 else 0)
            for j in range(n)
        )
        for i in range(n)
    )


def meridian_lk(chain: SurgeryChain) -> tuple[int, ...]:
    """Linking vector of the meridian: a single +1 on its chain component."""
    n = len(chain.framings)
    idx = 0 if chain.meridian_of == "first" else n - 1
    return tuple(1 if i == idx else 0 for i in range(n))


def rot_choices(chain: SurgeryChain) -> list[tuple[int, ...]]:
    """All admissible rotation vectors of the chain components.

    A tb = r+1 unknot has rotation numbers r+2, r+4, ..., -(r+2); the chain
    choices are the Cartesian product, one tuple per stabilization pattern.
    """
    per_component = [range(r + 2, -(r + 2) + 1, 2) for r in chain.framings]
    return [tuple(v) for v in itertools.product(*per_component)]


def det_bareiss(matrix) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss)
    elimination; every intermediate value is an exact integer."""
    m = [list(row) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve_exact(matrix, rhs) -> list[Fraction]:
    """Exact solution of an integer linear system via Cramer's rule on
    Bareiss determinants."""
    d = det_bareiss(matrix)
    if d == 0:
        raise ValueError("singular linking matrix")
    n = len(rhs)
    out = []
    for col in range(n):
        replaced = [
            [rhs[i] if j == col else matrix[i][j] for j in range(n)]
            for i in range(n)
        ]
        out.append(Fraction(det_bareiss(replaced), d))
    return out


def rot_q_surgery(data: LinkingData, order: int | None = None) -> Fraction:
    """Rational rotation number rot0 - rot . M^-1 . lk, exactly."""
    x = solve_exact(data.matrix, list(data.lk))
    value = data.rot0 - sum(r * xi for r, xi in zip(data.rot, x))
    if order is not None:
        assert (value * order).denominator == 1
    return value


def rot_spectrum(p: int, q: int, knot: str = "k1") -> list[Fraction]:
    """Sorted multiset of rational rotation numbers of the given rational
    unknot over all stabilization choices of the chain."""
    chain = build_chain(p, q, knot)
    matrix = linking_matrix(chain)
    lk = meridian_lk(chain)
    order = abs(det_bareiss(matrix))
    assert order == p
    return sorted(
        rot_q_surgery(LinkingData(matrix, rot, lk, 0), order)
        for rot in rot_choices(chain)
    )
