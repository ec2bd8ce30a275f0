import math
import random
from fractions import Fraction

import pytest

from lensknots.surgery import (
    LinkingData,
    SurgeryChain,
    build_chain,
    det_bareiss,
    linking_matrix,
    meridian_lk,
    rot_choices,
    rot_q_surgery,
    rot_spectrum,
    solve_exact,
)


def test_build_chain():
    chain = build_chain(12, 5, "k1")
    assert chain.framings == (-3, -2, -3)
    assert chain.meridian_of == "first"
    assert build_chain(12, 5, "k2").meridian_of == "last"
    with pytest.raises(ValueError):
        build_chain(12, 5, "k3")
    with pytest.raises(ValueError):
        build_chain(4, 2)


def test_chain_validation():
    with pytest.raises(ValueError):
        SurgeryChain((-1,), "first")
    with pytest.raises(ValueError):
        SurgeryChain((-2,), "middle")


def test_linking_matrix_shape():
    m = linking_matrix(SurgeryChain((-3, -2, -3)))
    assert m == ((-3, 1, 0), (1, -2, 1), (0, 1, -3))


def test_meridian_lk():
    chain = SurgeryChain((-3, -2, -3), "last")
    assert meridian_lk(chain) == (0, 0, 1)
    assert meridian_lk(SurgeryChain((-3, -2, -3))) == (1, 0, 0)


def test_rot_choices():
    chain = SurgeryChain((-3, -2))
    assert rot_choices(chain) == [(-1, 0), (1, 0)]
    # a -2 framed component admits only rotation 0
    assert rot_choices(SurgeryChain((-2, -2))) == [(0, 0)]


class TestDeterminant:
    def test_matches_p(self):
        for p in range(2, 60):
            for q in range(1, p):
                if math.gcd(p, q) != 1:
                    continue
                m = linking_matrix(build_chain(p, q))
                assert abs(det_bareiss(m)) == p

    def test_random_vs_permutation_expansion(self):
        def naive_det(m):
            import itertools

            n = len(m)
            total = 0
            for perm in itertools.permutations(range(n)):
                sign = 1
                for i in range(n):
                    for j in range(i + 1, n):
                        if perm[i] > perm[j]:
                            sign = -sign
                prod = 1
                for i in range(n):
                    prod *= m[i][perm[i]]
                total += sign * prod
            return total

        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(1, 5)
            m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            assert det_bareiss(m) == naive_det(m)

    def test_singular(self):
        assert det_bareiss([[1, 2], [2, 4]]) == 0
        assert det_bareiss([[0, 1], [1, 0]]) == -1  # needs a row swap


def test_solve_exact():
    m = [[-3, 1], [1, -2]]
    x = solve_exact(m, [1, 0])
    assert x == [Fraction(-2, 5), Fraction(-1, 5)]
    with pytest.raises(ValueError):
        solve_exact([[1, 1], [1, 1]], [1, 0])


class TestRotation:
    def test_single_component(self):
        # L(3,1): chain (-3), meridian rot = -rot1 * (1 / -3)
        m = ((-3,),)
        assert rot_q_surgery(LinkingData(m, (-1,), (1,))) == Fraction(-1, 3)
        assert rot_q_surgery(LinkingData(m, (1,), (1,))) == Fraction(1, 3)

    @pytest.mark.parametrize(
        "p,q,knot,spectrum",
        [
            (3, 1, "k1", [Fraction(-1, 3), Fraction(1, 3)]),
            (5, 2, "k1", [Fraction(-2, 5), Fraction(2, 5)]),
            (5, 2, "k2", [Fraction(-1, 5), Fraction(1, 5)]),
            (5, 3, "k1", [Fraction(-1, 5), Fraction(1, 5)]),
            (5, 3, "k2", [Fraction(-2, 5), Fraction(2, 5)]),
            (
                9,
                2,
                "k1",
                [Fraction(-2, 3), Fraction(-2, 9), Fraction(2, 9), Fraction(2, 3)],
            ),
        ],
    )
    def test_spectra(self, p, q, knot, spectrum):
        assert rot_spectrum(p, q, knot) == spectrum

    def test_spectrum_is_symmetric(self):
        for p, q in [(7, 2), (12, 5), (11, 3)]:
            for knot in ("k1", "k2"):
                values = rot_spectrum(p, q, knot)
                assert values == sorted(-v for v in values)

    def test_denominator_divides_order(self):
        for p, q in [(7, 3), (12, 5), (15, 4)]:
            for v in rot_spectrum(p, q):
                assert (v * p).denominator == 1
