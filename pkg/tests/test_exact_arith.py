from fractions import Fraction

import pytest

from cfrac.errors import NegativeRadicand, NonUnimodular
from cfrac.exact import (
    IOTA,
    GaussianInt,
    GaussianRational,
    Mat2,
    QuadExtElem,
    gauss_round,
    gaussian_isqrt,
    isqrt,
    lin_comb,
    mat_inv_unimodular,
    mat_mul,
    mat_pow,
    parity_sign,
    rational_sqrt,
    sign_of_surd,
)
from utils.op_counter import OpCounter


class TestIntegers:
    def test_isqrt_flags_exactness(self):
        assert isqrt(10) == (3, False)
        assert isqrt(16) == (4, True)
        assert isqrt(0) == (0, True)

    def test_isqrt_big(self):
        n = 10**50 + 3
        assert isqrt(n * n) == (n, True)
        assert isqrt(n * n - 1) == (n - 1, False)

    def test_isqrt_negative(self):
        with pytest.raises(NegativeRadicand):
            isqrt(-1)

    def test_rational_sqrt(self):
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_sqrt(Fraction(2)) is None
        assert rational_sqrt(Fraction(-1)) is None

    def test_parity_sign(self):
        assert [parity_sign(e) for e in range(-2, 3)] == [1, -1, 1, -1, 1]

    @pytest.mark.parametrize("r0, r1, d, expected", [
        (Fraction(-3), Fraction(2), Fraction(2), -1),
        (Fraction(3), Fraction(-2), Fraction(2), 1),
        (Fraction(-2), Fraction(1), Fraction(4), 0),
        (Fraction(0), Fraction(-1), Fraction(5), -1),
        (Fraction(1, 3), Fraction(0), Fraction(7), 1),
    ])
    def test_sign_of_surd(self, r0, r1, d, expected):
        assert sign_of_surd(r0, r1, d) == expected


class TestGaussian:
    def test_parse_and_str(self):
        assert GaussianInt.parse("3-2i") == GaussianInt(3, -2)
        assert GaussianInt.parse("-i") == GaussianInt(0, -1)
        assert GaussianInt.parse("7") == 7
        assert str(GaussianInt(3, -2)) == "3-2i"

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            GaussianInt.parse("3+2k")

    def test_embeds_integers(self):
        assert GaussianInt(5, 0) == 5
        assert hash(GaussianInt(5, 0)) == hash(5)
        assert IOTA * IOTA == -1

    def test_canonical_rational(self):
        z = GaussianRational(GaussianInt(2, 4), -6)
        assert z.num == GaussianInt(-1, -2)
        assert z.den == 3
        assert GaussianRational(GaussianInt(4, 0), 2) == 2

    def test_division(self):
        q = GaussianInt(1, 2) / GaussianInt(3, -1)
        assert q == GaussianRational(GaussianInt(1, 7), 10)
        assert GaussianInt(3, 4).divide_exact(GaussianInt(2, 1)) == GaussianInt(2, 1)
        with pytest.raises(ValueError):
            GaussianInt(3, 4).divide_exact(2)

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational.coerce(1) / GaussianInt(0, 0)

    def test_round_ties_go_up(self):
        half = GaussianRational.from_parts(Fraction(1, 2), Fraction(-1, 2))
        assert gauss_round(half) == GaussianInt(1, 0)
        assert gauss_round(Fraction(-3, 2)) == GaussianInt(-1, 0)
        assert gauss_round(GaussianRational.from_parts(Fraction(7, 3), Fraction(-5, 3))) == GaussianInt(2, -2)

    def test_gaussian_isqrt(self):
        assert gaussian_isqrt(GaussianInt(3, 4)) == GaussianInt(2, 1)
        assert gaussian_isqrt(-4) == GaussianInt(0, 2)
        assert gaussian_isqrt(GaussianInt(9, 10)) is None
        assert gaussian_isqrt(2) is None


class TestQuadratic:
    def test_unit_and_inverse(self):
        e = QuadExtElem(1, 1, 2)
        assert e * e.conjugate() == -1
        assert e.inverse() == QuadExtElem(-1, 1, 2)
        assert e ** -2 == e.inverse() * e.inverse()

    def test_rational_operands(self):
        e = QuadExtElem(Fraction(1, 2), 3, 5)
        assert e + 1 == QuadExtElem(Fraction(3, 2), 3, 5)
        assert 2 * e == QuadExtElem(1, 6, 5)
        assert e.norm() == Fraction(1, 4) - 45

    def test_gaussian_coefficients(self):
        N = GaussianInt(9, 10)
        root = QuadExtElem.sqrt(N)
        assert root.is_gaussian
        assert root * root == QuadExtElem(N, 0, N)

    def test_mixed_radicands_rejected(self):
        with pytest.raises(ValueError):
            QuadExtElem(0, 1, 2) + QuadExtElem(0, 1, 3)

    def test_zero_not_invertible(self):
        with pytest.raises(ZeroDivisionError):
            QuadExtElem(0, 0, 2).inverse()


class TestMatrix:
    def test_fibonacci_power(self):
        assert mat_pow(Mat2.companion(1), 10) == Mat2(89, 55, 55, 34)
        assert mat_pow(Mat2.companion(1), 0) == Mat2.identity()

    def test_power_counts_products(self):
        counter = OpCounter()
        mat_pow(Mat2.companion(3), 5, counter)
        assert counter.matrix_mults == 3

    def test_unimodular_inverse(self):
        A = Mat2(2, 1, 1, 1)
        assert mat_inv_unimodular(A) == Mat2(1, -1, -1, 2)
        G = Mat2(IOTA, 0, 0, 1)
        assert mat_inv_unimodular(G) @ G == Mat2.identity()

    def test_non_unimodular(self):
        with pytest.raises(NonUnimodular):
            mat_inv_unimodular(Mat2(2, 0, 0, 1))

    def test_counted_operations(self):
        counter = OpCounter()
        A, B = Mat2(1, 2, 3, 4), Mat2.identity()
        assert mat_mul(A, B, counter) == A
        assert lin_comb(2, A, -1, B, counter) == Mat2(1, 4, 6, 7)
        assert (counter.matrix_mults, counter.lin_combs, counter.matrix_level) == (1, 1, 2)

    def test_counter_snapshot_difference(self):
        counter = OpCounter(matrix_mults=3, lin_combs=2)
        before = counter.snapshot()
        counter.lin_combs += 4
        assert (counter - before).as_dict() == {
            "matrix_mults": 0, "lin_combs": 4, "trace_ops": 0, "precalc_steps": 0,
        }
        counter.reset()
        assert counter.matrix_level == 0
