from fractions import Fraction

import mpmath
import pytest
from pydantic import ValidationError

from cfrac.errors import DerivativeZero, EvenOrderUnsupported, PellViolation
from cfrac.exact import GaussianInt
from cfrac.expansion import psi_naive
from cfrac.householder import (
    HouseholderConfig,
    householder_cheb,
    householder_oracle,
    householder_X_form,
    newton_compose,
    ratio,
    reciprocal_derivative,
)


class TestConfig:
    def test_defaults(self):
        cfg = HouseholderConfig(d=3, N=7, l=4)
        assert cfg.k == 4
        assert not cfg.is_gaussian
        assert HouseholderConfig(d=1, N=GaussianInt(9, 10), l=12).is_gaussian

    @pytest.mark.parametrize("fields", [
        {"d": 0, "N": 2, "l": 1},
        {"d": 1, "N": 2, "l": 0},
        {"d": 1, "N": "2", "l": 1},
        {"d": 1, "N": True, "l": 1},
    ])
    def test_rejects_bad_fields(self, fields):
        with pytest.raises(ValidationError):
            HouseholderConfig(**fields)

    def test_order_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("CF_MAX_HOUSEHOLDER_ORDER", "3")
        HouseholderConfig(d=3, N=2, l=1)
        with pytest.raises(ValidationError):
            HouseholderConfig(d=4, N=2, l=1)

    def test_frozen(self):
        cfg = HouseholderConfig(d=1, N=2, l=1)
        with pytest.raises(ValidationError):
            cfg.d = 2


class TestClosedForm:
    def test_sqrt2_steps(self):
        assert householder_cheb(1, 1, HouseholderConfig(d=1, N=2, l=1)) == (3, 2)
        assert householder_cheb(1, 1, HouseholderConfig(d=2, N=2, l=1)) == (7, 5)

    @pytest.mark.parametrize("d", range(1, 9))
    def test_lands_on_convergent(self, sqrt7, d):
        psi = psi_naive(sqrt7, (d + 1) * 4 - 1)
        assert householder_cheb(8, 3, HouseholderConfig(d=d, N=7, l=4)) == (psi.p, psi.q)

    @pytest.mark.parametrize("d", [1, 3, 5, 7])
    @pytest.mark.parametrize("p, q, N, l", [(1, 1, 2, 1), (8, 3, 7, 4), (18, 5, 13, 5)])
    def test_x_form(self, p, q, N, l, d):
        cfg = HouseholderConfig(d=d, N=N, l=l)
        assert householder_X_form(p, q, cfg) == ratio(*householder_cheb(p, q, cfg))

    def test_x_form_even_order(self):
        with pytest.raises(EvenOrderUnsupported):
            householder_X_form(8, 3, HouseholderConfig(d=2, N=7, l=4))

    def test_pell_violation(self):
        with pytest.raises(PellViolation):
            householder_cheb(2, 1, HouseholderConfig(d=1, N=2, l=1))
        with pytest.raises(PellViolation):
            householder_X_form(8, 3, HouseholderConfig(d=1, N=7, l=3))

    def test_newton_composition(self, sqrt2, sqrt7):
        assert newton_compose(1, 1, HouseholderConfig(d=1, N=2, l=1)) == (17, 12)
        p, q = newton_compose(8, 3, HouseholderConfig(d=1, N=7, l=4), times=3)
        psi = psi_naive(sqrt7, 8 * 4 - 1)
        assert (p, q) == (psi.p, psi.q)

    def test_gaussian_step(self, example_gaussian):
        p11 = psi_naive(example_gaussian, 11)
        cfg = HouseholderConfig(d=5, N=GaussianInt(9, 10), l=12)
        psi = psi_naive(example_gaussian, 71)
        assert householder_cheb(p11.p, p11.q, cfg) == (psi.p, psi.q)


class TestOracle:
    def test_newton_at_one(self):
        assert householder_oracle(Fraction(1), HouseholderConfig(d=1, N=2, l=1)) == Fraction(3, 2)

    def test_reciprocal_derivatives(self):
        # 1/f = 1/(x^2 - 2), (1/f)' = -2x/(x^2 - 2)^2
        assert reciprocal_derivative(Fraction(3), 2, 0) == Fraction(1, 7)
        assert reciprocal_derivative(Fraction(3), 2, 1) == Fraction(-6, 49)
        with pytest.raises(ValueError):
            reciprocal_derivative(Fraction(3), 2, -1)

    @pytest.mark.parametrize("d", range(1, 7))
    def test_agrees_with_closed_form(self, d):
        cfg = HouseholderConfig(d=d, N=7, l=4)
        assert householder_oracle(Fraction(8, 3), cfg) == ratio(*householder_cheb(8, 3, cfg))

    def test_gaussian_agrees_with_closed_form(self, example_gaussian):
        p11 = psi_naive(example_gaussian, 11)
        cfg = HouseholderConfig(d=5, N=GaussianInt(9, 10), l=12)
        expected = ratio(*householder_cheb(p11.p, p11.q, cfg))
        assert householder_oracle(ratio(p11.p, p11.q), cfg) == expected

    def test_root_of_f(self):
        with pytest.raises(DerivativeZero):
            householder_oracle(Fraction(2), HouseholderConfig(d=1, N=4, l=1))

    @pytest.mark.parametrize("d", [1, 2, 3, 5])
    def test_contraction(self, d):
        """Order-d step shrinks the error to at most its (d+1)-th power"""
        x = Fraction(8, 3)
        step = householder_oracle(x, HouseholderConfig(d=d, N=7, l=4))
        with mpmath.workdps(200):
            root = mpmath.sqrt(7)
            before = abs(mpmath.mpf(x.numerator) / x.denominator - root)
            after = abs(mpmath.mpf(step.numerator) / step.denominator - root)
            assert after < before ** (d + 1)
