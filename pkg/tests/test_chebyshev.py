import pytest

from cfrac.chebyshev import (
    FAMILIES,
    IDENTITY_TAGS,
    check_identity,
    eval_halve_square,
    eval_matrix_power,
    eval_naive,
    get_family,
    random_unimodular,
    run_identity_suite,
    signed,
    signed_dilated_T,
    signed_T,
    signed_U,
)
from cfrac.chebyshev.families import T, TBAR, TD, U, UD, V, W
from cfrac.errors import UnknownIdentity
from cfrac.exact import GaussianInt
from utils.op_counter import OpCounter


class TestFamilies:
    @pytest.mark.parametrize("fam, k, x, expected", [
        (T, 3, 2, 26),
        (U, 3, 2, 56),
        (V, 2, 2, 11),
        (W, 2, 2, 19),
        (TD, 2, 3, 7),
        (UD, 2, 4, 15),
        (TBAR, 2, 3, 19),
        (T, 0, 5, 1),
        (U, 1, 5, 10),
    ])
    def test_values(self, fam, k, x, expected):
        assert eval_naive(fam, k, x) == expected

    def test_index_minus_one(self):
        assert eval_naive(T, -1, 7) == 7
        assert eval_naive(U, -1, 7) == 0
        assert signed_U(1, -1, 7) == 0
        with pytest.raises(ValueError):
            eval_naive(T, -2, 7)

    def test_signed_selection(self):
        assert signed("T", 4) is T
        assert signed("T", 3) is TBAR
        assert signed("UD", 2) is UD
        with pytest.raises(UnknownIdentity):
            signed("V", 1)

    def test_registry(self):
        assert set(FAMILIES) == {"T", "U", "V", "W", "TD", "UD", "TBAR", "UBAR", "TDBAR", "UDBAR"}
        assert get_family("W") is W
        with pytest.raises(UnknownIdentity):
            get_family("Z")

    def test_gaussian_argument(self):
        x = GaussianInt(1, 2)
        assert eval_naive(T, 2, x) == 2 * x * x - 1

    def test_factorizations_at_large_argument(self):
        x = 10**30 + 7
        assert signed_T(0, 6, x) == (2 * x * x - 1) * (16 * x**4 - 16 * x * x + 1)
        assert signed_U(0, 5, x) == 2 * x * (2 * x + 1) * (2 * x - 1) * (4 * x * x - 3)

    def test_dilated_trace_family(self):
        # t_k for t_1 = 2702, l = 8
        assert signed_dilated_T(8, 2, 2702) == 7300802
        assert signed_dilated_T(8, 4, 2702) == 53301709843202


class TestEvaluators:
    @pytest.mark.parametrize("l", [1, 2, 3, 12])
    @pytest.mark.parametrize("x", [-3, 2, 17, GaussianInt(3, -1)])
    def test_three_methods_agree(self, l, x):
        for k in range(0, 40):
            expected = (signed_T(l, k, x), signed_U(l, k, x), signed_U(l, k - 1, x))
            assert eval_matrix_power(l, k, x) == expected
            state = eval_halve_square(l, k, x)
            assert (state.T, state.U, state.U_prev) == expected
            assert (state.T_next, state.U_next) == (signed_T(l, k + 1, x), signed_U(l, k + 1, x))

    def test_halve_square_cost(self):
        counter = OpCounter()
        eval_halve_square(2, 13, 5, counter)
        assert counter.lin_combs == 2 * (13).bit_length()
        assert counter.matrix_mults == 0

    def test_negative_index(self):
        with pytest.raises(ValueError):
            eval_matrix_power(1, -1, 3)
        with pytest.raises(ValueError):
            eval_halve_square(1, -1, 3)


class TestIdentities:
    @pytest.mark.parametrize("tag", IDENTITY_TAGS)
    @pytest.mark.parametrize("x", [-7, -1, 0, 1, 2, 13])
    def test_each_identity(self, tag, x):
        for k in range(0, 7):
            assert check_identity(tag, x, k, extra=3), (tag, x, k)

    def test_unknown_tag(self):
        with pytest.raises(UnknownIdentity):
            check_identity("nope", 1, 1)
        with pytest.raises(UnknownIdentity):
            run_identity_suite(1, tags=["nope"])

    def test_suite_passes(self):
        results = run_identity_suite(trials=10, seed=1, max_k=12)
        assert set(results) == set(IDENTITY_TAGS)
        assert all(r["failed"] == 0 and r["passed"] == 10 for r in results.values())
        assert all(r["first_failure"] is None for r in results.values())

    def test_suite_is_deterministic(self):
        assert run_identity_suite(5, seed=42, max_k=8) == run_identity_suite(5, seed=42, max_k=8)

    @pytest.mark.parametrize("det", [1, -1])
    def test_random_unimodular_matrices(self, det):
        matrices = [random_unimodular(x, seed, det) for x in (-3, 0, 5) for seed in range(20)]
        assert all(M.det == det for M in matrices)
        # not confined to one two-parameter family
        assert len({(M.b, M.c) for M in matrices}) > 30
        assert any(M.a != 1 and M.d != 1 and M.b != 1 for M in matrices)

    @pytest.mark.parametrize("tag", ["trace-prop1", "trace-prop2"])
    def test_trace_identities_on_random_unimodular_matrices(self, tag):
        for seed in range(50):
            for k in (0, 1, 2, 7, 20):
                assert check_identity(tag, seed % 11 - 5, k, extra=seed), (tag, seed, k)
