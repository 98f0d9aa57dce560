from fractions import Fraction

import pytest

from cfrac.errors import (
    InvalidDecomposition,
    MethodIndexMismatch,
    MismatchedIndices,
    MTooSmall,
    NotGaloisForm,
)
from cfrac.exact import GaussianInt
from cfrac.expansion import expand_real, psi_naive
from cfrac.fast import (
    ConvergentSession,
    Precalc,
    TraceTable,
    alg3_traces,
    decimation_closed_form,
    decimation_multiplier,
    decompose_binary,
    decompose_nested,
    needed_traces,
    psi_binary,
    psi_nested,
    t1_from_psi,
    t_double,
    t_pair_step,
    validate_nested,
)
from utils.op_counter import OpCounter

EX1_P89 = 7031582616783360742995441537263465239
EX1_Q89 = 4335108450922621626554341085216343809
EX3_P71 = GaussianInt(-64452969879034582258134562726849, -21217336886334890599158733121700)
EX3_Q71 = GaussianInt(-18405487633517442616165619582790, 1864795250277698166333066426570)


class TestDecomposition:
    def test_binary(self):
        dec = decompose_binary(89, 3, 8)
        assert dec.as_dict() == {"m0": 9, "n": [1, 3], "q": 2}
        assert dec.checkpoints == (25, 89)
        assert dec.lin_comb_count == 4
        assert dec.expected_mults == 4
        assert dec.recompose() == 89

    def test_nested(self):
        dec = decompose_nested(89, 3, 8)
        assert dec.as_dict() == {"m0": 9, "m": [1, 2], "k": [1, 5], "q": 2}
        assert dec.lin_comb_count == 3
        assert dec.binary_lin_comb_count == 4
        assert dec.recompose() == 89

    def test_nested_with_zero_first_exponent(self):
        dec = decompose_nested(71, 0, 12)
        assert dec.as_dict() == {"m0": 11, "m": [0, 2], "k": [1, 5], "q": 2}

    def test_m0_equal_to_r_saves_two_products(self):
        assert decompose_binary(10, 0, 1).expected_mults == 2

    def test_too_small(self):
        with pytest.raises(MTooSmall):
            decompose_binary(10, 3, 8)
        with pytest.raises(MTooSmall):
            decompose_nested(10, 3, 8)

    @pytest.mark.parametrize("ms, ks", [((), ()), ((1, 0), (1, 2)), ((1, 2), (1, 4)), ((-1,), (1,))])
    def test_invalid_nested(self, ms, ks):
        with pytest.raises(InvalidDecomposition):
            validate_nested(ms, ks)

    def test_needed_traces(self):
        assert needed_traces((1, 2), (1, 5)) == [1, 2, 5]


class TestTraces:
    def test_t1_both_ways(self, example_real):
        psi_r, psi_rl = psi_naive(example_real, 3), psi_naive(example_real, 11)
        assert t1_from_psi(psi_r, psi_rl, 8) == 2702

    def test_t1_mismatched_indices(self, example_real):
        with pytest.raises(MismatchedIndices):
            t1_from_psi(psi_naive(example_real, 3), psi_naive(example_real, 10), 8)

    def test_doubling_formulas(self):
        assert t_double(2702, 8) == 7300802
        assert t_pair_step(2702, 7300802, 2, 2702, 8) == (7300802, 2702 * 7300802 - 2702)

    def test_table_matches_direct_recurrence(self):
        for l, t1 in ((8, 2702), (1, 6), (3, -5)):
            table = TraceTable(l, t1)
            for k in range(60):
                assert table.ensure(k) == table.direct(k), (l, t1, k)

    def test_table_values_and_memo(self):
        counter = OpCounter()
        table = TraceTable(8, 2702, counter)
        assert table.ensure(5) == 144021200269567502
        assert table.get(3) == 19726764302
        stored = len(table)
        assert table.ensure(5) == 144021200269567502
        assert len(table) == stored
        assert counter.trace_ops == stored - 2
        table.clear()
        assert len(table) == 2 and 5 not in table

    def test_level_schedule(self):
        table = alg3_traces((1, 2), (1, 5), 2702, 8)
        assert table[2] == 7300802
        assert table[5] == 144021200269567502
        assert set(table.values) == {0, 1, 2, 3, 5}

    def test_level_schedule_zero_first_exponent(self):
        table = alg3_traces((0, 3, 1), (1, 3, 25), 6, 1)
        assert set(table.values) == {0, 1, 2, 3, 6, 12}
        for k in table.values:
            assert table[k] == table.direct(k)

    def test_gaussian_example_needs_only_t1_t2(self, example_gaussian):
        dec = decompose_nested(71, 0, 12)
        assert needed_traces(dec.exponents, dec.multipliers) == [1, 2]
        table = alg3_traces(dec.exponents, dec.multipliers, Precalc(example_gaussian).t1, 12)
        assert set(table.values) == {0, 1, 2}

    @pytest.mark.parametrize("m", [89, 150, 1000, 4097, 12345])
    @pytest.mark.parametrize("l, t1", [(8, 2702), (1, 6), (3, -5), (12, GaussianInt(3, 4))])
    def test_schedule_produces_every_needed_trace(self, m, l, t1):
        dec = decompose_nested(m, 0, l)
        table = alg3_traces(dec.exponents, dec.multipliers, t1, l)
        for k in needed_traces(dec.exponents, dec.multipliers):
            assert table[k] == table.direct(k), k

    def test_schedule_reuses_existing_entries(self):
        counter = OpCounter()
        table = TraceTable(8, 2702, counter)
        alg3_traces((1, 2), (1, 5), 2702, 8, table)
        stored = counter.trace_ops
        alg3_traces((1, 2), (1, 5), 2702, 8, table)
        assert counter.trace_ops == stored

    def test_negative_index(self):
        with pytest.raises(ValueError):
            TraceTable(1, 6).ensure(-1)


class TestAlgorithms:
    def test_example_m89(self, example_real):
        for algorithm in (psi_binary, psi_nested):
            psi = algorithm(example_real, 89)
            assert (psi.p, psi.q) == (EX1_P89, EX1_Q89)
            assert psi.index == 89

    @pytest.mark.parametrize("fixture", ["sqrt2", "sqrt7", "example_real", "example_gaussian"])
    def test_agree_with_iteration(self, request, fixture):
        cf = request.getfixturevalue(fixture)
        precalc = Precalc(cf)
        for m in range(-1, 160):
            expected = psi_naive(cf, m).matrix
            assert psi_binary(cf, m, precalc=precalc).matrix == expected, m
            assert psi_nested(cf, m, precalc=precalc).matrix == expected, m

    def test_gaussian_m71(self, example_gaussian):
        psi = psi_nested(example_gaussian, 71)
        assert (psi.p, psi.q) == (EX3_P71, EX3_Q71)

    def test_precalc_shift(self, example_real):
        precalc = Precalc(example_real)
        counter = OpCounter()
        p_m0l, phi = precalc.shifted(9, counter)
        assert p_m0l == psi_naive(example_real, 17).matrix
        assert counter.matrix_mults == 3
        assert precalc.t1 == 2702


class TestDecimation:
    @pytest.mark.parametrize("evaluator", ["matrix", "halve"])
    def test_closed_form_matches_iteration(self, sqrt7, evaluator):
        for k in range(1, 12):
            psi = psi_naive(sqrt7, k * 4 - 1)
            assert decimation_closed_form(sqrt7, k, evaluator) == (psi.p, psi.q)

    @pytest.mark.parametrize("N", [2, 3, 13, 19, 43])
    def test_square_roots(self, N):
        cf = expand_real(0, 1, 1, N)
        for k in (1, 2, 5, 8):
            psi = psi_naive(cf, k * cf.l - 1)
            assert decimation_closed_form(cf, k) == (psi.p, psi.q)

    def test_gaussian_m71(self, example_gaussian):
        assert decimation_closed_form(example_gaussian, 6) == (EX3_P71, EX3_Q71)
        assert decimation_closed_form(example_gaussian, 6, "halve") == (EX3_P71, EX3_Q71)

    def test_not_galois(self, example_real):
        with pytest.raises(NotGaloisForm):
            decimation_closed_form(example_real, 1)

    def test_multiplier(self, sqrt7):
        assert decimation_multiplier(sqrt7, 7) == 2
        with pytest.raises(MethodIndexMismatch):
            decimation_multiplier(sqrt7, 5)
        with pytest.raises(MethodIndexMismatch):
            decimation_multiplier(sqrt7, 2)

    def test_bad_arguments(self, sqrt7):
        with pytest.raises(ValueError):
            decimation_closed_form(sqrt7, 0)
        with pytest.raises(ValueError):
            decimation_closed_form(sqrt7, 2, evaluator="cubic")


class TestSession:
    def test_operation_counts(self, example_real):
        session = ConvergentSession(example_real)
        session.psi(89, "binary")
        assert session.last_ops.lin_combs == 4
        assert session.last_ops.matrix_mults == 4
        session.psi(89, "nested")
        assert session.last_ops.lin_combs == 3
        assert session.last_ops.matrix_mults == 4

    def test_all_methods_agree(self, sqrt7):
        session = ConvergentSession(sqrt7)
        for m in (3, 7, 39, 99):
            expected = session.convergent(m, "naive")
            methods = ["binary", "nested", "decimation"]
            if m >= 2 * sqrt7.l - 1:
                methods.append("householder")
            for method in methods:
                assert session.convergent(m, method) == expected, (m, method)

    def test_trace_is_index_independent(self, example_real):
        session = ConvergentSession(example_real)
        assert all(session.trace_at(n) == 2702 for n in range(3, 12))
        with pytest.raises(ValueError):
            session.trace_at(2)

    def test_method_validation(self, sqrt7):
        session = ConvergentSession(sqrt7)
        with pytest.raises(ValueError):
            session.convergent(10, "magic")
        with pytest.raises(ValueError):
            session.psi(7, "decimation")
        with pytest.raises(MethodIndexMismatch):
            session.convergent(5, "decimation")
        with pytest.raises(MethodIndexMismatch):
            session.convergent(3, "householder")
        with pytest.raises(MethodIndexMismatch):
            session.convergent(7, "householder", order=3)

    def test_not_galois(self, example_real):
        with pytest.raises(NotGaloisForm):
            ConvergentSession(example_real).convergent(7, "decimation")

    def test_stats_and_reset(self, example_real):
        session = ConvergentSession(example_real)
        session.convergent(89, "nested")
        session.convergent(200, "binary")
        stats = session.get_stats()
        assert stats["queries"] == 2
        assert stats["precalculated"]
        assert stats["trace_table_size"] > 2
        assert stats["op_counts"]["lin_combs"] > 0
        session.reset_state()
        stats = session.get_stats()
        assert stats["queries"] == 0
        assert stats["trace_table_size"] == 2
        assert stats["op_counts"]["lin_combs"] == 0

    def test_scaled_root_uses_alpha_squared(self):
        # 2*sqrt(2) = sqrt(8) = [2; (1, 4)]
        session = ConvergentSession(expand_real(0, 2, 1, 2))
        for method in ("householder", "decimation", "nested"):
            assert session.convergent(5, method) == (99, 35), method
        assert session.householder_config(5).N == 8
        assert session.oracle_ratio(5) == Fraction(99, 35)
