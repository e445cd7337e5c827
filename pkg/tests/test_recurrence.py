from fractions import Fraction as F

import numpy as np
import pytest

from oscillift import (DefinitenessError, PeriodicRecurrence, coefficient_vector,
                       coefficients_at, eval_monic, eval_orthonormal,
                       jacobi_matrix, symmetrize)
from oscillift.recurrence import alpha_product_form

from conftest import fam


class TestCoefficientsAt:
    def test_periodic_extension_odd(self, family_case1):
        assert coefficients_at(family_case1, 5) == (2, 2)

    def test_periodic_extension_even(self, family_case1):
        assert coefficients_at(family_case1, 4) == (0, 1)

    def test_period_three(self):
        f = fam([0, 0, 1, 2, 3], [1, 5, 6, 7], k=3)
        # n = 3*1 + 2 falls back on the first tail slot
        assert f.gamma(5) == 5

    def test_gamma_zero_undefined(self, family_case1):
        with pytest.raises(ValueError):
            family_case1.gamma(0)

    def test_periodicity_long_range(self, family_case1):
        for n in range(2, 101):
            assert family_case1.beta(n) == family_case1.beta(n + 2)
            assert family_case1.gamma(n) == family_case1.gamma(n + 2)


class TestEvalMonic:
    def test_degree_zero(self, family_case1):
        assert eval_monic(family_case1, 0, 3.7) == 1

    def test_degree_one(self, family_free_tail):
        assert eval_monic(family_free_tail, 1, 5) == 5

    def test_hand_recurrence(self, family_case1):
        # (2-1)*(2-0) - 1*1
        assert eval_monic(family_case1, 2, F(2)) == 1

    def test_matches_coefficient_vector(self, family_case1):
        xs = [F(j, 6) for j in range(-24, 25)]        # 49 points in [-4, 4]
        for n in range(21):
            coeffs = coefficient_vector(family_case1, n)
            for x in xs:
                horner = F(0)
                for c in reversed(coeffs):
                    horner = horner * x + c
                assert eval_monic(family_case1, n, x) == horner
                approx = eval_monic(family_case1, n, float(x))
                assert abs(approx - float(horner)) <= 1e-10 * max(1.0, abs(float(horner)))

    def test_extended_precision_high_degree(self, family_case1):
        exact = eval_monic(family_case1, 40, F(3))
        approx = eval_monic(family_case1, 40, 3.0)
        assert abs(approx - float(exact)) <= 1e-9 * abs(float(exact))


class TestCoefficientVector:
    def test_degree_zero(self, family_case1):
        assert coefficient_vector(family_case1, 0) == [1]

    def test_degree_one(self, family_free_tail):
        assert coefficient_vector(family_free_tail, 1) == [0, 1]

    def test_degree_two(self, family_case1):
        assert coefficient_vector(family_case1, 2) == [-1, -1, 1]

    def test_monic(self, family_case2):
        for n in range(12):
            vec = coefficient_vector(family_case2, n)
            assert len(vec) == n + 1 and vec[-1] == 1

    def test_rejects_floats(self):
        f = PeriodicRecurrence.from_lists([0.5, 0.0, 0.0, 0.0], [1.0, 1.0, 1.0])
        with pytest.raises(TypeError):
            coefficient_vector(f, 3)


class TestJacobiMatrix:
    def test_dim_one(self, family_case1):
        m = jacobi_matrix(family_case1, 1)
        assert m.diagonal == (0,) and m.subdiagonal == ()

    def test_small_fill(self, family_case1):
        m = jacobi_matrix(family_case1, 3)
        assert m.diagonal == (0, 1, 0)
        assert m.subdiagonal == (1, 1)

    def test_periodic_entries(self, family_case1):
        d = jacobi_matrix(family_case1, 6).to_dense()
        assert d[5, 4] == 2.0 and d[4, 4] == 0.0

    def test_dim_zero_rejected(self, family_case1):
        with pytest.raises(ValueError):
            jacobi_matrix(family_case1, 0)

    def test_block_partition(self, family_case1):
        d = jacobi_matrix(family_case1, 8).to_dense()
        # head block, coupling entries, then the periodic tail block
        assert d[2, 3] == 1.0 and d[3, 2] == float(family_case1.gamma(3))
        assert d[0, 0] == 0.0 and d[1, 1] == 1.0
        for j in range(3, 7):
            assert d[j, j] == float(family_case1.beta(j))

    def test_three_term_action(self, family_case1):
        D = 9
        dmat = jacobi_matrix(family_case1, D).to_dense()
        for x in (-1.3, 0.25, 2.0):
            vec = np.array([float(eval_monic(family_case1, j, x)) for j in range(D)])
            out = dmat @ vec
            for j in range(D - 1):
                expect = x * vec[j]
                assert abs(out[j] - expect) <= 1e-9 * max(1.0, abs(expect))


class TestSymmetrize:
    def test_b_values(self, family_case1):
        sym = symmetrize(family_case1, 5)
        expect = [1.0, 1.0, 2 ** 0.5, 1.0, 2 ** 0.5]
        assert [float(b) for b in sym.b[:5]] == pytest.approx(expect, abs=1e-15)

    def test_unit_case(self, family_free_tail):
        sym = symmetrize(family_free_tail, 8)
        assert all(float(b) == 1.0 for b in sym.b)
        assert all(float(a) == 1.0 for a in sym.alpha)

    def test_negative_gamma_rejected(self):
        f = fam([0, 0, 0, 0], [1, -1, 1], definiteness="quasi")
        with pytest.raises(DefinitenessError):
            symmetrize(f, 4)

    def test_round_trip(self, family_case2):
        sym = symmetrize(family_case2, 16)
        for x in (-2.5, -0.3, 0.9, 3.1):
            for n in range(16):
                monic = float(eval_monic(family_case2, n, x))
                recon = float(sym.alpha[n]) * eval_orthonormal(family_case2, n, x)
                assert abs(recon - monic) <= 1e-10 * max(1.0, abs(monic))

    def test_alpha_matches_index_split_form(self, family_case1):
        sym = symmetrize(family_case1, 12)
        for n in range(12):
            assert float(sym.alpha[n]) == pytest.approx(
                alpha_product_form(family_case1, n), rel=1e-12)

    def test_alpha_split_form_period_three(self):
        f = fam([0, 0, 0, 0, 0], [1, 2, 3, 4], k=3)
        sym = symmetrize(f, 10)
        for n in range(10):
            assert float(sym.alpha[n]) == pytest.approx(
                alpha_product_form(f, n), rel=1e-12)


class TestValidation:
    def test_gamma_nonzero_enforced(self):
        with pytest.raises(ValueError):
            fam([0, 0, 0, 0], [0, 1, 1])

    def test_positive_enforced(self):
        with pytest.raises(DefinitenessError):
            fam([0, 0, 0, 0], [1, -2, 1])

    def test_quasi_allows_negative(self):
        f = fam([0, 0, 0, 0], [1, -2, 1], definiteness="quasi")
        assert f.gamma(2) == -2

    def test_tail_length_checked(self):
        with pytest.raises(ValueError):
            PeriodicRecurrence(k=2, beta_head=(0, 0), beta_tail=(1,),
                               gamma_head=(1,), gamma_tail=(1, 1))
