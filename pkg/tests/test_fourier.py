import math

import numpy as np
import pytest

from binopt.common.exceptions import AsymmetricMatrixError, InvalidProblemError
from binopt.fourier import (
    BitString,
    FourierSpectrum,
    FunctionTable,
    PolynomialTerm,
    PseudoBooleanPolynomial,
    QuboMatrix,
    evaluate_spectrum,
    fourier_fast,
    fourier_naive,
    inner_product,
    parity_table,
    poly_bounds,
    poly_table,
    poly_to_fourier,
    qubo_bounds,
    qubo_table,
    qubo_to_fourier,
    spectrum_to_table,
    table_bounds,
    walsh_hadamard,
)


def _random_qubo(rng: np.random.Generator, n: int) -> QuboMatrix:
    a = rng.normal(size=(n, n))
    return QuboMatrix(n=n, matrix=a + a.T)


def _random_polynomial(rng: np.random.Generator, n: int, terms: int = 8) -> PseudoBooleanPolynomial:
    pairs = []
    for _ in range(terms):
        degree = int(rng.integers(0, min(n, 4) + 1))
        indices = rng.choice(n, size=degree, replace=False).tolist()
        pairs.append((indices, float(rng.normal())))
    return PseudoBooleanPolynomial.from_terms(n, pairs)


class TestWorkedQubo:
    def test_extrema_values(self, glover_table):
        assert glover_table(BitString.from_str("1001")) == -11.0
        assert glover_table(BitString.from_str("1111")) == 2.0
        assert glover_table.values.min() == -11.0
        assert glover_table.values.max() == 2.0

    def test_matrix_orientation(self, glover_qubo):
        # printed row x1 holds Q[1][0] = 5
        assert glover_qubo.matrix[1, 0] == 5.0
        assert glover_qubo.matrix[3, 3] == -5.0
        assert glover_qubo.evaluate(BitString.from_str("1001")) == -11.0

    def test_bounds(self, glover_qubo):
        bounds = qubo_bounds(glover_qubo)
        assert bounds.q_minus == -22.0
        assert bounds.q_plus == 24.0
        assert bounds.norm11 == 46.0
        assert not bounds.degenerate

    def test_spectrum(self, glover_qubo, glover_table):
        spectrum = qubo_to_fourier(glover_qubo)
        assert spectrum.coefficient(0) == -5.0
        assert spectrum.coefficient(0b1000) == -0.5
        # row x2 sums to zero
        assert spectrum.coefficient(0b0100) == 0.0
        assert spectrum.coefficient(0b0011) == 2.5
        assert spectrum.degree == 2
        np.testing.assert_allclose(
            spectrum.to_dense(), fourier_naive(glover_table).to_dense(), atol=1e-12
        )

    def test_support_within_quadratic_masks(self, glover_qubo):
        spectrum = qubo_to_fourier(glover_qubo)
        quadratic_masks = [m for m in range(16) if m.bit_count() <= 2]
        assert len(quadratic_masks) == 11
        assert set(spectrum.masks) <= set(quadratic_masks)
        assert spectrum.support_size == 8


class TestTransforms:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_fast_matches_naive(self, rng, n):
        f = FunctionTable(n=n, values=rng.normal(size=1 << n))
        np.testing.assert_allclose(
            fourier_fast(f).to_dense(), fourier_naive(f).to_dense(), atol=1e-12
        )

    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_parseval(self, rng, n):
        f = FunctionTable(n=n, values=rng.normal(size=1 << n))
        energy = float(np.sum(fourier_fast(f).to_dense() ** 2))
        assert math.isclose(energy, inner_product(f, f), rel_tol=1e-12)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_inverse_transform(self, rng, n):
        f = FunctionTable(n=n, values=rng.normal(size=1 << n))
        np.testing.assert_allclose(spectrum_to_table(fourier_fast(f)).values, f.values, atol=1e-12)

    def test_walsh_hadamard_twice_scales_by_length(self, rng):
        values = rng.normal(size=16)
        np.testing.assert_allclose(walsh_hadamard(walsh_hadamard(values)), 16 * values, atol=1e-12)

    def test_walsh_hadamard_rejects_odd_length(self):
        with pytest.raises(ValueError):
            walsh_hadamard(np.ones(6))

    def test_parity_tables_are_orthonormal(self):
        n = 3
        for s in range(1 << n):
            for t in range(1 << n):
                expected = 1.0 if s == t else 0.0
                assert inner_product(parity_table(s, n), parity_table(t, n)) == expected

    def test_evaluate_spectrum(self, rng):
        f = FunctionTable(n=4, values=rng.normal(size=16))
        spectrum = fourier_fast(f)
        for v in range(16):
            assert math.isclose(
                evaluate_spectrum(spectrum, BitString(n=4, value=v)), f(v), abs_tol=1e-12
            )

    def test_zero_function_has_empty_spectrum(self):
        assert fourier_fast(FunctionTable.constant(3)).support_size == 0
        assert evaluate_spectrum(FourierSpectrum(n=3), BitString(n=3, value=5)) == 0.0


class TestClosedForms:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_qubo_matches_table_transform(self, rng, n):
        q = _random_qubo(rng, n)
        np.testing.assert_allclose(
            qubo_to_fourier(q).to_dense(), fourier_fast(qubo_table(q)).to_dense(), atol=1e-12
        )

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_poly_matches_table_transform(self, rng, n):
        p = _random_polynomial(rng, n)
        np.testing.assert_allclose(
            poly_to_fourier(p).to_dense(), fourier_fast(poly_table(p)).to_dense(), atol=1e-12
        )

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_poly_support_within_degree(self, rng, n):
        for _ in range(20):
            p = _random_polynomial(rng, n)
            spectrum = poly_to_fourier(p)
            assert spectrum.degree <= p.degree
            assert all(mask.bit_count() <= p.degree for mask in spectrum.coeffs)

    def test_cubic_term_reaches_degree_three(self):
        p = PseudoBooleanPolynomial.from_terms(4, [([0, 2, 3], 8.0), ([1], 1.0)])
        spectrum = poly_to_fourier(p)
        assert spectrum.degree == 3
        assert spectrum.coefficient(0b1101) == pytest.approx(-1.0)

    def test_single_product_term(self):
        p = PseudoBooleanPolynomial.from_terms(2, [([0, 1], 4.0)])
        assert poly_to_fourier(p).coeffs == {0: 1.0, 1: -1.0, 2: -1.0, 3: 1.0}

    def test_constant_term(self):
        p = PseudoBooleanPolynomial.from_terms(3, [([], 2.5)])
        assert poly_to_fourier(p).coeffs == {0: 2.5}
        np.testing.assert_array_equal(poly_table(p).values, np.full(8, 2.5))

    def test_polynomial_table_matches_evaluate(self, rng):
        p = _random_polynomial(rng, 5)
        table = poly_table(p)
        for v in range(32):
            assert math.isclose(table(v), p.evaluate(v), abs_tol=1e-12)


class TestProblemTypes:
    def test_asymmetric_matrix_rejected(self):
        with pytest.raises(AsymmetricMatrixError):
            QuboMatrix.from_rows([[1, 2], [0, 1]])

    def test_symmetrize(self):
        q = QuboMatrix.from_rows([[1, 2], [0, 1]], symmetrize=True)
        np.testing.assert_array_equal(q.matrix, [[1, 1], [1, 1]])

    def test_non_square_matrix_rejected(self):
        with pytest.raises(InvalidProblemError):
            QuboMatrix.from_rows([[1, 2, 3], [4, 5, 6]])

    def test_ragged_rows_rejected(self):
        with pytest.raises(InvalidProblemError):
            QuboMatrix.from_rows([[1, 2], [3]])

    def test_table_length_checked(self):
        with pytest.raises(InvalidProblemError):
            FunctionTable(n=3, values=[0.0] * 7)

    def test_table_is_read_only(self):
        f = FunctionTable(n=1, values=[1.0, 2.0])
        with pytest.raises(ValueError):
            f.values[0] = 3.0

    def test_polynomial_merges_terms(self):
        p = PseudoBooleanPolynomial.from_terms(3, [([1, 0], 1.0), ([0, 1, 1], 2.0)])
        assert p.terms == (PolynomialTerm(indices=(0, 1), coeff=3.0),)
        assert p.degree == 2

    def test_polynomial_index_out_of_range(self):
        with pytest.raises(InvalidProblemError):
            PseudoBooleanPolynomial.from_terms(2, [([2], 1.0)])


class TestBounds:
    def test_zero_matrix_is_degenerate(self):
        assert qubo_bounds(QuboMatrix(n=2, matrix=np.zeros((2, 2)))).degenerate

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_qubo_bounds_enclose_table(self, rng, n):
        q = _random_qubo(rng, n)
        bounds = qubo_bounds(q)
        table = qubo_table(q)
        assert bounds.q_minus <= table.values.min() + 1e-12
        assert table.values.max() <= bounds.q_plus + 1e-12

    def test_poly_bounds(self):
        p = PseudoBooleanPolynomial.from_terms(
            5,
            [([], 1.0), ([0, 1, 2], 2.0), ([1, 3], -3.0), ([0], 1.0), ([2, 3, 4], -4.0)],
        )
        lower, upper = poly_bounds(p)
        assert (lower, upper) == (-6.0, 4.0)
        f_min, f_max = table_bounds(poly_table(p))
        assert lower <= f_min and f_max <= upper


class TestSpectrum:
    def test_small_coefficients_dropped(self):
        spectrum = FourierSpectrum.from_mapping(2, {0: 1.0, 1: 1e-16, 3: 0.0})
        assert spectrum.coeffs == {0: 1.0}

    def test_mask_out_of_range(self):
        with pytest.raises(ValueError):
            FourierSpectrum(n=2, coeffs={4: 1.0})

    def test_affine_moves_only_constant(self):
        spectrum = FourierSpectrum(n=2, coeffs={0: 1.0, 3: 2.0})
        shifted = spectrum.affine(-0.5, 4.0)
        assert shifted.coeffs == {0: 3.5, 3: -1.0}

    def test_negated(self):
        spectrum = FourierSpectrum(n=2, coeffs={1: 1.5})
        assert spectrum.negated().coeffs == {1: -1.5}

    def test_entries_sorted(self):
        spectrum = FourierSpectrum(n=3, coeffs={5: 1.0, 1: 2.0})
        assert [subset.mask for subset, _ in spectrum.entries()] == [1, 5]
