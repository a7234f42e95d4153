"""Tests for coefficient series, split, and derivative."""

import numpy as np
import pytest

from bergdir import CoefficientSeries, DomainError, derivative, split


class TestCoefficientSeries:
    def test_evaluation(self):
        f = CoefficientSeries([1.0, 2.0, 3.0])
        assert f(0.5) == pytest.approx(1 + 2 * 0.5 + 3 * 0.25)

    def test_empty_is_zero(self):
        f = CoefficientSeries([])
        assert f(0.7 + 0.2j) == 0.0
        assert f.degree == -1

    def test_vectorized_evaluation(self):
        f = CoefficientSeries([0.0, 1.0])
        z = np.array([1.0, 2.0, 3.0])
        np.testing.assert_allclose(f(z), z)

    def test_degree_cap(self):
        with pytest.raises(DomainError):
            CoefficientSeries(np.zeros(600))


class TestSplit:
    def test_m_zero_head_empty(self):
        s = split(CoefficientSeries([1, 2, 3]), 0)
        assert s.head.coefficients.size == 0
        np.testing.assert_array_equal(s.tail.coefficients, [1, 2, 3])

    def test_interior_split(self):
        s = split(CoefficientSeries([1, 2, 3]), 2)
        np.testing.assert_array_equal(s.head.coefficients, [1, 2])
        np.testing.assert_array_equal(s.tail.coefficients, [0, 0, 3])

    def test_short_series(self):
        s = split(CoefficientSeries([5]), 3)
        np.testing.assert_array_equal(s.head.coefficients, [5])
        assert s.tail.coefficients.size == 0

    def test_reconstruction(self):
        rng = np.random.default_rng(0)
        a = rng.standard_normal(9) + 1j * rng.standard_normal(9)
        f = CoefficientSeries(a)
        for m in range(0, 12):
            s = split(f, m)
            head = np.zeros(9, complex)
            head[:s.head.coefficients.size] = s.head.coefficients
            tail = np.zeros(9, complex)
            tail[:s.tail.coefficients.size] = s.tail.coefficients
            np.testing.assert_allclose(head + tail, a)


class TestDerivative:
    def test_second_derivative_of_square(self):
        d = derivative(CoefficientSeries([0, 0, 1]), 2)
        np.testing.assert_allclose(d.coefficients, [2.0])

    def test_identity(self):
        d = derivative(CoefficientSeries([1, 1, 1]), 0)
        np.testing.assert_array_equal(d.coefficients, [1, 1, 1])

    def test_cube(self):
        d = derivative(CoefficientSeries([0, 0, 0, 1]), 2)
        np.testing.assert_allclose(d.coefficients, [0.0, 6.0])

    def test_order_exceeds_degree(self):
        d = derivative(CoefficientSeries([1, 2]), 5)
        assert d.coefficients.size == 0

    def test_iterated_equals_single(self):
        rng = np.random.default_rng(1)
        f = CoefficientSeries(rng.standard_normal(8))
        once = derivative(derivative(f, 1), 2)
        combined = derivative(f, 3)
        np.testing.assert_allclose(once.coefficients, combined.coefficients)
