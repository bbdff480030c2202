from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from surkit import algebras, weights


def su3_casimir_reference(l1, l2):
    # tabulated closed form: c2 = (2/3)(l1^2 + l2^2 + 3[l1 + l2] + l1 l2)
    l1, l2 = Fraction(l1), Fraction(l2)
    return Fraction(2, 3) * (l1**2 + l2**2 + 3 * (l1 + l2) + l1 * l2)


def su4_casimir_reference(l1, l2, l3):
    # tabulated: (1/4)(3 l1^2 + 2[2 l2 + l3 + 6] l1 + 4 l2^2 + 4 l2[l3 + 4] + 3 l3[l3 + 4])
    l1, l2, l3 = Fraction(l1), Fraction(l2), Fraction(l3)
    return Fraction(1, 4) * (
        3 * l1**2
        + 2 * (2 * l2 + l3 + 6) * l1
        + 4 * l2**2
        + 4 * l2 * (l3 + 4)
        + 3 * l3 * (l3 + 4)
    )


def su5_casimir_reference(l1, l2, l3, l4):
    # tabulated: (2/5)[2 l1^2 + 3 l2 l1 + 2 l3 l1 + l4 l1 + 10 l1 + 3 l2^2 + 3 l3^2
    #           + 2 l4^2 + 15 l2 + 4 l2 l3 + 15 l3 + 2 l2 l4 + 3 l3 l4 + 10 l4]
    l1, l2, l3, l4 = (Fraction(x) for x in (l1, l2, l3, l4))
    return Fraction(2, 5) * (
        2 * l1**2
        + 3 * l2 * l1
        + 2 * l3 * l1
        + l4 * l1
        + 10 * l1
        + 3 * l2**2
        + 3 * l3**2
        + 2 * l4**2
        + 15 * l2
        + 4 * l2 * l3
        + 15 * l3
        + 2 * l2 * l4
        + 3 * l3 * l4
        + 10 * l4
    )


class TestMetric:
    def test_su3_instance(self):
        g = weights.metric(3)
        third = Fraction(1, 3)
        assert g.entries == ((2 * third, third), (third, 2 * third))

    def test_su2_instance(self):
        assert weights.metric(2).entries == ((Fraction(1, 2),),)

    def test_su5_row_sums(self):
        g = weights.metric(5)
        sums = tuple(sum(row) for row in g.entries)
        assert sums == (2, 3, 3, 2)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_symmetric_positive_definite(self, n):
        g = weights.metric(n)
        arr = np.array(g.entries, dtype=float)
        np.testing.assert_array_equal(arr, arr.T)
        np.linalg.cholesky(arr)  # raises if not positive definite

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            weights.metric(1)


class TestInner:
    def test_su3_fundamental_norm(self):
        g = weights.metric(3)
        assert weights.inner((1, 0), (1, 0), g) == Fraction(2, 3)

    def test_su3_adjoint_norm(self):
        g = weights.metric(3)
        assert weights.inner((1, 1), (1, 1), g) == 2

    def test_symmetry_random_labels(self, rng):
        g = weights.metric(4)
        for _ in range(25):
            mu = tuple(int(x) for x in rng.integers(0, 7, size=3))
            tau = tuple(int(x) for x in rng.integers(0, 7, size=3))
            assert weights.inner(mu, tau, g) == weights.inner(tau, mu, g)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            weights.inner((1,), (1, 0), weights.metric(3))


class TestWeylRoot:
    @pytest.mark.parametrize("n,expected", [(2, (1,)), (3, (1, 1)), (5, (1, 1, 1, 1))])
    def test_all_ones(self, n, expected):
        assert weights.weyl_root(n) == expected


class TestSurBound:
    def test_su3_closed_form(self):
        for l1, l2 in product(range(7), repeat=2):
            assert weights.sur_bound(3, (l1, l2)) == 2 * (l1 + l2)

    def test_su4_closed_form(self):
        for lam in product(range(7), repeat=3):
            l1, l2, l3 = lam
            assert weights.sur_bound(4, lam) == 3 * l1 + 4 * l2 + 3 * l3

    def test_su5_closed_form(self):
        for lam in product(range(7), repeat=4):
            l1, l2, l3, l4 = lam
            assert weights.sur_bound(5, lam) == 4 * l1 + 6 * l2 + 6 * l3 + 4 * l4

    def test_scalar_irrep_bound_zero(self):
        assert weights.sur_bound(3, (0, 0)) == 0

    def test_su2_doubled_convention(self):
        for two_j in range(17):
            assert weights.sur_bound(2, (two_j,)) == two_j

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_conjugate_irreps_share_bound(self, n, rng):
        for _ in range(30):
            lam = tuple(int(x) for x in rng.integers(0, 7, size=n - 1))
            assert weights.sur_bound(n, lam) == weights.sur_bound(n, lam[::-1])

    def test_rejects_negative_labels(self):
        with pytest.raises(ValueError, match="non-negative"):
            weights.sur_bound(3, (1, -1))


class TestCasimirEigenvalue:
    def test_su3_fundamental(self):
        assert weights.casimir_eigenvalue(3, (1, 0)) == Fraction(8, 3)

    def test_tabulated_polynomials(self):
        for lam in product(range(7), repeat=2):
            assert weights.casimir_eigenvalue(3, lam) == su3_casimir_reference(*lam)
        for lam in product(range(7), repeat=3):
            assert weights.casimir_eigenvalue(4, lam) == su4_casimir_reference(*lam)
        for lam in product(range(7), repeat=4):
            assert weights.casimir_eigenvalue(5, lam) == su5_casimir_reference(*lam)

    def test_su4_su5_fundamentals(self):
        assert weights.casimir_eigenvalue(4, (1, 0, 0)) == Fraction(15, 4)
        assert weights.casimir_eigenvalue(5, (1, 0, 0, 0)) == Fraction(24, 5)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_fundamental_matches_trace_normalization(self, n):
        assert weights.casimir_eigenvalue(n, weights.fundamental(n)) == Fraction(n * n - 1, n)


class TestCasimirMatrix:
    def test_su3_fundamental_scalar(self):
        gs = algebras.build_gellmann(3)
        expected = Fraction(8, 3)
        np.testing.assert_allclose(
            weights.casimir_matrix(gs), float(expected) * np.eye(3), atol=1e-10
        )

    def test_su2_halved_convention(self):
        gs = algebras.build_su2(2)
        np.testing.assert_allclose(weights.casimir_matrix(gs), 2 * np.eye(3), atol=1e-12)

    def test_su11_scalar_away_from_cutoff(self):
        gs = algebras.build_su11(Fraction(1, 2), 60)
        c = weights.casimir_matrix(gs)
        np.testing.assert_allclose(c[:59, :59], -0.25 * np.eye(59), atol=1e-10)

    def test_wh_trivial(self):
        gs = algebras.build_wh(16)
        np.testing.assert_array_equal(weights.casimir_matrix(gs), np.eye(16))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_sun_factor_equals_eigenvalue(self, n):
        gs = algebras.build_gellmann(n)
        factor = float(weights.casimir_eigenvalue(n, weights.fundamental(n)))
        np.testing.assert_allclose(weights.casimir_matrix(gs), factor * np.eye(n), atol=1e-10)

    @pytest.mark.parametrize("two_j", range(0, 9))
    def test_su2_factor_is_halved_eigenvalue(self, two_j):
        # stored generators are doubled: the trace-2 eigenvalue 2j(j+1) is twice
        # the reported J-convention factor j(j+1)
        gs = algebras.build_su2(two_j)
        j = two_j / 2
        trace2 = weights.casimir_eigenvalue(2, (two_j,))
        assert trace2 == Fraction(2 * two_j * (two_j + 2), 4)
        np.testing.assert_allclose(
            weights.casimir_matrix(gs), float(trace2) / 2 * np.eye(two_j + 1), atol=1e-10
        )
        assert float(trace2) / 2 == pytest.approx(j * (j + 1))
