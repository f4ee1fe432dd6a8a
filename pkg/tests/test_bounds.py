"""Degree-bound formulas for the detected value sets."""

import pytest

from polarvalues.bounds import (
    SingularComponentData,
    bound_kinf,
    bound_nk,
    bound_superpolar,
)


class TestClosedForms:
    def test_nk_matches_geometric_sum(self):
        # ((d-1)^n - 1)/(d-2) telescopes the sum of (d-1)^k, k < n
        for d in range(3, 10):
            for n in range(2, 7):
                expected = sum((d - 1) ** k for k in range(n))
                assert bound_nk(d, n) == expected

    def test_quadratic_case(self):
        for n in range(2, 7):
            assert bound_nk(2, n) == n - 1

    def test_pinned_values(self):
        assert bound_superpolar(3, 3) == 8
        assert bound_nk(3, 2) == 3

    def test_superpolar_two_variables(self):
        assert bound_superpolar(3, 2) == 1
        assert bound_superpolar(5, 2) == 3

    def test_superpolar_general(self):
        assert bound_superpolar(4, 3) == 4**2 - 1
        assert bound_superpolar(3, 4) == 3**3 - 1

    def test_kinf_adds_component_count(self):
        base = bound_kinf(4, 3)
        sing = SingularComponentData(((2, 1),))
        assert bound_kinf(4, 3, sing) == base - 2 + 1


class TestSingularCorrections:
    def test_weighted_degree_sum(self):
        sing = SingularComponentData(((2, 1), (3, 2)))
        assert sing.count == 2
        assert sing.degree_sum == 5
        assert sing.weighted_degree_sum == 2 * 1 + 3 * 2
        assert bound_nk(3, 3) - sing.weighted_degree_sum == bound_nk(3, 3, sing)

    def test_empty_is_neutral(self):
        empty = SingularComponentData.empty()
        assert empty.count == 0
        assert bound_nk(5, 3, empty) == bound_nk(5, 3)


class TestValidation:
    def test_degree_floor(self):
        with pytest.raises(ValueError):
            bound_nk(1, 3)
        with pytest.raises(ValueError):
            bound_kinf(2, 3)
        with pytest.raises(ValueError):
            bound_superpolar(1, 2)

    def test_variable_floor(self):
        with pytest.raises(ValueError):
            bound_nk(3, 1)

    def test_bad_component_data(self):
        with pytest.raises(ValueError):
            SingularComponentData(((0, 1),))
        with pytest.raises(ValueError):
            SingularComponentData(((2, 0),))
