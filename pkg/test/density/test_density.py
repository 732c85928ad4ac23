"""
Tests for density/density.py
"""

from fractions import Fraction

import pytest

from ExpSumLab.density.density import (
    density,
    density_report,
    digit_bijection_holds,
    digit_sets,
    digit_sets_from_solutions,
    subset_density_bound_holds,
    minimal_support,
    qualifying_subsets,
    solutions_meet_weight_bound,
    solutions_with_support,
)
from ExpSumLab.density.exponent_set import INFINITY, ExponentSet
from ExpSumLab.density.solutions import density_bruteforce
from ExpSumLab.utils.errors import InfiniteDensityError

CASES = [
    ([3], 2, Fraction(1, 2)),
    ([1], 2, Fraction(1)),
    ([1], 3, Fraction(1)),
    ([2], 3, Fraction(1, 2)),
    ([(1, 1)], 2, Fraction(1)),
    ([(1, 0), (0, 1)], 2, Fraction(2)),
]

@pytest.mark.parametrize("vectors, p, expected", CASES)
def test_density_values(vectors, p, expected):
    """Known densities of monomials and of x + y."""
    assert density(ExponentSet.from_vectors(vectors), p) == expected

@pytest.mark.parametrize("vectors, p", [(v, p) for v, p, _ in CASES] + [([5, 3], 2), ([4, 1], 3)])
def test_density_matches_enumeration(vectors, p):
    """The cycle mean agrees with brute force once R covers the minimal support."""
    D = ExponentSet.from_vectors(vectors)
    R = len(minimal_support(D, p)) + 2
    assert density(D, p) == density_bruteforce(D, p, R)

def test_infinite_density():
    """Hyperplane-contained sets have infinite density and no support."""
    flat = ExponentSet.from_vectors([(2, 0)])
    assert density(flat, 3) is INFINITY
    with pytest.raises(InfiniteDensityError):
        minimal_support(flat, 3)
    assert qualifying_subsets(flat, 3) == []

def test_minimal_support_and_digit_sets():
    """x^3 over F_2: support {1, 2}, V(1, 2) = {0}, V(2, 1) = {1}."""
    D = ExponentSet.from_vectors([3])
    assert minimal_support(D, 2) == ((1,), (2,))
    sets = digit_sets(D, 2)
    assert sets[((1,), (2,))].vectors == ((0,),) and sets[((1,), (2,))].weight == 0
    assert sets[((2,), (1,))].vectors == ((1,),) and sets[((2,), (1,))].weight == 1

def test_digit_sets_from_solutions_agree():
    """Digit sets read off minimal irreducible solutions match the graph."""
    D = ExponentSet.from_vectors([3])
    assert digit_sets_from_solutions(D, 2, 4) == digit_sets(D, 2)

def test_digit_bijection():
    """Minimal solutions with support phi match products of digit sets."""
    D = ExponentSet.from_vectors([3])
    phi = ((1,), (2,))
    assert len(solutions_with_support(D, 2, phi)) == 1
    assert digit_bijection_holds(D, 2, phi)

def test_qualifying_subsets():
    """x + y: both coordinates and the full set qualify; xy: only the full set."""
    assert qualifying_subsets(ExponentSet.from_vectors([(1, 0), (0, 1)]), 2) == [(0,), (1,), (0, 1)]
    assert qualifying_subsets(ExponentSet.from_vectors([(1, 1)]), 2) == [(0, 1)]

@pytest.mark.parametrize("vectors, p", [([(1, 0), (0, 1)], 2), ([(1, 1)], 3), ([(2, 1), (1, 2)], 2)])
def test_subset_density_bound(vectors, p):
    """delta(D) <= delta(D_I) + n - #I."""
    assert subset_density_bound_holds(ExponentSet.from_vectors(vectors), p)

def test_weight_bound():
    """No solution has density below delta."""
    D = ExponentSet.from_vectors([5, 3])
    assert all(solutions_meet_weight_bound(D, 2, r) for r in range(1, 5))

def test_density_report():
    """The report carries everything the density command prints."""
    report = density_report(ExponentSet.from_vectors([3]), 2)
    payload = report.to_dict()
    assert payload["density"] == "1/2"
    assert payload["support"] == [[1], [2]]
    assert payload["support_size"] == 2
    assert payload["digit_sets"][0] == {"from": [1], "to": [2], "vectors": [[0]], "weight": 0}
    flat = density_report(ExponentSet.from_vectors([(1, 0)]), 2)
    assert flat.density is INFINITY and flat.support == ()
