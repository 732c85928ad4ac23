"""
Tests for density/solutions.py
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ExpSumLab.density.exponent_set import INFINITY, ExponentSet
from ExpSumLab.density.solutions import (
    Solution,
    density_bruteforce,
    digits,
    enumerate_solutions,
    glue,
    minimal_irreducible_solutions,
    minimal_solutions,
    p_weight,
    reduce_mod,
    s_min,
    shift_value,
    solution_from_digits,
)
from ExpSumLab.utils.errors import BudgetError, NoSolutionError

@pytest.fixture
def cube():
    """D = {3} over F_2 (the polynomial x^3)."""
    return ExponentSet.from_vectors([3])

def test_digit_helpers():
    """Digits are least significant first; weights add them."""
    assert digits(6, 2, 4) == (0, 1, 1, 0)
    assert p_weight(26, 3) == 6
    assert shift_value(1, 2, 3) == 2
    assert shift_value(7, 2, 3) == 7
    assert shift_value(4, 2, 3) == 1

def test_reduce_mod():
    """Representatives in [1, p^r - 1], zero fixed."""
    assert reduce_mod(0, 2, 3) == 0
    assert reduce_mod(7, 2, 3) == 7
    assert reduce_mod(14, 2, 3) == 7
    assert reduce_mod(8, 2, 3) == 1
    with pytest.raises(ValueError):
        reduce_mod(-1, 2, 3)

@given(u=st.integers(min_value=0, max_value=10**6), p=st.sampled_from([2, 3, 5]), r=st.integers(1, 4))
def test_reduce_mod_never_increases_weight(u, p, r):
    """s_p(u) >= s_p(reduce_mod(u))."""
    assert p_weight(u, p) >= p_weight(reduce_mod(u, p, r), p)

def test_solution_validation(cube):
    """Non-solutions and out-of-range values are rejected."""
    Solution(cube, 2, 2, (1,))
    with pytest.raises(ValueError):
        Solution(cube, 2, 2, (0,))
    with pytest.raises(ValueError):
        Solution(cube, 2, 3, (1,))
    with pytest.raises(ValueError):
        Solution(cube, 2, 2, (4,))

def test_enumerate_solutions(cube):
    """E_{3,2}(2) = {1, 2, 3}."""
    values = [U.values for U in enumerate_solutions(cube, 2, 2)]
    assert values == [(1,), (2,), (3,)]

def test_minimal_solutions_and_support(cube):
    """u = 1 and u = 2 have weight 1 and support (1, 2) up to rotation."""
    solutions = minimal_solutions(cube, 2, 2)
    assert [U.values for U in solutions] == [(1,), (2,)]
    first, second = solutions
    assert first.density == Fraction(1, 2)
    assert first.shift() == second
    assert first.support == ((1,), (2,))
    assert second.support == ((2,), (1,))
    assert first.is_irreducible()
    assert len(minimal_irreducible_solutions(cube, 2, 2)) == 2

def test_glue(cube):
    """Gluing two minimal solutions gives a minimal solution of the summed length."""
    U = Solution(cube, 2, 2, (1,))
    glued = glue(U, U)
    assert glued.r == 4 and glued.values == (5,)
    assert glued.density == Fraction(1, 2)
    assert not glued.is_irreducible()
    with pytest.raises(ValueError):
        glue(U, U.shift())

def test_solution_from_digits(cube):
    """Digit vectors per position rebuild the values."""
    U = solution_from_digits(cube, 2, [(1,), (0,)])
    assert U.values == (1,)
    assert U.digit_vector(0) == (1,)
    assert U.digit_vector(1) == (0,)

@settings(max_examples=20, deadline=None)
@given(
    vectors=st.sampled_from([[3], [1], [5, 3], [(1, 1)], [(1, 0), (0, 1)], [(2, 1), (1, 2)]]),
    p=st.sampled_from([2, 3]),
    r=st.integers(min_value=1, max_value=3),
)
def test_s_min_methods_agree(vectors, p, r):
    """Scanning E_{D,p}(r) and walking the support graph give the same minimum."""
    D = ExponentSet.from_vectors(vectors)
    assert s_min(D, p, r, method="enumerate") == s_min(D, p, r, method="graph")

def test_s_min_errors(cube):
    """Hyperplane sets have no solutions; large scans hit the budget."""
    flat = ExponentSet.from_vectors([(1, 0)])
    with pytest.raises(NoSolutionError):
        s_min(flat, 2, 2)
    with pytest.raises(BudgetError):
        enumerate_solutions(cube, 2, 12, budget=100)
    with pytest.raises(ValueError):
        s_min(cube, 2, 2, method="magic")

def test_density_bruteforce(cube):
    """min_r s(r)/(r(p-1)) reaches 1/2 for x^3 over F_2."""
    assert density_bruteforce(cube, 2, 1) == 1
    assert density_bruteforce(cube, 2, 4) == Fraction(1, 2)
    assert density_bruteforce(ExponentSet.from_vectors([(1, 0)]), 2, 3) is INFINITY
