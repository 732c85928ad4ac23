"""
Tests for density/exponent_set.py
"""

from fractions import Fraction

import pytest

from ExpSumLab.density.exponent_set import INFINITY, ExponentSet, Infinity
from ExpSumLab.utils.errors import UnsupportedInputError

def test_from_vectors_sorts_and_infers_dimension():
    """Integers are read as 1-vectors; vectors are sorted."""
    D = ExponentSet.from_vectors([5, 3])
    assert D.n == 1
    assert D.vectors == ((3,), (5,))
    assert str(D) == "{3, 5}"

def test_validation():
    """Zero exponents, duplicates and wrong dimensions are rejected."""
    with pytest.raises(UnsupportedInputError):
        ExponentSet.from_vectors([(0, 0), (1, 1)])
    with pytest.raises(ValueError):
        ExponentSet(n=1, vectors=((2,), (2,)))
    with pytest.raises(ValueError):
        ExponentSet(n=2, vectors=((1,),))

def test_hyperplane_and_column_sums():
    """{(1,0),(2,0)} lies in x_2 = 0; column sums bound the support graph."""
    D = ExponentSet.from_vectors([(1, 0), (2, 0)])
    assert D.is_hyperplane_contained()
    assert D.column_sums() == (3, 0)
    assert not ExponentSet.from_vectors([(1, 0), (0, 1)]).is_hyperplane_contained()

def test_restrict():
    """D_I keeps the vectors supported on I, projected."""
    D = ExponentSet.from_vectors([(1, 0, 0), (2, 1, 0), (0, 0, 3)])
    assert D.restrict([0]).vectors == ((1,),)
    assert D.restrict([1, 0]).vectors == ((1, 0), (2, 1))
    assert D.restrict([1]).is_empty()

def test_infinity_ordering():
    """INFINITY is a singleton above every rational and absorbs addition."""
    assert Infinity() is INFINITY
    assert INFINITY > Fraction(10**6)
    assert not INFINITY < 3
    assert INFINITY + 2 is INFINITY
    assert str(INFINITY) == "inf"
