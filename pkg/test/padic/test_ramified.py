"""
Tests for padic/ramified.py
"""

import pytest

from ExpSumLab.padic.ramified import (
    AtLeast,
    auto_precision,
    embed_cyc,
    make_ramified,
    valuation_meets,
    valuation_to_json,
    zeta_p,
)

@pytest.fixture
def ram3():
    """O_1[varpi] / 3^5 with varpi^2 = pi, e = 4."""
    return make_ramified(3, 1, 5, 2)

def test_uniformizer_relations(ram3):
    """varpi^e = -p and pi^(p-1) = -p."""
    assert ram3.e == 4
    assert ram3.uniformizer() ** 4 == -3
    assert ram3.pi() ** 2 == -3
    assert ram3.pi() == ram3.uniformizer() ** 2

def test_valuations(ram3):
    """v(varpi^k) = k below the resolution; zero gives a lower bound."""
    for k in range(ram3.resolution):
        assert ram3.uniformizer_power(k).valuation() == k
    zero = ram3.zero().valuation()
    assert isinstance(zero, AtLeast) and zero.bound == ram3.resolution

def test_valuation_helpers():
    """AtLeast compares by its bound and serialises as a string."""
    assert valuation_meets(AtLeast(8), 8)
    assert not valuation_meets(AtLeast(7), 8)
    assert valuation_meets(9, 8)
    assert valuation_to_json(AtLeast(8)) == ">=8"
    assert valuation_to_json(3) == 3

def test_auto_precision():
    """e*K exceeds the largest threshold by at least one step."""
    e, m, u, k_max = 4, 2, 3, 5
    K = auto_precision(e, m, u, k_max)
    assert e * K > m * u * k_max + e

@pytest.mark.parametrize("p, m, K, v", [(2, 1, 8, 1), (3, 1, 5, 1), (3, 2, 4, 2), (5, 1, 4, 1)])
def test_zeta_p(p, m, K, v):
    """zeta^p = 1, zeta = 1 + pi mod pi^2."""
    ram = make_ramified(p, m, K, v)
    zeta = zeta_p(ram)
    assert zeta**p == 1
    assert zeta != 1
    assert (zeta - 1 - ram.pi()).valuation() >= 2 * v

def test_zeta_2_is_minus_one():
    """For p = 2 the root of unity is -1."""
    ram = make_ramified(2, 1, 8, 1)
    assert zeta_p(ram) == -1

@pytest.mark.parametrize("p", [2, 3, 5])
def test_embed_cyc(p):
    """1 + zeta + ... + zeta^(p-1) = 0 and indices wrap mod p."""
    ram = make_ramified(p, 1, 4, 1)
    assert embed_cyc(ram, [1] * p).is_zero()
    assert embed_cyc(ram, [0] * p + [1]) == 1

def test_scalar_component_limit(ram3):
    """At most e varpi-components."""
    with pytest.raises(ValueError):
        ram3.scalar([1, 0, 0, 0, 1])

def test_unit_inverse_and_frobenius():
    """Units invert; Frobenius fixes varpi and acts on O_m."""
    ram = make_ramified(2, 2, 6, 3)
    a = ram.scalar([ram.base.element([1, 1]), 1])
    assert a * a.inverse() == 1
    assert ram.uniformizer().frobenius() == ram.uniformizer()
    assert a.frobenius(times=2) == a
