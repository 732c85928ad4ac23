"""
Dense polynomial arithmetic over the prime field F_p, on top of
`sympy.polys.galoistools`.

Polynomials are tuples of residues, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple. galoistools
stores coefficients highest degree first, so every call converts.
"""

from typing import List, Sequence, Tuple

from sympy import isprime, primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_div,
    gf_gcd,
    gf_irreducible_p,
    gf_mul,
    gf_pow_mod,
    gf_rem,
)

Poly = Tuple[int, ...]


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def prime_factors(n: int) -> List[int]:
    """
    Distinct prime factors of a positive integer, increasing.

    Parameters
    ----------
    n : int
        A positive integer.

    Returns
    -------
    List[int]
        The primes dividing `n`.
    """
    return [int(ell) for ell in primefactors(n)]


def poly_normalize(a: Sequence[int], p: int) -> Poly:
    """Reduce coefficients mod p and strip trailing zeros."""
    coeffs = [int(c) % p for c in a]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _to_gf(a: Sequence[int], p: int) -> list:
    return [ZZ(c) for c in reversed(poly_normalize(a, p))]


def _from_gf(f: Sequence, p: int) -> Poly:
    return poly_normalize([int(c) for c in reversed(f)], p)


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    return _from_gf(gf_mul(_to_gf(a, p), _to_gf(b, p), p, ZZ), p)


def poly_divmod(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly]:
    """
    Euclidean division over F_p.

    Parameters
    ----------
    a, b : Poly
        Dividend and non-zero divisor.
    p : int
        The characteristic.

    Returns
    -------
    Tuple[Poly, Poly]
        Quotient and remainder.
    """
    divisor = _to_gf(b, p)
    if not divisor:
        raise ZeroDivisionError("polynomial division by zero")
    quotient, remainder = gf_div(_to_gf(a, p), divisor, p, ZZ)
    return _from_gf(quotient, p), _from_gf(remainder, p)


def poly_mod(a: Poly, b: Poly, p: int) -> Poly:
    divisor = _to_gf(b, p)
    if not divisor:
        raise ZeroDivisionError("polynomial division by zero")
    return _from_gf(gf_rem(_to_gf(a, p), divisor, p, ZZ), p)


def poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    """Monic greatest common divisor."""
    return _from_gf(gf_gcd(_to_gf(a, p), _to_gf(b, p), p, ZZ), p)


def poly_powmod(a: Poly, exponent: int, modulus: Poly, p: int) -> Poly:
    return _from_gf(gf_pow_mod(_to_gf(a, p), exponent, _to_gf(modulus, p), p, ZZ), p)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """
    Irreducibility over F_p; constants are not irreducible.

    Parameters
    ----------
    modulus : Sequence[int]
        Coefficients, lowest degree first.
    p : int
        The characteristic.
    """
    f = _to_gf(modulus, p)
    if len(f) < 2:
        return False
    return bool(gf_irreducible_p(f, p, ZZ))


def least_irreducible(p: int, degree: int) -> Poly:
    """
    Lexicographically least monic irreducible polynomial of a degree.

    Candidates x^degree + sum_{i<degree} a_i x^i are scanned by increasing
    code sum_i a_i p^i, so the coefficient of x^{degree-1} is the most
    significant one.

    Parameters
    ----------
    p : int
        The characteristic.
    degree : int
        The degree, at least 1.

    Returns
    -------
    Poly
        The monic modulus, lowest degree first (length degree + 1).
    """
    for code in range(p**degree):
        coeffs = []
        value = code
        for _ in range(degree):
            value, digit = divmod(value, p)
            coeffs.append(digit)
        candidate = tuple(coeffs) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise ArithmeticError(f"no irreducible polynomial of degree {degree} over F_{p}")
