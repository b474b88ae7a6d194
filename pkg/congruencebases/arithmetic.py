# -*- coding: utf-8 -*-
from typing import List, NamedTuple, Optional, Sequence, Tuple
import logging
import math

logger = logging.getLogger(__name__)


class InexactQuotientError(ArithmeticError):
    pass


class BezoutCertificate(NamedTuple):
    g: int
    coefficients: Tuple[int, ...]

    def check(self, values: Sequence[int]) -> bool:
        """Re-substitute the certificate: sum(u_i*a_i) == g."""
        return sum(u*a for u, a in zip(self.coefficients, values)) == self.g


class UnaryCongruenceSolution(NamedTuple):
    x0: int
    step: int
    count: int

    def residues(self) -> List[int]:
        return [self.x0 + self.step*k for k in range(self.count)]


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def extended_gcd(a: int, b: int) -> BezoutCertificate:
    """
    Extended Euclidean algorithm.

    Parameters
    ----------
    a : int
        First value.
    b : int
        Second value.

    Returns
    -------
    BezoutCertificate
        Certificate (g, (u, v)) with g = gcd(a, b) >= 0 and u*a + v*b = g.
        For a = b = 0 the coefficients are (0, 0).

    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient*r
        old_s, s = s, old_s - quotient*s
        old_t, t = t, old_t - quotient*t
    if old_r == 0:
        return BezoutCertificate(0, (0, 0))
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return BezoutCertificate(old_r, (old_s, old_t))


def multi_gcd_bezout(values: Sequence[int]) -> BezoutCertificate:
    """
    Gcd of several integers together with Bezout coefficients.

    The certificate is built by folding `extended_gcd` from left to right,
    so the same input always gives the same coefficients.

    Parameters
    ----------
    values : Sequence[int]
        Nonempty list of integers.

    Raises
    ------
    ValueError
        If values is empty.

    Returns
    -------
    BezoutCertificate
        Certificate with one coefficient per value.

    """
    if len(values) == 0:
        raise ValueError("multi_gcd_bezout needs at least one value")
    first = extended_gcd(values[0], 0)
    g = first.g
    coefficients = [first.coefficients[0]]
    for value in values[1:]:
        step = extended_gcd(g, value)
        p, q = step.coefficients
        coefficients = [c*p for c in coefficients] + [q]
        g = step.g
    return BezoutCertificate(g, tuple(coefficients))


def solve_unary(a: int, b: int, m: int) -> Optional[UnaryCongruenceSolution]:
    """
    Solve a*x = b (mod m) in one unknown.

    Parameters
    ----------
    a : int
        Coefficient.
    b : int
        Right-hand side.
    m : int
        Modulus, m >= 1.

    Returns
    -------
    Optional[UnaryCongruenceSolution]
        None when gcd(a, m) does not divide b. Otherwise the solution set
        {x0 + step*k : 0 <= k < count} with x0 the least nonnegative one.

    """
    if m < 1:
        raise ValueError("Modulus must be positive, got %d" % m)
    certificate = extended_gcd(a, m)
    g = certificate.g
    if b % g != 0:
        return None
    step = m // g
    u = certificate.coefficients[0]
    x0 = (u*(b // g)) % step
    return UnaryCongruenceSolution(x0, step, g)


def base_size_quotient(coeffs: Sequence[int], m: int) -> int:
    """
    Exact value of gcd(a_1, ..., a_n, m) * |m|^(n-1) / prod(gcd(a_i, m)).

    The division always leaves no remainder; a remainder means a bug and
    raises InexactQuotientError. Python integers keep every intermediate
    product exact.
    """
    if m == 0:
        raise ValueError("Modulus must be nonzero")
    if len(coeffs) == 0:
        raise ValueError("At least one coefficient is needed")
    d = multi_gcd_bezout(list(coeffs) + [m]).g
    numerator = d*abs(m)**(len(coeffs) - 1)
    denominator = math.prod(gcd(a, m) for a in coeffs)
    quotient, remainder = divmod(numerator, denominator)
    if remainder != 0:
        raise InexactQuotientError(
            "%d is not divisible by %d (coeffs=%s, m=%d)"
            % (numerator, denominator, list(coeffs), m))
    logger.debug("base size quotient %d/%d = %d", numerator, denominator, quotient)
    return quotient
