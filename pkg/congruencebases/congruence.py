# -*- coding: utf-8 -*-
from typing import NamedTuple, Optional, Sequence, Tuple
import logging
import math

from . import arithmetic

logger = logging.getLogger(__name__)


class CongruenceValidationError(ValueError):
    pass


class UnsolvableCongruenceError(CongruenceValidationError):
    pass


class LinearCongruence(NamedTuple):
    """
    Normalized congruence a_1*x_1 + ... + a_n*x_n = b (mod m).

    Coefficients and right-hand side are kept in [0, m), modulus >= 1.
    Build instances with `normalize`.
    """
    coeffs: Tuple[int, ...]
    rhs: int
    modulus: int

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    @property
    def is_homogeneous(self) -> bool:
        return self.rhs == 0

    def evaluate(self, residues: Sequence[int]) -> int:
        """Left-hand side reduced mod m."""
        return sum(a*x for a, x in zip(self.coeffs, residues)) % self.modulus

    def is_satisfied_by(self, residues: Sequence[int]) -> bool:
        if len(residues) != self.arity:
            return False
        return self.evaluate(residues) == self.rhs


class Solution(NamedTuple):
    residues: Tuple[int, ...]

    @property
    def arity(self) -> int:
        return len(self.residues)


class LatticeModule(NamedTuple):
    """
    Integer module A spanned by the axis vectors with entries
    g_i = m/gcd(a_i, m). Only the strides g_i are stored.
    """
    strides: Tuple[int, ...]
    modulus: int

    @property
    def rank(self) -> int:
        return len(self.strides)

    def contains(self, vector: Sequence[int]) -> bool:
        if len(vector) != self.rank:
            raise CongruenceValidationError(
                "Vector of length %d does not match module of rank %d"
                % (len(vector), self.rank))
        return all(v % g == 0 for v, g in zip(vector, self.strides))

    def coset_key(self, solution: Solution) -> Tuple[int, ...]:
        """Residues mod the strides; equal keys <=> dependent solutions."""
        return tuple(x % g for x, g in zip(solution.residues, self.strides))


class SolutionBasis(NamedTuple):
    basis: Tuple[Solution, ...]
    param_bounds: Tuple[int, ...]
    strides: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.basis)


class SolveSummary(NamedTuple):
    d: int
    solvable: bool
    p1: int
    p2: int
    s: int


def normalize(raw_coeffs: Sequence[int], raw_b: int, raw_m: int) -> LinearCongruence:
    """
    Parameters
    ----------
    raw_coeffs : Sequence[int]
        Coefficients a_1..a_n, any sign.
    raw_b : int
        Right-hand side, any sign.
    raw_m : int
        Nonzero modulus, any sign.

    Raises
    ------
    CongruenceValidationError
        If raw_m is zero or there are no coefficients.

    Returns
    -------
    LinearCongruence
        Same solution set, modulus |raw_m|, everything reduced into [0, m).

    """
    if raw_m == 0:
        raise CongruenceValidationError("Modulus must be nonzero")
    if len(raw_coeffs) == 0:
        raise CongruenceValidationError("Congruence needs at least one coefficient")
    m = abs(raw_m)
    return LinearCongruence(tuple(a % m for a in raw_coeffs), raw_b % m, m)


def summarize(c: LinearCongruence) -> SolveSummary:
    """Counts of the solving method; computed without enumerating anything."""
    m = c.modulus
    d = arithmetic.multi_gcd_bezout(list(c.coeffs) + [m]).g
    p1 = d*m**(c.arity - 1)
    p2 = math.prod(arithmetic.gcd(a, m) for a in c.coeffs)
    s = arithmetic.base_size_quotient(c.coeffs, m)
    summary = SolveSummary(d, c.rhs % d == 0, p1, p2, s)
    logger.debug("summary of %s: %s", c, summary)
    return summary


def module_generators(c: LinearCongruence) -> LatticeModule:
    m = c.modulus
    return LatticeModule(tuple(m // arithmetic.gcd(a, m) for a in c.coeffs), m)


def parameter_bounds(c: LinearCongruence) -> Tuple[int, ...]:
    """Ranges d_i = gcd(a_i, m) of the expansion parameters."""
    return tuple(arithmetic.gcd(a, c.modulus) for a in c.coeffs)


def make_solution(residues: Sequence[int], c: LinearCongruence) -> Solution:
    """Reduce a residue vector to least nonnegative representatives."""
    if len(residues) != c.arity:
        raise CongruenceValidationError(
            "Expected %d residues, got %d" % (c.arity, len(residues)))
    return Solution(tuple(int(x) % c.modulus for x in residues))


def are_dependent(x: Solution, y: Solution, mod_a: LatticeModule) -> bool:
    """
    Whether x - y lies in the module A.

    Parameters
    ----------
    x : Solution
        First solution.
    y : Solution
        Second solution.
    mod_a : LatticeModule
        Module generated by the congruence.

    Raises
    ------
    CongruenceValidationError
        If the arities of x, y and mod_a disagree.

    Returns
    -------
    bool
        True when x - y is in A (dependent), False when independent.

    """
    if x.arity != y.arity:
        raise CongruenceValidationError(
            "Solutions have different arities (%d and %d)" % (x.arity, y.arity))
    difference = [xi - yi for xi, yi in zip(x.residues, y.residues)]
    return mod_a.contains(difference)


def expansion_parameters(x: Solution, y: Solution,
                         c: LinearCongruence) -> Optional[Tuple[int, ...]]:
    """
    Parameters t with y_i = x_i + g_i*t_i (mod m), 0 <= t_i < d_i.

    Returns None when x and y are independent, that is when y cannot be
    reached from x by expansion.
    """
    mod_a = module_generators(c)
    if not are_dependent(x, y, mod_a):
        return None
    m = c.modulus
    return tuple(((yi - xi) % m) // g
                 for xi, yi, g in zip(x.residues, y.residues, mod_a.strides))


def find_particular(c: LinearCongruence) -> Optional[Solution]:
    """
    One solution of c, or None when c is unsolvable.

    With g0 = sum(u_i*a_i) from the Bezout certificate of the coefficients,
    any y with g0*y = b (mod m) gives the solution x_i = u_i*y.
    """
    if not summarize(c).solvable:
        return None
    certificate = arithmetic.multi_gcd_bezout(c.coeffs)
    unary = arithmetic.solve_unary(certificate.g, c.rhs, c.modulus)
    if unary is None:
        # gcd(g0, m) = d divides b whenever c is solvable
        raise RuntimeError("No unary solution for solvable congruence %s" % (c,))
    y = unary.x0
    return Solution(tuple((u*y) % c.modulus for u in certificate.coefficients))
