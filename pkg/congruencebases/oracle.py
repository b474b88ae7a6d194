# -*- coding: utf-8 -*-
"""
Exhaustive ground truth for counts and solution sets.

The scan only shares the LinearCongruence type with the solvers it checks:
it evaluates every tuple of [0, m)^n with numpy and keeps the matches.
"""
from typing import FrozenSet, List, NamedTuple, Optional, Sequence
import logging

import numpy as np

from . import congruence
from . import procedures
from .congruence import LinearCongruence, Solution

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10**7
CHUNK_SIZE = 2**20
MAX_MODULUS = 2**31


class OracleSizeError(ValueError):
    pass


class OracleReport(NamedTuple):
    solution_count: int
    solutions: Optional[FrozenSet[Solution]]
    agrees_with_summary: bool
    agrees_with_basis: bool

    @property
    def agrees(self) -> bool:
        return self.agrees_with_summary and self.agrees_with_basis


def search_space_size(c: LinearCongruence) -> int:
    return c.modulus**c.arity


def brute_force(c: LinearCongruence, cap: int = DEFAULT_CAP) -> FrozenSet[Solution]:
    """
    All distinct solutions, by scanning [0, m)^n.

    Parameters
    ----------
    c : LinearCongruence
        Normalized congruence.
    cap : int, optional
        Largest m^n the scan accepts. The default is DEFAULT_CAP.

    Raises
    ------
    OracleSizeError
        If cap is not positive or m^n exceeds cap.

    Returns
    -------
    FrozenSet[Solution]
        The exact solution set.

    """
    if cap < 1:
        raise OracleSizeError("Oracle cap must be positive, got %d" % cap)
    total = search_space_size(c)
    if total > cap:
        raise OracleSizeError(
            "Search space m^n = %d exceeds the oracle cap %d" % (total, cap))
    m, n = c.modulus, c.arity
    if m > MAX_MODULUS:
        # a_i*x_i must fit in int64
        raise OracleSizeError("Modulus %d exceeds the oracle limit %d" % (m, MAX_MODULUS))
    coeffs = np.array(c.coeffs, dtype=np.int64)
    places = np.array([m**(n - 1 - i) for i in range(n)], dtype=np.int64)
    found = []
    for start in range(0, total, CHUNK_SIZE):
        index = np.arange(start, min(start + CHUNK_SIZE, total), dtype=np.int64)
        digits = (index[:, None] // places[None, :]) % m #(chunk, n)
        lhs = np.zeros(len(index), dtype=np.int64)
        for i in range(n):
            lhs = (lhs + coeffs[i]*digits[:, i]) % m
        found.append(digits[lhs == c.rhs])
    logger.debug("oracle scanned %d tuples in %d chunks", total, len(found))
    rows = np.concatenate(found, axis=0)
    return frozenset(Solution(tuple(int(x) for x in row)) for row in rows)


def verify(c: LinearCongruence, cap: int = DEFAULT_CAP) -> OracleReport:
    """Compare the scan with the counting formulas and with the basis expansion."""
    solutions = brute_force(c, cap)
    summary = congruence.summarize(c)
    expected = summary.p1 if summary.solvable else 0
    agrees_with_summary = len(solutions) == expected
    basis = procedures.build_basis(c)
    if basis is None:
        agrees_with_basis = len(solutions) == 0
    else:
        expanded = list(procedures.enumerate_all(basis, c))
        agrees_with_basis = (len(expanded) == len(set(expanded))
                             and set(expanded) == solutions)
    report = OracleReport(len(solutions), solutions,
                          agrees_with_summary, agrees_with_basis)
    if not report.agrees:
        logger.warning("oracle disagreement for %s: count=%d, p1=%d, basis agrees=%s",
                       c, len(solutions), summary.p1, agrees_with_basis)
    return report


def random_congruences(count: int, seed: int, max_arity: int = 3,
                       max_modulus: int = 20, coeff_bound: int = 20,
                       solvable_only: bool = False) -> List[LinearCongruence]:
    """
    Seeded random instances: n in [1, max_arity], m in [1, max_modulus],
    coefficients and right-hand side in [-coeff_bound, coeff_bound].
    """
    rng = np.random.default_rng(seed)
    instances = []
    while len(instances) < count:
        n = int(rng.integers(1, max_arity + 1))
        m = int(rng.integers(1, max_modulus + 1))
        coeffs = [int(a) for a in rng.integers(-coeff_bound, coeff_bound + 1, size=n)]
        b = int(rng.integers(-coeff_bound, coeff_bound + 1))
        c = congruence.normalize(coeffs, b, m)
        if solvable_only and not congruence.summarize(c).solvable:
            continue
        instances.append(c)
    return instances


def verify_batch(instances: Sequence[LinearCongruence],
                 cap: int = DEFAULT_CAP) -> List[OracleReport]:
    return [verify(c, cap) for c in instances]
