# -*- coding: utf-8 -*-
from typing import Callable, Iterator, Optional, Tuple
import itertools
import logging

from . import arithmetic
from . import congruence
from . import utils
from .congruence import (CongruenceValidationError, LinearCongruence,
                         Solution, SolutionBasis, UnsolvableCongruenceError)

logger = logging.getLogger(__name__)

CANDIDATE_ORDERS = ["forward", "reversed"]


class BasisConstructionError(RuntimeError):
    pass


def expand(x0: Solution, c: LinearCongruence,
           limit: Optional[int] = None) -> Iterator[Solution]:
    """
    Solutions x_i = x0_i + (m/gcd(a_i, m))*t_i, 0 <= t_i < gcd(a_i, m).

    Parameters
    ----------
    x0 : Solution
        Seed solution of c.
    c : LinearCongruence
        Normalized congruence.
    limit : Optional[int], optional
        Stop after this many solutions. The default is None.

    Raises
    ------
    CongruenceValidationError
        If x0 is not a solution of c. Raised on call, before streaming.

    Returns
    -------
    Iterator[Solution]
        prod(gcd(a_i, m)) pairwise distinct solutions, parameters in
        lexicographic order; the first one is x0 itself.

    """
    if not c.is_satisfied_by(x0.residues):
        raise CongruenceValidationError(
            "Seed %s is not a solution of %s" % (x0.residues, c))
    seed = congruence.make_solution(x0.residues, c)
    strides = congruence.module_generators(c).strides
    bounds = congruence.parameter_bounds(c)
    return utils.capped(_expansion_stream(seed, strides, bounds, c.modulus), limit)


def _expansion_stream(seed, strides, bounds, m):
    for params in utils.lex_product(bounds):
        yield Solution(tuple((x + g*t) % m
                             for x, g, t in zip(seed.residues, strides, params)))


def enumerate_raw(c: LinearCongruence, limit: Optional[int] = None) -> Iterator[Solution]:
    """
    Every distinct solution once, solving for the last unknown.

    The prefix (x_1..x_{n-1}) runs lexicographically over [0, m)^(n-1);
    for each prefix the matching x_n values come in ascending order.
    """
    _require_solvable(c)
    return utils.capped(_raw_stream(c, descending=False), limit)


def enumerate_raw_reversed(c: LinearCongruence,
                           limit: Optional[int] = None) -> Iterator[Solution]:
    """Exact reverse of `enumerate_raw`, produced lazily."""
    _require_solvable(c)
    return utils.capped(_raw_stream(c, descending=True), limit)


def _raw_stream(c, descending):
    m = c.modulus
    last = c.coeffs[-1]
    for prefix in utils.lex_product([m]*(c.arity - 1), descending):
        partial = sum(a*x for a, x in zip(c.coeffs, prefix))
        unary = arithmetic.solve_unary(last, (c.rhs - partial) % m, m)
        if unary is None:
            continue
        tails = range(unary.x0, unary.x0 + unary.step*unary.count, unary.step)
        if descending:
            tails = reversed(tails)
        for xn in tails:
            yield Solution(prefix + (xn,))


def get_candidate_order(name: str) -> Callable[[LinearCongruence], Iterator[Solution]]:
    """
    Parameters
    ----------
    name : str
        One of CANDIDATE_ORDERS.

    Raises
    ------
    ValueError
        If the name does not correspond to a candidate stream.

    Returns
    -------
    Callable
        Candidate stream function.

    """
    if name == "forward":
        return enumerate_raw
    elif name == "reversed":
        return enumerate_raw_reversed
    else:
        raise ValueError("Candidate order not available: %r" % name)


def iter_basis(c: LinearCongruence, order: str = "forward",
               limit: Optional[int] = None) -> Iterator[Solution]:
    """
    Greedy basis, one element at a time: keep each candidate independent
    of all kept ones.

    Dependence is an equivalence relation, so each kept candidate is the
    first-seen representative of its coset of A and the expansions of the
    kept solutions partition the solution set. Work done is proportional
    to the candidates consumed, so a limit bounds it.

    Parameters
    ----------
    c : LinearCongruence
        Normalized congruence.
    order : str, optional
        Candidate stream, see CANDIDATE_ORDERS. The default is "forward".
    limit : Optional[int], optional
        Stop after this many basis elements. The default is None.

    Raises
    ------
    ValueError
        On an unknown order, raised on call.
    UnsolvableCongruenceError
        If c has no solutions, raised on call.
    BasisConstructionError
        If the candidates run out before S representatives are found.

    Returns
    -------
    Iterator[Solution]
        The S basis elements in candidate order.

    """
    candidates = get_candidate_order(order)
    _require_solvable(c)
    summary = congruence.summarize(c)
    mod_a = congruence.module_generators(c)
    return utils.capped(_greedy_stream(candidates(c), mod_a, summary.s, c), limit)


def _greedy_stream(candidates, mod_a, s, c):
    seen = set()
    for candidate in candidates:
        key = mod_a.coset_key(candidate)
        if key in seen:
            continue
        seen.add(key)
        yield candidate
        if len(seen) == s:
            return
    raise BasisConstructionError(
        "Found %d independent solutions, expected %d for %s" % (len(seen), s, c))


def build_basis(c: LinearCongruence, order: str = "forward") -> Optional[SolutionBasis]:
    """
    Every element of `iter_basis`, collected.

    Returns
    -------
    Optional[SolutionBasis]
        None when c is unsolvable.

    """
    get_candidate_order(order)
    if not congruence.summarize(c).solvable:
        return None
    kept = tuple(iter_basis(c, order))
    logger.info("basis of size %d for %s (%s order)", len(kept), c, order)
    return SolutionBasis(kept, congruence.parameter_bounds(c),
                         congruence.module_generators(c).strides)


def enumerate_all(basis: SolutionBasis, c: LinearCongruence,
                  limit: Optional[int] = None) -> Iterator[Solution]:
    """Expansions of the basis elements, one after the other."""
    streams = (expand(x, c) for x in basis.basis)
    return utils.capped(itertools.chain.from_iterable(streams), limit)


def enumerate_solutions(c: LinearCongruence, order: str = "forward",
                        limit: Optional[int] = None) -> Iterator[Solution]:
    """
    Same stream as `enumerate_all(build_basis(c, order), c)`, but each basis
    element is found only when its expansion is reached.

    Raises UnsolvableCongruenceError on call if c has no solutions.
    """
    streams = (expand(x, c) for x in iter_basis(c, order))
    return utils.capped(itertools.chain.from_iterable(streams), limit)


def locate(y: Solution, basis: SolutionBasis,
           c: LinearCongruence) -> Tuple[int, Tuple[int, ...]]:
    """
    Index j of the basis element generating y and the parameters t.

    Raises
    ------
    CongruenceValidationError
        If y is not a solution of c.
    """
    if not c.is_satisfied_by(y.residues):
        raise CongruenceValidationError("%s is not a solution of %s" % (y.residues, c))
    y = congruence.make_solution(y.residues, c)
    for j, x in enumerate(basis.basis):
        params = congruence.expansion_parameters(x, y, c)
        if params is not None:
            return j, params
    raise BasisConstructionError("Basis does not cover %s" % (y.residues,))


def _require_solvable(c):
    if not congruence.summarize(c).solvable:
        raise UnsolvableCongruenceError("%s has no solutions" % (c,))
