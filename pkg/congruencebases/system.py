# -*- coding: utf-8 -*-
from typing import Iterator, List, Optional, Sequence, Tuple

from . import congruence
from . import oracle
from . import parser
from . import procedures
from . import utils
from .congruence import Solution


class CongruenceSystem(object):
    def __init__(self, coeffs: Sequence[int], rhs: int, modulus: int,
                 order: str = "forward",
                 variables: Optional[Sequence[str]] = None):
        """
        Parameters
        ----------
        coeffs : Sequence[int]
            Raw coefficients a_1..a_n.
        rhs : int
            Raw right-hand side b.
        modulus : int
            Raw nonzero modulus m.
        order : str, optional
            Candidate order for the basis search. The default is 'forward'.
        variables : Optional[Sequence[str]], optional
            Variable names. Defaults to x1..xn if None. The default is None.
        """
        self.congruence = congruence.normalize(coeffs, rhs, modulus)
        self.variables = tuple(variables) if variables is not None \
                         else parser.default_variables(self.congruence.arity)
        assert len(self.variables) == self.congruence.arity
        self.parsed = parser.ParsedCongruence(self.variables, tuple(coeffs), rhs, modulus)
        self.order = order
        procedures.get_candidate_order(order) #raises on unknown names
        self.module = congruence.module_generators(self.congruence)
        self._summary = None
        self._basis = None

    @classmethod
    def from_parsed(cls, parsed: parser.ParsedCongruence, order: str = "forward"):
        return cls(parsed.raw_coeffs, parsed.rhs, parsed.modulus, order,
                   parsed.variables)

    @classmethod
    def from_expression(cls, text: str, order: str = "forward"):
        return cls.from_parsed(parser.parse(text), order)

    def summary(self) -> congruence.SolveSummary:
        if self._summary is None:
            self._summary = congruence.summarize(self.congruence)
        return self._summary

    def basis(self) -> Optional[congruence.SolutionBasis]:
        """Basis of the congruence; None if it has no solutions."""
        if self._basis is None and self.solvable:
            self._basis = procedures.build_basis(self.congruence, self.order)
        return self._basis

    def basis_elements(self, limit: Optional[int] = None) -> Iterator[Solution]:
        """Basis elements as they are found; a limit bounds the search."""
        if self._basis is not None:
            return utils.capped(iter(self._basis.basis), limit)
        return procedures.iter_basis(self.congruence, self.order, limit)

    def solutions(self, limit: Optional[int] = None) -> Iterator[Solution]:
        """All solutions, basis element by basis element; nothing is built ahead."""
        if self._basis is not None:
            return procedures.enumerate_all(self._basis, self.congruence, limit)
        return procedures.enumerate_solutions(self.congruence, self.order, limit)

    def solution(self, residues: Sequence[int]) -> Solution:
        return congruence.make_solution(residues, self.congruence)

    def is_solution(self, residues: Sequence[int]) -> bool:
        return self.congruence.is_satisfied_by(residues)

    def check(self, x: Sequence[int], y: Sequence[int]) -> bool:
        """True when x and y are dependent."""
        return congruence.are_dependent(self.solution(x), self.solution(y), self.module)

    def parameters(self, x: Sequence[int], y: Sequence[int]) -> Optional[Tuple[int, ...]]:
        return congruence.expansion_parameters(self.solution(x), self.solution(y),
                                               self.congruence)

    def locate(self, y: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
        basis = self.basis()
        if basis is None:
            raise congruence.UnsolvableCongruenceError(
                "%s has no solutions" % (self.congruence,))
        return procedures.locate(self.solution(y), basis, self.congruence)

    def verify(self, cap: int = oracle.DEFAULT_CAP) -> oracle.OracleReport:
        return oracle.verify(self.congruence, cap)

    def coset_groups(self) -> List[List[Solution]]:
        """Solutions grouped by the basis element that generates them."""
        basis = self.basis()
        if basis is None:
            return []
        return [list(procedures.expand(x, self.congruence)) for x in basis.basis]

    def render(self) -> str:
        """Congruence as entered, in canonical syntax."""
        return parser.format_congruence(self.parsed)

    @property
    def solvable(self) -> bool:
        return self.summary().solvable

    @property
    def arity(self) -> int:
        return self.congruence.arity
