# -*- coding: utf-8 -*-
"""
Text syntax for linear congruences.

    congruence :: expr ("=" | "≡") integer ["(" "mod" integer ")"]
    expr       :: ["+" | "-"] term (("+" | "-") term)*
    term       :: [integer ["*"]] identifier
    integer    :: ["+" | "-"] digits

Whitespace is insignificant. Variables keep their first-appearance order.
"""
from typing import List, NamedTuple, Optional, Tuple
import logging

import lark
from lark import Lark, Transformer, v_args

from . import congruence

logger = logging.getLogger(__name__)

GRAMMAR = r"""
start: expr RELATION integer modulus?

expr: first_term signed_term*
first_term: SIGN? term
signed_term: SIGN term
term: INT "*"? NAME
    | NAME

integer: SIGN? INT
modulus: "(" "mod" integer ")"

SIGN: "+" | "-"
RELATION: "=" | "≡"

%import common.INT
%import common.CNAME -> NAME
%import common.WS
%ignore WS
"""


class CongruenceSyntaxError(ValueError):
    def __init__(self, message: str, text: str = "",
                 line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.text = text
        self.line = line
        self.column = column
        super().__init__(self.describe())

    def describe(self) -> str:
        if self.column is None or self.line is None or self.line < 1:
            return self.message
        lines = self.text.splitlines()
        source = lines[self.line - 1] if self.line <= len(lines) else ""
        return "%s at line %d, column %d\n    %s\n    %s^" % (
            self.message, self.line, self.column, source, " "*(self.column - 1))


class DuplicateVariableError(CongruenceSyntaxError):
    pass


class MissingModulusError(CongruenceSyntaxError):
    pass


class ZeroModulusError(CongruenceSyntaxError):
    pass


class ParsedCongruence(NamedTuple):
    variables: Tuple[str, ...]
    raw_coeffs: Tuple[int, ...]
    rhs: int
    modulus: int

    @property
    def arity(self) -> int:
        return len(self.variables)

    def to_congruence(self) -> congruence.LinearCongruence:
        return congruence.normalize(self.raw_coeffs, self.rhs, self.modulus)


@v_args(inline=True)
class _CongruenceBuilder(Transformer):
    def __init__(self, text):
        super().__init__()
        self.text = text

    def start(self, terms, relation, rhs, modulus=None):
        if modulus is None:
            raise MissingModulusError("Missing '(mod m)'", self.text,
                                      relation.line, relation.column)
        value, token = modulus
        if value == 0:
            raise ZeroModulusError("Modulus must be nonzero", self.text,
                                   token.line, token.column)
        variables: List[str] = []
        coeffs: List[int] = []
        for coeff, name in terms:
            if name in variables:
                raise DuplicateVariableError("Variable %r appears twice" % str(name),
                                             self.text, name.line, name.column)
            variables.append(str(name))
            coeffs.append(coeff)
        return ParsedCongruence(tuple(variables), tuple(coeffs), rhs[0], value)

    def expr(self, *terms):
        return list(terms)

    def first_term(self, *children):
        if len(children) == 2:
            sign, (coeff, name) = children
            return (-coeff if sign == "-" else coeff), name
        return children[0]

    def signed_term(self, sign, term):
        coeff, name = term
        return (-coeff if sign == "-" else coeff), name

    def term(self, *children):
        if len(children) == 2:
            return int(children[0]), children[1]
        return 1, children[0]

    def integer(self, *children):
        digits = children[-1]
        value = int(digits)
        if len(children) == 2 and children[0] == "-":
            value = -value
        return value, children[0]

    def modulus(self, integer):
        return integer


_PARSER = Lark(GRAMMAR, parser="lalr")


def parse(text: str) -> ParsedCongruence:
    """
    Parameters
    ----------
    text : str
        Congruence such as "2x - 6y ≡ 2 (mod 12)".

    Raises
    ------
    CongruenceSyntaxError
        On malformed input, with line and column of the offending token.
        DuplicateVariableError, MissingModulusError and ZeroModulusError
        are the specific cases.

    Returns
    -------
    ParsedCongruence
        Raw (non-normalized) coefficients, rhs and modulus.

    """
    try:
        tree = _PARSER.parse(text)
    except lark.exceptions.UnexpectedInput as e:
        token = getattr(e, "token", None)
        if isinstance(e, lark.exceptions.UnexpectedEOF) or \
                (token is not None and token.type == "$END"):
            # lalr places $END on the last token; point past the input instead
            lines = text.splitlines() or [""]
            raise CongruenceSyntaxError("Unexpected end of input", text,
                                        len(lines), len(lines[-1]) + 1) from e
        raise CongruenceSyntaxError("Unexpected input", text,
                                    e.line, e.column) from e
    try:
        parsed = _CongruenceBuilder(text).transform(tree)
    except lark.exceptions.VisitError as e:
        raise e.orig_exc from None
    logger.debug("parsed %r as %s", text, parsed)
    return parsed


def format_congruence(p: ParsedCongruence) -> str:
    """Canonical form "a1*v1 + a2*v2 ≡ b (mod m)"; `parse` inverts it."""
    pieces = []
    for i, (coeff, name) in enumerate(zip(p.raw_coeffs, p.variables)):
        if i == 0:
            pieces.append("%d*%s" % (coeff, name))
        elif coeff < 0:
            pieces.append("- %d*%s" % (-coeff, name))
        else:
            pieces.append("+ %d*%s" % (coeff, name))
    return "%s ≡ %d (mod %d)" % (" ".join(pieces), p.rhs, p.modulus)


def default_variables(n: int) -> Tuple[str, ...]:
    return tuple("x%d" % (i + 1) for i in range(n))
