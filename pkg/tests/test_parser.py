# -*- coding: utf-8 -*-
import random

import pytest

from congruencebases import congruence
from congruencebases import parser
from congruencebases.parser import (CongruenceSyntaxError, DuplicateVariableError,
                                    MissingModulusError, ParsedCongruence,
                                    ZeroModulusError)


def test_parse_application(application_text, application):
    parsed = parser.parse(application_text)
    assert parsed == ParsedCongruence(("x", "y"), (2, -6), 2, 12)
    assert parsed.to_congruence() == application
    assert congruence.summarize(parsed.to_congruence()) == (2, True, 24, 12, 2)


def test_parse_implicit_coefficient():
    assert parser.parse("x = 0 (mod 5)") == ParsedCongruence(("x",), (1,), 0, 5)


@pytest.mark.parametrize("text, expected", [
    ("2*x - 6*y = 2 (mod 12)", ParsedCongruence(("x", "y"), (2, -6), 2, 12)),
    ("  -x+y   ≡ -3 ( mod -7 )", ParsedCongruence(("x", "y"), (-1, 1), -3, -7)),
    ("+3a_1 + 0 b = 4 (mod 9)", ParsedCongruence(("a_1", "b"), (3, 0), 4, 9)),
    ("y - 2x = 1 (mod 4)", ParsedCongruence(("y", "x"), (1, -2), 1, 4)),
    ("12x1 + 5x2 + x3 ≡ 0 (mod 30)", ParsedCongruence(("x1", "x2", "x3"), (12, 5, 1), 0, 30)),
])
def test_parse_variants(text, expected):
    assert parser.parse(text) == expected


def test_parse_rejects_duplicate_variable():
    with pytest.raises(DuplicateVariableError) as excinfo:
        parser.parse("3a + 3a = 1 (mod 7)")
    assert excinfo.value.column == 7


def test_parse_rejects_missing_modulus():
    with pytest.raises(MissingModulusError):
        parser.parse("2x + 3y = 1")


def test_parse_rejects_zero_modulus():
    with pytest.raises(ZeroModulusError):
        parser.parse("2x = 1 (mod 0)")


@pytest.mark.parametrize("text", [
    "", "2x + = 1 (mod 5)", "2x = (mod 5)", "2x = 1 (mod 5", "2*3x = 1 (mod 5)",
    "x = y (mod 5)", "x + 1 = 2 (mod 5)", "x = 1 (mod 5) x",
])
def test_parse_syntax_errors(text):
    with pytest.raises(CongruenceSyntaxError):
        parser.parse(text)


def test_syntax_error_reports_position():
    with pytest.raises(CongruenceSyntaxError) as excinfo:
        parser.parse("2x + = 1 (mod 5)")
    assert excinfo.value.line == 1
    assert excinfo.value.column == 6
    assert "^" in str(excinfo.value)


@pytest.mark.parametrize("text, line, column", [
    ("2x = 1 (mod 5", 1, 14),
    ("2x + 3y =", 1, 10),
    ("", 1, 1),
    ("2x = 1\n(mod", 2, 5),
])
def test_truncated_input_points_past_the_end(text, line, column):
    with pytest.raises(CongruenceSyntaxError) as excinfo:
        parser.parse(text)
    assert (excinfo.value.line, excinfo.value.column) == (line, column)
    assert "end of input" in excinfo.value.message


def test_format_examples():
    assert parser.format_congruence(ParsedCongruence(("x", "y"), (2, -6), 2, 12)) == \
        "2*x - 6*y ≡ 2 (mod 12)"
    assert parser.format_congruence(ParsedCongruence(("x",), (1,), 0, 5)) == "1*x ≡ 0 (mod 5)"
    assert parser.format_congruence(ParsedCongruence(("u", "v"), (-4, 0), -1, -3)) == \
        "-4*u + 0*v ≡ -1 (mod -3)"


def _random_parsed(rng):
    n = rng.randint(1, 5)
    names = rng.sample(["x", "y", "z", "t", "u", "v", "w", "x1", "x2", "alpha"], n)
    coeffs = tuple(rng.randint(-50, 50) for _ in range(n))
    modulus = rng.choice([m for m in range(-40, 41) if m != 0])
    return ParsedCongruence(tuple(names), coeffs, rng.randint(-50, 50), modulus)


def test_parse_inverts_format():
    rng = random.Random(2024)
    for _ in range(50):
        parsed = _random_parsed(rng)
        assert parser.parse(parser.format_congruence(parsed)) == parsed


def test_default_variables():
    assert parser.default_variables(3) == ("x1", "x2", "x3")
