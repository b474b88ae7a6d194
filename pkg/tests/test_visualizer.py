# -*- coding: utf-8 -*-
import pytest

from congruencebases import CongruenceSystem
from congruencebases.congruence import CongruenceValidationError
from congruencebases.visualizer import SolutionPlot


def test_draw_application(application_text):
    plot = SolutionPlot(CongruenceSystem.from_expression(application_text))
    figure = plot.draw()
    axes = figure.axes[0]
    assert axes.get_title() == "P1 = 24, P2 = 12, S = 2"
    assert axes.get_xlabel() == "x" and axes.get_ylabel() == "y"
    # grid, one scatter per coset, basis markers
    assert len(axes.collections) == 4


def test_save(tmp_path, application_text):
    target = tmp_path / "cosets.png"
    SolutionPlot(CongruenceSystem.from_expression(application_text), dpi=50).save(str(target))
    assert target.stat().st_size > 0


def test_draw_unsolvable():
    plot = SolutionPlot(CongruenceSystem.from_expression("2x + 4y ≡ 1 (mod 6)"))
    axes = plot.draw().axes[0]
    assert len(axes.collections) == 1
    assert axes.get_title() == "P1 = 12, P2 = 4, S = 3"


def test_rejects_other_arities():
    with pytest.raises(CongruenceValidationError):
        SolutionPlot(CongruenceSystem.from_expression("x + y + z ≡ 0 (mod 3)"))
    with pytest.raises(CongruenceValidationError):
        SolutionPlot(CongruenceSystem.from_expression("x ≡ 0 (mod 3)"))
