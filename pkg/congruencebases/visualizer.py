# -*- coding: utf-8 -*-
import matplotlib
matplotlib.use('Agg')

from matplotlib.figure import Figure
from matplotlib.backends.backend_agg import FigureCanvasAgg

from . import congruence
from . import system


COLORMAP = "tab20"


class SolutionPlot(object):
    def __init__(self, syst: system.CongruenceSystem, width=6, height=6, dpi=100):
        """
        Residue-grid picture of a two-unknown congruence.

        Parameters
        ----------
        syst : system.CongruenceSystem
            Congruence to draw. Must have exactly two unknowns.
        width : float, optional
            Figure width in inches. The default is 6.
        height : float, optional
            Figure height in inches. The default is 6.
        dpi : int, optional
            Resolution. The default is 100.
        """
        if syst.arity != 2:
            raise congruence.CongruenceValidationError(
                "Only congruences in two unknowns can be plotted, got %d" % syst.arity)
        self.system = syst
        self.figure = Figure(figsize=(width, height), dpi=dpi)
        self.canvas = FigureCanvasAgg(self.figure)
        self.axes = self.figure.add_subplot(111)
        self.reset_plot()

    def reset_plot(self):
        m = self.system.congruence.modulus
        xname, yname = self.system.variables
        self.axes.cla()
        self.axes.set_xlim(-0.5, m - 0.5)
        self.axes.set_ylim(-0.5, m - 0.5)
        self.axes.set_xlabel(xname)
        self.axes.set_ylabel(yname)
        self.axes.set_aspect('equal')

    def draw_grid(self):
        m = self.system.congruence.modulus
        xs = [x for x in range(m) for _ in range(m)]
        ys = [y for _ in range(m) for y in range(m)]
        self.axes.scatter(xs, ys, s=4, color='lightgray')

    def draw_cosets(self):
        """One colour per basis element; its expansion shares the colour."""
        cmap = matplotlib.colormaps[COLORMAP]
        for j, group in enumerate(self.system.coset_groups()):
            xs = [s.residues[0] for s in group]
            ys = [s.residues[1] for s in group]
            self.axes.scatter(xs, ys, s=30, color=cmap(j % cmap.N))

    def draw_basis(self):
        basis = self.system.basis()
        if basis is None:
            return
        xs = [s.residues[0] for s in basis.basis]
        ys = [s.residues[1] for s in basis.basis]
        self.axes.scatter(xs, ys, s=120, facecolors='none', edgecolors='black')

    def draw(self):
        self.reset_plot()
        self.draw_grid()
        self.draw_cosets()
        self.draw_basis()
        summary = self.system.summary()
        self.axes.set_title("P1 = %d, P2 = %d, S = %d" % (summary.p1, summary.p2, summary.s))
        return self.figure

    def save(self, path: str):
        self.draw()
        self.figure.savefig(path)
