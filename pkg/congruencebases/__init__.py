# -*- coding: utf-8 -*-

from . import arithmetic
from . import congruence
from . import oracle
from . import parser
from . import procedures
from . import system
from . import utils


from .congruence import LinearCongruence, Solution, normalize, summarize
from .procedures import build_basis, enumerate_all, expand
from .system import CongruenceSystem
from .cli import main
