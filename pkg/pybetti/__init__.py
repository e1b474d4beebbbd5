# This file is part of PYBETTI
# vim: set fileencoding=utf-8 :
#
# MIT License
#
# Copyright (c) 2026 The PYBETTI authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#
""" PYBETTI: exact numerical Boij-Soderberg theory

Betti diagrams with exact rational entries, pure diagrams, the greedy decomposition into
a chain of pure diagrams, splitting certificates and integrality obstructions for
diagrams of finite length modules, and the semigroup of module diagrams in a small
simplex.
"""

from .degrees import INF, DegreeSequence, iter_degree_sequences
from .diagrams import BettiDiagram, HilbertNumerator, pure_diagram, smallest_integral_point, \
    top_strand
from .diagramformat import parse_diagram, format_diagram, read_diagram
from .decomposition import CoefficientUnits, DecompositionChain, bs_decompose, is_in_cone
from .filtration import Verdict, analyze, predict_quotient_betti
from .errors import BettiError, ValidationError, ParseError, NotInConeError, \
    NonNegativityViolation, InconclusiveError, NotInSimplexError, ConstructionError
