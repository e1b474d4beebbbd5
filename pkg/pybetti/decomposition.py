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
""" Boij-Soderberg decomposition of a Betti diagram into a chain of pure diagrams """

import logging
import re
from collections import namedtuple
from enum import Enum

from .degrees import DegreeSequence
from .diagrams import BettiDiagram, pure_diagram, smallest_integral_point, top_strand, \
    normalizing_factor, to_rational
from .diagramformat import parse_rational
from .errors import NotInConeError, ValidationError, ParseError

logger = logging.getLogger(__name__)


class CoefficientUnits(Enum):
    """ Which multiple of the pure diagram a chain coefficient refers to """
    PI = "pi"
    PI_TILDE = "pitilde"

    @property
    def symbol(self):
        """ Name used in chain lines """
        return "pi" if self is CoefficientUnits.PI else "pi~"


ChainStep = namedtuple("ChainStep", ["coefficient", "sequence"])


class DecompositionChain():
    """ An ordered list of (coefficient, degree sequence) pairs

    The sequences strictly increase along the chain and the coefficients are positive.
    """
    __slots__ = ("_n", "_steps", "_units")

    def __init__(self, n, steps, units=CoefficientUnits.PI_TILDE):
        checked = []
        for coefficient, sequence in steps:
            if not isinstance(sequence, DegreeSequence):
                sequence = DegreeSequence(sequence)
            if sequence.n != n:
                raise ValidationError("sequence %s does not have n=%d" % (sequence, n))
            coefficient = to_rational(coefficient)
            if coefficient <= 0:
                raise ValidationError("coefficient %s of %s is not positive" %
                                      (coefficient, sequence))
            checked.append(ChainStep(coefficient, sequence))

        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_steps", tuple(checked))
        object.__setattr__(self, "_units", CoefficientUnits(units))

    def __setattr__(self, name, value):
        raise AttributeError("DecompositionChain is immutable")

    @property
    def n(self):
        """ Number of variables """
        return self._n

    @property
    def units(self):
        """ CoefficientUnits of the coefficients """
        return self._units

    @property
    def steps(self):
        """ Tuple of ChainStep """
        return self._steps

    @property
    def sequences(self):
        """ The degree sequences d^0 < d^1 < ... """
        return [step.sequence for step in self._steps]

    @property
    def coefficients(self):
        """ The coefficients, in the chain's units """
        return [step.coefficient for step in self._steps]

    def __len__(self):
        return len(self._steps)

    def __iter__(self):
        return iter(self._steps)

    def __getitem__(self, index):
        return self._steps[index]

    def is_monotone(self):
        """ Tell if the sequences strictly increase termwise """
        return all(before < after for before, after in zip(self.sequences, self.sequences[1:]))

    def to_units(self, units):
        """ The same chain with coefficients relative to pi_d or to pi~_d """
        units = CoefficientUnits(units)
        if units is self._units:
            return self
        steps = []
        for coefficient, sequence in self._steps:
            factor = normalizing_factor(sequence)
            if units is CoefficientUnits.PI:
                steps.append((coefficient * factor, sequence))
            else:
                steps.append((coefficient / factor, sequence))
        return DecompositionChain(self._n, steps, units)

    def term(self, index):
        """ The diagram contributed by one step """
        coefficient, sequence = self._steps[index]
        if self._units is CoefficientUnits.PI:
            return pure_diagram(sequence).scale(coefficient)
        return smallest_integral_point(sequence).scale(coefficient)

    def terms(self):
        """ The diagrams contributed by every step """
        return [self.term(index) for index in range(len(self._steps))]

    def reconstruct(self):
        """ Sum of the chain, which is the decomposed diagram """
        total = BettiDiagram(self._n)
        for term in self.terms():
            total = total + term
        return total

    def scale(self, factor):
        """ The chain of factor * D """
        factor = to_rational(factor)
        if factor <= 0:
            raise ValidationError("scale factor must be positive, got %s" % factor)
        return DecompositionChain(self._n,
                                  [(coefficient * factor, sequence)
                                   for coefficient, sequence in self._steps],
                                  self._units)

    def __eq__(self, other):
        if not isinstance(other, DecompositionChain):
            return NotImplemented
        return (self._n, self._units, self._steps) == (other.n, other.units, other.steps)

    def __hash__(self):
        return hash((self._n, self._units, self._steps))

    def __repr__(self):
        return "<DecompositionChain(n=%d, %s, [%s])>" % (
            self._n, self._units.value,
            ", ".join("%s*%s" % (coefficient, sequence) for coefficient, sequence in self._steps))

    def __str__(self):
        return format_chain(self)


def bs_decompose(diagram, units=CoefficientUnits.PI_TILDE):
    """ Decompose a diagram greedily along its top strand

    Each step subtracts c * pi_d where d is the top strand of the remainder and c is the
    largest coefficient keeping the top strand entries non-negative. The loop stops when
    the remainder vanishes; anything else means the diagram is not in the cone.
    """
    if not diagram.is_nonnegative():
        raise NotInConeError("diagram has a negative entry", remainder=diagram)

    bound = len(diagram.positions())
    remainder = diagram
    steps = []
    while not remainder.is_zero():
        if len(steps) >= bound:
            raise NotInConeError("no decomposition after %d steps" % bound, remainder=remainder)

        sequence = top_strand(remainder)
        if steps and not steps[-1][1] < sequence:
            raise NotInConeError("chain is not increasing: %s then %s" %
                                 (steps[-1][1], sequence), remainder=remainder)

        pure = pure_diagram(sequence)
        top = [(i, degree) for i, degree in enumerate(sequence) if sequence.is_finite(i)]
        coefficient = min(remainder[position] / pure[position] for position in top)

        remainder = remainder - pure.scale(coefficient)
        if not any(remainder[position] == 0 for position in top):
            raise NotInConeError("step %d did not clear any top strand entry" % len(steps),
                                 remainder=remainder)
        if not remainder.is_nonnegative():
            raise NotInConeError("step %d left a negative entry" % len(steps),
                                 remainder=remainder)
        logger.debug("step %d: %s * pi%s", len(steps), coefficient, sequence)
        steps.append((coefficient, sequence))

    return DecompositionChain(diagram.n, steps, CoefficientUnits.PI).to_units(units)


def is_in_cone(diagram):
    """ Tell if the diagram is a non-negative combination of pure diagrams along a chain """
    try:
        bs_decompose(diagram)
    except NotInConeError as err:
        logger.debug("not in cone: %s", err)
        return False
    return True


_CHAIN_LINE_RE = re.compile(r"^\s*(\S+)\s*\*\s*(pi~?)\s*(\(.*\))\s*$")


def format_chain(chain):
    """ One line "c * pi~(d_0,...,d_n)" per step """
    symbol = chain.units.symbol
    return "\n".join("%s * %s%s" % (coefficient, symbol, sequence)
                     for coefficient, sequence in chain)


def parse_chain(text, n=None):
    """ Read chain lines as written by format_chain() """
    steps = []
    units = None
    for number, line in enumerate(text.strip().splitlines(), 1):
        match = _CHAIN_LINE_RE.match(line)
        if not match:
            raise ParseError("line %d is not a chain step: %r" % (number, line))
        line_units = CoefficientUnits.PI_TILDE if match.group(2) == "pi~" else CoefficientUnits.PI
        if units is not None and line_units is not units:
            raise ParseError("line %d mixes pi and pi~ coefficients" % number)
        units = line_units
        coefficient = parse_rational(match.group(1))
        steps.append((coefficient, DegreeSequence.parse(match.group(3), n)))

    if not steps:
        raise ParseError("empty chain")
    try:
        return DecompositionChain(steps[0][1].n, steps, units)
    except ValidationError as err:
        raise ParseError(str(err)) from err


def chain_to_json(chain):
    """ JSON compatible dict mirroring format_chain() """
    return {
        "n": chain.n,
        "units": chain.units.value,
        "steps": [{"coefficient": str(coefficient),
                   "sequence": [str(degree) if not sequence.is_finite(i) else degree
                                for i, degree in enumerate(sequence)]}
                  for coefficient, sequence in chain],
        }

