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
""" Exceptions raised by PYBETTI """


class BettiError(Exception):
    """ Base class for every error raised by PYBETTI """


class ValidationError(BettiError, ValueError):
    """ Raised when an argument does not satisfy the precondition of an operation """


class ParseError(ValidationError):
    """ Raised when a diagram, a degree sequence or a chain can't be parsed """


class NotInConeError(BettiError):
    """ Raised when a diagram does not lie in the cone of Betti diagrams

    The partial remainder of the decomposition at the time of failure is kept in
    'remainder' so that callers can report where the greedy algorithm stopped.
    """
    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NonNegativityViolation(BettiError):
    """ Raised when a subtraction of diagrams would produce a negative entry """
    def __init__(self, message, diagram=None):
        super().__init__(message)
        self.diagram = diagram


class InconclusiveError(BettiError):
    """ Raised when the hypotheses needed to derive a conclusion do not hold """


class NotInSimplexError(BettiError):
    """ Raised when a diagram is not an integral point of the quiver simplex """


class ConstructionError(BettiError):
    """ Raised when a constructed diagram fails one of its certificate checks """
    def __init__(self, message, check=None):
        super().__init__(message)
        self.check = check
