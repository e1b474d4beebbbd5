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
""" Betti diagrams, pure diagrams and their numerical invariants

All arithmetic is exact: entries are fractions.Fraction, there is no floating point.
A diagram over a ring with n variables has columns 0..n, and the entry (i, j) is
beta_{i,j}, the number of generators of degree j in homological degree i.
"""

import logging
import math
from fractions import Fraction

import sympy

from .degrees import INF, DegreeSequence
from .errors import (
    ValidationError,
    NotInConeError,
    NonNegativityViolation,
    )

logger = logging.getLogger(__name__)

_T = sympy.Symbol("t")
_ONE_MINUS_T = sympy.Poly(1 - _T, _T, domain=sympy.QQ)


def to_rational(value):
    """ Convert an int, a Fraction or an "a/b" string to a Fraction. Floats are refused """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError("%r is not an exact rational" % (value,))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            if "." in value or "e" in value.lower():
                raise ValueError(value)
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as err:
            raise ValidationError("can't read %r as an exact rational" % value) from err
    raise ValidationError("%r is not an exact rational" % (value,))


class BettiDiagram():
    """ A finitely supported table (i, j) -> beta_{i,j} for 0 <= i <= n

    Zero entries are never stored. Instances are immutable and hashable, so they can be
    shared between threads freely.
    """
    __slots__ = ("_n", "_entries")

    def __init__(self, n, entries=None):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise ValidationError("invalid number of variables %r" % (n,))

        if entries is None:
            entries = {}
        items = entries.items() if hasattr(entries, "items") else entries

        stored = {}
        for position, value in items:
            i, j = position
            if isinstance(i, bool) or isinstance(j, bool) or \
                    not isinstance(i, int) or not isinstance(j, int):
                raise ValidationError("invalid position %r" % (position,))
            if not 0 <= i <= n:
                raise ValidationError("column %d out of range 0..%d" % (i, n))
            value = stored.get((i, j), Fraction(0)) + to_rational(value)
            if value:
                stored[(i, j)] = value
            else:
                stored.pop((i, j), None)

        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_entries", stored)

    def __setattr__(self, name, value):
        raise AttributeError("BettiDiagram is immutable")

    def __reduce__(self):
        return (BettiDiagram, (self._n, dict(self._entries)))

    @classmethod
    def zero(cls, n):
        """ The zero diagram with n+1 columns """
        return cls(n)

    @classmethod
    def from_rows(cls, rows, n=None):
        """ Build a diagram from display rows: rows[r][i] is beta_{i,i+r}

        A row entry may be None, 0 or "-" for a zero entry.
        """
        rows = [list(row) for row in rows]
        widths = set(len(row) for row in rows)
        if len(widths) > 1:
            raise ValidationError("rows have different lengths %r" % sorted(widths))
        if n is None:
            if not widths:
                raise ValidationError("can't guess the number of columns of an empty table")
            n = widths.pop() - 1
        entries = {}
        for r, row in enumerate(rows):
            for i, value in enumerate(row):
                if value is None or value == "-":
                    continue
                entries[(i, i + r)] = value
        return cls(n, entries)

    @property
    def n(self):
        """ Number of variables; the diagram has n+1 columns """
        return self._n

    @property
    def entries(self):
        """ A copy of the nonzero entries as a dict (i, j) -> Fraction """
        return dict(self._entries)

    def items(self):
        """ Nonzero entries sorted by (i, j) """
        return sorted(self._entries.items())

    def positions(self):
        """ The set of positions (i, j) holding a nonzero entry """
        return set(self._entries)

    def __getitem__(self, position):
        return self._entries.get(tuple(position), Fraction(0))

    def column(self, i):
        """ The nonzero entries of column i as a dict j -> Fraction """
        return {j: value for (col, j), value in self._entries.items() if col == i}

    def min_degree(self, i):
        """ min{j : beta_{i,j} != 0}, None for a zero column """
        degrees = [j for (col, j) in self._entries if col == i]
        return min(degrees) if degrees else None

    def max_degree(self, i):
        """ max{j : beta_{i,j} != 0}, None for a zero column """
        degrees = [j for (col, j) in self._entries if col == i]
        return max(degrees) if degrees else None

    def nonzero_columns(self):
        """ Sorted indices of the nonzero columns """
        return sorted(set(i for (i, _) in self._entries))

    def is_zero(self):
        """ Tell if every entry is zero """
        return not self._entries

    def is_nonnegative(self):
        """ Tell if every entry is >= 0 """
        return all(value > 0 for value in self._entries.values())

    def is_integral(self):
        """ Tell if every entry is an integer """
        return all(value.denominator == 1 for value in self._entries.values())

    def denominators(self):
        """ The set of denominators of the entries """
        return set(value.denominator for value in self._entries.values())

    @property
    def projective_dimension(self):
        """ Index of the last nonzero column, None for the zero diagram """
        columns = self.nonzero_columns()
        return columns[-1] if columns else None

    @property
    def regularity(self):
        """ max{j - i : beta_{i,j} != 0}, None for the zero diagram """
        if not self._entries:
            return None
        return max(j - i for (i, j) in self._entries)

    def _check_same_n(self, other):
        if not isinstance(other, BettiDiagram):
            raise ValidationError("%r is not a Betti diagram" % (other,))
        if other.n != self._n:
            raise ValidationError("can't combine diagrams with %d and %d variables" %
                                  (self._n, other.n))

    def __add__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        self._check_same_n(other)
        return BettiDiagram(self._n, list(self._entries.items()) + list(other._entries.items()))

    def __neg__(self):
        return BettiDiagram(self._n, {pos: -value for pos, value in self._entries.items()})

    def __sub__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self + (-other)

    def scale(self, factor):
        """ The diagram multiplied by an exact rational factor """
        factor = to_rational(factor)
        return BettiDiagram(self._n, {pos: factor * value for pos, value in self._entries.items()})

    def __mul__(self, factor):
        if isinstance(factor, BettiDiagram):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def subtract_nonneg(self, other):
        """ self - other, refusing to produce a negative entry """
        difference = self - other
        negative = [pos for pos, value in difference.items() if value < 0]
        if negative:
            i, j = negative[0]
            raise NonNegativityViolation(
                "subtraction leaves beta_{%d,%d} = %s < 0" % (i, j, difference[(i, j)]),
                diagram=difference)
        return difference

    def hilbert_numerator(self):
        """ K(t) = sum_{i,j} (-1)^i beta_{i,j} t^j """
        coefficients = {}
        for (i, j), value in self._entries.items():
            coefficients[j] = coefficients.get(j, Fraction(0)) + (-value if i % 2 else value)
        return HilbertNumerator(coefficients)

    def codimension(self):
        """ Order of vanishing of the Hilbert numerator at t=1 (INF for the zero diagram) """
        return self.hilbert_numerator().order_at_one()

    def is_finite_length_consistent(self, n=None):
        """ Tell if the Hilbert numerator is divisible by (1-t)^n """
        if n is None:
            n = self._n
        elif n != self._n:
            raise ValidationError("diagram has %d variables, not %d" % (self._n, n))
        return self.hilbert_numerator().is_divisible_by_one_minus_t(n)

    def dual(self, c=None):
        """ The numerical dual, beta_{i,j} -> beta_{n-i,c-j}

        The default twist c keeps the minimal degree of column 0, which is what the
        graded dual of a finite length module does up to shift.
        """
        if c is None:
            low, high = self.min_degree(0), self.max_degree(self._n)
            if low is None or high is None:
                raise ValidationError("the dual needs nonzero first and last columns")
            c = low + high
        return BettiDiagram(self._n, {(self._n - i, c - j): value
                                      for (i, j), value in self._entries.items()})

    def __eq__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self._n == other.n and self._entries == other._entries

    def __hash__(self):
        return hash((self._n, frozenset(self._entries.items())))

    def __repr__(self):
        return "<BettiDiagram(n=%d, %s)>" % (
            self._n,
            ", ".join("b%d,%d=%s" % (i, j, value) for (i, j), value in self.items()))

    def __str__(self):
        # pylint: disable=import-outside-toplevel,cyclic-import
        from .diagramformat import format_diagram
        return format_diagram(self)


class HilbertNumerator():
    """ The numerator K(t) of the Hilbert series, as a Laurent polynomial with rational
    coefficients """
    __slots__ = ("_coefficients",)

    def __init__(self, coefficients):
        object.__setattr__(self, "_coefficients",
                           {j: to_rational(value) for j, value in coefficients.items()
                            if value})

    def __setattr__(self, name, value):
        raise AttributeError("HilbertNumerator is immutable")

    @property
    def coefficients(self):
        """ A copy of the nonzero coefficients as a dict degree -> Fraction """
        return dict(self._coefficients)

    def is_zero(self):
        """ Tell if K = 0 """
        return not self._coefficients

    def as_poly(self):
        """ Return (P, shift) where P is a sympy polynomial with K(t) = t^shift * P(t) """
        if not self._coefficients:
            return sympy.Poly(0, _T, domain=sympy.QQ), 0
        shift = min(self._coefficients)
        rep = {(j - shift,): sympy.Rational(value.numerator, value.denominator)
               for j, value in self._coefficients.items()}
        return sympy.Poly.from_dict(rep, _T, domain=sympy.QQ), shift

    @classmethod
    def from_poly(cls, poly, shift=0):
        """ Inverse of as_poly() """
        coefficients = {}
        for (exponent,), coefficient in poly.terms():
            if coefficient:
                coefficients[exponent + shift] = Fraction(int(coefficient.p),
                                                          int(coefficient.q))
        return cls(coefficients)

    def is_divisible_by_one_minus_t(self, power):
        """ Tell if (1-t)^power divides K """
        if power <= 0 or not self._coefficients:
            return True
        poly, _ = self.as_poly()
        _, remainder = poly.div(_ONE_MINUS_T ** power)
        return remainder.is_zero

    def quotient(self, power):
        """ K / (1-t)^power, which must be exact """
        poly, shift = self.as_poly()
        quotient, remainder = poly.div(_ONE_MINUS_T ** power)
        if not remainder.is_zero:
            raise ValidationError("%r is not divisible by (1-t)^%d" % (self, power))
        return HilbertNumerator.from_poly(quotient, shift)

    def order_at_one(self):
        """ Largest k such that (1-t)^k divides K (INF when K = 0) """
        if not self._coefficients:
            return INF
        poly, _ = self.as_poly()
        order = 0
        while True:
            quotient, remainder = poly.div(_ONE_MINUS_T)
            if not remainder.is_zero:
                return order
            poly = quotient
            order += 1

    def __add__(self, other):
        if not isinstance(other, HilbertNumerator):
            return NotImplemented
        coefficients = dict(self._coefficients)
        for j, value in other._coefficients.items():
            coefficients[j] = coefficients.get(j, Fraction(0)) + value
        return HilbertNumerator(coefficients)

    def __mul__(self, factor):
        factor = to_rational(factor)
        return HilbertNumerator({j: factor * value for j, value in self._coefficients.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HilbertNumerator):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(frozenset(self._coefficients.items()))

    def __repr__(self):
        terms = ["%s*t^%d" % (value, j) for j, value in sorted(self._coefficients.items())]
        return "<HilbertNumerator(%s)>" % (" + ".join(terms) if terms else "0")


def pure_diagram(d):
    """ The pure diagram pi_d

    beta_{i,d_i} = prod_{k != i, d_k finite} 1/|d_i - d_k| for every finite d_i, and all
    other entries vanish.
    """
    if not isinstance(d, DegreeSequence):
        d = DegreeSequence(d)
    if not d.is_finite(0):
        raise ValidationError("pure diagram of %s: d_0 must be finite" % d)

    finite = [(i, degree) for i, degree in enumerate(d) if degree is not INF]
    entries = {}
    for i, degree in finite:
        product = 1
        for k, other in finite:
            if k != i:
                product *= abs(degree - other)
        entries[(i, degree)] = Fraction(1, product)
    return BettiDiagram(d.n, entries)


def normalizing_factor(d):
    """ The integer m such that m * pi_d is the smallest integral point of its ray """
    return math.lcm(*pure_diagram(d).denominators())


def smallest_integral_point(d):
    """ pi~_d, the smallest integral point on the ray spanned by pi_d """
    pure = pure_diagram(d)
    return pure.scale(math.lcm(*pure.denominators()))


def top_strand(diagram):
    """ The degree sequence of the minimal degrees of the columns of a diagram

    The nonzero columns must form a prefix 0..t and their minimal degrees must be a
    degree sequence, otherwise the diagram is not in the cone.
    """
    if diagram.is_zero():
        raise ValidationError("the zero diagram has no top strand")
    if not diagram.is_nonnegative():
        raise NotInConeError("diagram has a negative entry", remainder=diagram)

    degrees = []
    for i in range(diagram.n + 1):
        low = diagram.min_degree(i)
        if low is None:
            degrees.append(INF)
        elif degrees and degrees[-1] is INF:
            raise NotInConeError("column %d is nonzero after a zero column" % i,
                                 remainder=diagram)
        else:
            degrees.append(low)

    try:
        return DegreeSequence(degrees)
    except ValidationError as err:
        raise NotInConeError("top strand is not a degree sequence: %s" % err,
                             remainder=diagram) from err
