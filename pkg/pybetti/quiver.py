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
""" Betti diagrams of modules in the simplex spanned by the pure diagrams of
(0,1,2,4), (0,1,3,4) and (0,2,3,4)

A point of the simplex is written 4r pi_(0,1,2,4) + 2s pi_(0,1,3,4) + 4t pi_(0,2,3,4) for
a triplet (r, s, t). Its six entries are

    beta_{0,0} = (3r + s + t)/6    beta_{1,1} = (4r + s)/3    beta_{2,2} = r
    beta_{1,2} = t                 beta_{2,3} = (s + 4t)/3    beta_{3,4} = (r + s + 3t)/6

and it is integral exactly when r+s and s+t are multiples of 3 and r+s+t is even.
Diagrams of actual modules form a semigroup generated by ten triplets.
"""

import logging
from collections import namedtuple

from .degrees import DegreeSequence
from .diagrams import BettiDiagram, pure_diagram
from .errors import ValidationError, NotInSimplexError, ConstructionError

logger = logging.getLogger(__name__)

SIMPLEX = (DegreeSequence((0, 1, 2, 4)), DegreeSequence((0, 1, 3, 4)), DegreeSequence((0, 2, 3, 4)))
_SIMPLEX_PURE = tuple(pure_diagram(sequence) for sequence in SIMPLEX)

_POSITIONS = frozenset([(0, 0), (1, 1), (2, 2), (1, 2), (2, 3), (3, 4)])

Triplet = namedtuple("Triplet", ["r", "s", "t"])

Member = namedtuple("Member", ["decomposition"])
Member.__doc__ = """ The triplet is in the semigroup; decomposition is a tuple of generators """

Excluded = namedtuple("Excluded", ["family", "provenance"])
Excluded.__doc__ = """ The triplet is admissible but not in the semigroup """

# provenance of an exclusion
PROVED = "proved"
ASSERTED = "asserted"

EnumerationReport = namedtuple("EnumerationReport", ["bound", "results", "disagreements"])


def make_triplet(r, s, t):
    """ Validated Triplet """
    for value in (r, s, t):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ValidationError("(%r, %r, %r) is not a triplet of non-negative integers" %
                                  (r, s, t))
    return Triplet(r, s, t)


def add_triplets(*triplets):
    """ Componentwise sum """
    return Triplet(sum(x.r for x in triplets), sum(x.s for x in triplets),
                   sum(x.t for x in triplets))


def triplet_to_diagram(r, s, t):
    """ 4r pi_(0,1,2,4) + 2s pi_(0,1,3,4) + 4t pi_(0,2,3,4) """
    triplet = make_triplet(r, s, t)
    diagram = BettiDiagram(3)
    for weight, pure in zip((4 * triplet.r, 2 * triplet.s, 4 * triplet.t), _SIMPLEX_PURE):
        diagram = diagram + pure.scale(weight)
    return diagram


def diagram_to_triplet(diagram):
    """ Inverse of triplet_to_diagram(): r = beta_{2,2}, t = beta_{1,2} and
    s = 3 beta_{1,1} - 4 beta_{2,2} """
    if diagram.n != 3:
        raise NotInSimplexError("simplex diagrams have n=3, got %d" % diagram.n)
    outside = diagram.positions() - _POSITIONS
    if outside:
        raise NotInSimplexError("entry at %s is outside of the simplex" % (sorted(outside)[0],))

    r = diagram[(2, 2)]
    t = diagram[(1, 2)]
    s = 3 * diagram[(1, 1)] - 4 * r
    for value in (r, s, t):
        if value < 0 or value.denominator != 1:
            raise NotInSimplexError("(%s, %s, %s) is not a triplet of non-negative integers" %
                                    (r, s, t))

    triplet = Triplet(int(r), int(s), int(t))
    if triplet_to_diagram(*triplet) != diagram:
        raise NotInSimplexError("diagram is not in the image of %s" % (triplet,))
    return triplet


def is_admissible(r, s, t):
    """ Tell if triplet_to_diagram(r, s, t) is integral """
    return triplet_to_diagram(r, s, t).is_integral()


def admissible_by_congruence(r, s, t):
    """ Closed form of is_admissible() """
    make_triplet(r, s, t)
    return (r + s) % 3 == 0 and (s + t) % 3 == 0 and (r + s + t) % 2 == 0


GENERATORS = tuple(Triplet(*values) for values in (
    (6, 0, 0), (0, 0, 6), (1, 2, 1), (3, 3, 0), (0, 3, 3),
    (1, 8, 1), (3, 9, 0), (0, 9, 3), (0, 12, 0), (0, 18, 0)))


def generators():
    """ The ten minimal generators as (triplet, diagram) pairs """
    return [(triplet, triplet_to_diagram(*triplet)) for triplet in GENERATORS]


def decompose_triplet(triplet, generator_set=GENERATORS):
    """ Write a triplet as a sum of generators, None if impossible

    The search is exhaustive over generator multiplicities, trying generators in order
    and larger multiplicities first; it always terminates because every coordinate
    decreases.
    """
    triplet = make_triplet(*triplet)
    generator_set = tuple(generator_set)
    for generator in generator_set:
        if sum(generator) == 0:
            raise ValidationError("the zero triplet can't be a generator")
    memo = {}

    def search(remaining, index):
        if remaining == (0, 0, 0):
            return ()
        if index == len(generator_set):
            return None
        key = (remaining, index)
        if key in memo:
            return memo[key]

        generator = generator_set[index]
        most = min(have // need for have, need in zip(remaining, generator) if need)
        found = None
        for count in range(most, -1, -1):
            rest = tuple(have - count * need for have, need in zip(remaining, generator))
            tail = search(rest, index + 1)
            if tail is not None:
                found = (generator,) * count + tail
                break
        memo[key] = found
        return found

    return search(tuple(triplet), 0)


def classify(r, s, t):
    """ Membership of an admissible triplet, decided by the residues of r and t mod 6

    Return Member(None) for members: this function does not build decompositions.
    """
    if not admissible_by_congruence(r, s, t):
        raise ValidationError("(%d, %d, %d) is not admissible" % (r, s, t))

    residues = (r % 6, t % 6)
    if s == 0 and residues != (0, 0):
        return Excluded("s=0, family (3+6γ,0,3+6α)", PROVED)
    if s == 1:
        if residues == (2, 5):
            return Excluded("s=1, family (2+6γ,1,5+6α)", PROVED)
        return Excluded("s=1, family (5+6γ,1,2+6α)", PROVED)
    if s == 2 and residues == (4, 4):
        return Excluded("s=2, family (4+6γ,2,4+6α)", PROVED)
    if s == 4 and residues == (5, 5):
        return Excluded("s=4, family (5+6γ,4,5+6α)", ASSERTED)
    if (r, s, t) == (0, 6, 0):
        return Excluded("s=6 exception", PROVED)
    return Member(None)


def is_in_bmod(r, s, t):
    """ Membership of an admissible triplet, with a decomposition into generators """
    triplet = make_triplet(r, s, t)
    if not is_admissible(*triplet):
        raise ValidationError("%s does not give an integral diagram" % (tuple(triplet),))

    result = classify(*triplet)
    if isinstance(result, Excluded):
        return result

    decomposition = decompose_triplet(triplet)
    if decomposition is None:
        raise ConstructionError("no decomposition of %s into generators" % (tuple(triplet),),
                                check="decomposition")
    return Member(decomposition)


def enumerate_members(bound):
    """ Run classify() and decompose_triplet() on every admissible triplet with
    r+s+t <= bound and collect the triplets where they disagree """
    results = []
    disagreements = []
    for total in range(bound + 1):
        for r in range(total + 1):
            for s in range(total - r + 1):
                t = total - r - s
                if not is_admissible(r, s, t):
                    continue
                triplet = Triplet(r, s, t)
                classified = classify(*triplet)
                decomposition = decompose_triplet(triplet)
                if decomposition is not None and add_triplets(*decomposition) != triplet:
                    decomposition = None
                if isinstance(classified, Member) != (decomposition is not None):
                    disagreements.append(triplet)
                    logger.debug("classifier and search disagree on %s", triplet)
                if decomposition is not None:
                    results.append((triplet, Member(decomposition)))
                else:
                    results.append((triplet, classified))
    return EnumerationReport(bound, results, disagreements)
