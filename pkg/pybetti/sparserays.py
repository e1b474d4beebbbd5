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
""" Sparse rays: integral diagrams D such that c * D passes the integrality test of the
filtration analysis only when a given prime p divides c

For p >= 5 the ray is spanned by
    D = 1/p pi~_(0,1,2,p) + alpha/p pi~_(0,a,a+1,p) + 1/p pi~_(0,p-2,p-1,p)
with a = floor(p/2) and alpha the least positive integer making 1 + alpha + C(p-1,2) a
multiple of p. Small primes use two step chains.
"""

import logging
import math
from collections import namedtuple
from fractions import Fraction
from itertools import product

from .degrees import DegreeSequence, iter_degree_sequences
from .diagrams import BettiDiagram, smallest_integral_point
from .errors import ValidationError, ConstructionError, InconclusiveError
from .filtration import is_strictly_separated, minimal_integral_multiple

logger = logging.getLogger(__name__)

CertificateCheck = namedtuple("CertificateCheck", ["name", "passed", "detail"])


class SparseRayCertificate():
    """ A diagram on a sparse ray together with the checks it was submitted to

    'superseded' holds the certificate of a construction this one replaces, if any.
    """
    # pylint: disable=too-many-arguments
    def __init__(self, p, alpha, sequences, weights, diagram, obstruction_multiple, checks,
                 superseded=None):
        self.p = p
        self.alpha = alpha
        self.sequences = tuple(sequences)
        self.weights = tuple(weights)
        self.diagram = diagram
        self.obstruction_multiple = obstruction_multiple
        self.checks = tuple(checks)
        self.superseded = superseded

    @property
    def passed(self):
        """ Tell if every check passed """
        return all(check.passed for check in self.checks)

    def failed_checks(self):
        """ The checks that did not pass """
        return [check for check in self.checks if not check.passed]

    def __repr__(self):
        return "<SparseRayCertificate(p=%d, alpha=%s, %s)>" % (
            self.p, self.alpha, "passed" if self.passed else "failed")


def is_prime(p):
    """ Trial division """
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        return False
    divisor = 2
    while divisor * divisor <= p:
        if p % divisor == 0:
            return False
        divisor += 1
    return True


def _combine(sequences, weights):
    diagram = BettiDiagram(sequences[0].n)
    for sequence, weight in zip(sequences, weights):
        diagram = diagram + smallest_integral_point(sequence).scale(weight)
    return diagram


def _certify(p, alpha, sequences, weights, extra_checks=()):
    sequences = tuple(DegreeSequence(sequence) for sequence in sequences)
    diagram = _combine(sequences, weights)
    checks = []

    fractional = [(position, value) for position, value in diagram.items()
                  if value.denominator != 1]
    if fractional:
        (i, j), value = fractional[0]
        checks.append(CertificateCheck("integral", False, "beta_{%d,%d} = %s" % (i, j, value)))
    else:
        checks.append(CertificateCheck("integral", True, ""))

    unseparated = [(d, e) for d, e in zip(sequences, sequences[1:])
                   if not is_strictly_separated(d, e)]
    if unseparated:
        checks.append(CertificateCheck("separated", False, "%s and %s" % unseparated[0]))
    else:
        checks.append(CertificateCheck("separated", True, ""))

    try:
        multiple = minimal_integral_multiple(diagram)
    except (InconclusiveError, ValidationError) as err:
        multiple = None
        checks.append(CertificateCheck("multiple", False, str(err)))
    else:
        checks.append(CertificateCheck("multiple", multiple == p,
                                       "" if multiple == p else "minimal multiple is %d" %
                                       multiple))

    for name, check in extra_checks:
        checks.append(check(diagram, name))

    return SparseRayCertificate(p, alpha, sequences, weights, diagram, multiple, checks)


def sparse_alpha(p):
    """ Least alpha >= 1 with alpha + 1 + C(p-1,2) divisible by p """
    alpha = (-1 - math.comb(p - 1, 2)) % p
    return alpha if alpha else p


def sparse_ray(p):
    """ Build and certify the sparse ray of a prime p

    Raise ConstructionError naming the first failed check.
    """
    if not is_prime(p):
        raise ValidationError("%r is not a prime" % (p,))

    if p == 2:
        certificate = _certify(2, 1, [(0, 1, 2, 4), (0, 2, 3, 4)],
                               [Fraction(1, 2), Fraction(1, 2)])
    elif p == 3:
        literal = _certify(3, 2, [(0, 1, 2, 5), (0, 3, 4, 5)], [Fraction(1, 3), Fraction(2, 3)])
        certificate = _certify(3, 2, [(0, 1, 2, 6), (0, 4, 5, 6)],
                               [Fraction(1, 3), Fraction(2, 3)])
        certificate.superseded = literal
        for check in literal.failed_checks():
            logger.info("p=3: two step chain over (0,1,2,5), (0,3,4,5) fails %s: %s",
                        check.name, check.detail)
    else:
        certificate = _main_construction(p)

    failed = certificate.failed_checks()
    if failed:
        raise ConstructionError("sparse ray for p=%d fails check %s: %s" %
                                (p, failed[0].name, failed[0].detail), check=failed[0].name)
    return certificate


def _main_construction(p):
    alpha = sparse_alpha(p)
    half = p // 2
    sequences = [(0, 1, 2, p), (0, half, half + 1, p), (0, p - 2, p - 1, p)]
    weights = [Fraction(1, p), Fraction(alpha, p), Fraction(1, p)]
    binomial = math.comb(p - 1, 2)

    def check_corner(diagram, name):
        expected = Fraction(1 + alpha + binomial, p)
        value = diagram[(0, 0)]
        return CertificateCheck(name, value == expected,
                                "" if value == expected else
                                "beta_{0,0} = %s, expected %s" % (value, expected))

    def check_middle(diagram, name):
        # pylint: disable=unused-argument
        middle = smallest_integral_point(DegreeSequence(sequences[1]))
        values = [value for _, value in middle.items()]
        expected = [1, p, p, 1]
        return CertificateCheck(name, values == expected,
                                "" if values == expected else
                                "pi~%s = %s" % (DegreeSequence(sequences[1]),
                                                ", ".join(str(value) for value in values)))

    return _certify(p, alpha, sequences, weights,
                    extra_checks=[("corner", check_corner), ("middle", check_middle)])


def _separated_chains(sequences, max_terms):
    """ Chains of 2..max_terms sequences, consecutive ones separated """
    successors = {d: [e for e in sequences if is_strictly_separated(d, e)] for d in sequences}

    def extend(chain):
        if len(chain) >= 2:
            yield chain
        if len(chain) < max_terms:
            for e in successors[chain[-1]]:
                yield from extend(chain + (e,))

    for d in sequences:
        yield from extend((d,))


def find_obstructed_rays(p, max_degree, max_terms=3):
    """ Search chains of full length sequences (0, a, b, c) with c <= max_degree and
    weights k/p, 0 < k < p, whose combination is integral with obstruction multiple p

    Yield the certificates in a deterministic order.
    """
    if not is_prime(p):
        raise ValidationError("%r is not a prime" % (p,))
    if max_terms < 2:
        raise ValidationError("a chain needs at least two terms")

    sequences = [d for d in iter_degree_sequences(3, max_degree, full_length=True) if d[0] == 0]
    for chain in _separated_chains(sequences, max_terms):
        for numerators in product(range(1, p), repeat=len(chain)):
            weights = [Fraction(k, p) for k in numerators]
            if not _combine(chain, weights).is_integral():
                continue
            certificate = _certify(p, numerators[1], chain, weights)
            if certificate.passed:
                logger.debug("found sparse ray for p=%d: %s", p, certificate.sequences)
                yield certificate
