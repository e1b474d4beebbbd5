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
""" Monotonicity of strand ratios of pure diagrams

For degree sequences d < e with d_i = e_i and d_{i+1} = e_{i+1}, the ratio
beta_{i,d_i}(pi_d) / beta_{i+1,d_{i+1}}(pi_d) is strictly smaller than the same ratio
for e. Ratios whose denominator position vanishes are INF.
"""

import logging
from collections import namedtuple, defaultdict

from .degrees import INF, DegreeSequence, iter_degree_sequences
from .diagrams import pure_diagram
from .errors import ValidationError

logger = logging.getLogger(__name__)

SweepReport = namedtuple("SweepReport", ["max_degree", "n", "indices", "checked",
                                         "counterexamples"])


def strand_ratio(d, i):
    """ beta_{i,d_i}(pi_d) / beta_{i+1,d_{i+1}}(pi_d), INF when d_{i+1} is infinite """
    if not isinstance(d, DegreeSequence):
        d = DegreeSequence(d)
    if not 0 <= i < d.n:
        raise ValidationError("index %d out of range 0..%d" % (i, d.n - 1))
    if not d.is_finite(i):
        raise ValidationError("d_%d of %s is infinite" % (i, d))
    if not d.is_finite(i + 1):
        return INF
    pure = pure_diagram(d)
    return pure[(i, d[i])] / pure[(i + 1, d[i + 1])]


def _check_pinned(d, e, i):
    if d.n != e.n:
        raise ValidationError("%s and %s have different lengths" % (d, e))
    if not 0 <= i < d.n:
        raise ValidationError("index %d out of range 0..%d" % (i, d.n - 1))
    if d[i] != e[i] or d[i + 1] != e[i + 1]:
        raise ValidationError("%s and %s differ at position %d or %d" % (d, e, i, i + 1))
    if not d.is_finite(i + 1):
        raise ValidationError("d_%d of %s must be finite" % (i + 1, d))
    if not d < e:
        raise ValidationError("%s is not smaller than %s" % (d, e))


def check_monotonicity(d, e, i):
    """ Tell if strand_ratio(d, i) < strand_ratio(e, i)

    d and e must agree at positions i and i+1 (both finite) and satisfy d < e.
    """
    _check_pinned(d, e, i)
    return strand_ratio(d, i) < strand_ratio(e, i)


def sweep_verify(max_degree, n, i=None):
    """ Check the strict inequality on every admissible pair of a degree window

    Sequences have n+1 entries in [0, max_degree] or INF. With i None every index
    0..n-1 is swept. The result does not depend on enumeration order.
    """
    indices = list(range(n)) if i is None else [i]
    for index in indices:
        if not 0 <= index < n:
            raise ValidationError("index %d out of range 0..%d" % (index, n - 1))

    sequences = list(iter_degree_sequences(n, max_degree))
    checked = 0
    counterexamples = []
    for index in indices:
        groups = defaultdict(list)
        for d in sequences:
            if d.is_finite(index + 1):
                groups[(d[index], d[index + 1])].append((d, strand_ratio(d, index)))

        for key in sorted(groups):
            members = groups[key]
            for d, ratio_d in members:
                for e, ratio_e in members:
                    if d < e:
                        checked += 1
                        if not ratio_d < ratio_e:
                            counterexamples.append((d, e, index))
        logger.debug("index %d: %d pairs checked so far", index, checked)

    return SweepReport(max_degree, n, tuple(indices), checked, counterexamples)


def maximal_chain(d, e):
    """ A chain d = c^0 < c^1 < ... < c^m = e of unit steps

    Each step raises a single entry by one, or makes it infinite, starting from the
    highest index.
    """
    if d.n != e.n:
        raise ValidationError("%s and %s have different lengths" % (d, e))
    if not d <= e:
        raise ValidationError("%s is not smaller than %s" % (d, e))

    chain = [d]
    current = list(d)
    while tuple(current) != e.entries:
        k = max(k for k in range(len(current)) if current[k] != e[k])
        if e[k] is INF:
            current[k] = INF
        else:
            current[k] += 1
        chain.append(DegreeSequence(current))
    return chain
