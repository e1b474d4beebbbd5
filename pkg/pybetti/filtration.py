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
""" Splitting certificates, integrality obstructions and quotient prediction

A diagram D of a finite length module over a polynomial ring with n >= 2 variables
decomposes as c_0 pi_{d^0} + ... + c_s pi_{d^s}. When d^0 << d^1 (d^0 < d^1 and
d^0_2 <= d^1_1), the first summand is itself the diagram of a cleanly embedded
submodule, so c_0 pi_{d^0} must be integral; when moreover d^0_n - n < d^1_1 the module
splits off that summand. Iterating along the chain gives the verdicts below.
"""

import logging
import math
from collections import namedtuple
from enum import Enum

from .degrees import INF, DegreeSequence
from .diagrams import BettiDiagram
from .decomposition import bs_decompose, CoefficientUnits
from .errors import ValidationError, InconclusiveError

logger = logging.getLogger(__name__)


class Verdict(Enum):
    """ Outcome of analyze() """
    DIRECT_SUM = "direct-sum"
    CLEAN_FILTRATION = "clean-filtration"
    OBSTRUCTION = "obstruction"
    INCONCLUSIVE = "inconclusive"


PairFlags = namedtuple("PairFlags", ["separated", "strong_split"])


class FiltrationReport():
    """ Result of analyze()

    'witness' is the non-integral diagram c_k pi_{d^k} and 'obstruction_step' is k when
    the verdict is Verdict.OBSTRUCTION; both are None otherwise.
    """
    # pylint: disable=too-many-arguments
    def __init__(self, chain, pair_flags, step_integral, verdict, witness=None,
                 obstruction_step=None):
        self.chain = chain
        self.pair_flags = tuple(pair_flags)
        self.step_integral = tuple(step_integral)
        self.verdict = verdict
        self.witness = witness
        self.obstruction_step = obstruction_step

    @property
    def first_step_integral(self):
        """ Tell if c_0 pi_{d^0} is integral """
        return self.step_integral[0]

    @property
    def certified(self):
        """ Tell if the verdict is a splitting or filtration certificate """
        return self.verdict in (Verdict.DIRECT_SUM, Verdict.CLEAN_FILTRATION)

    def __repr__(self):
        return "<FiltrationReport(%s, steps=%d)>" % (self.verdict.value, len(self.chain))


def is_strictly_separated(d, e):
    """ d << e: d < e termwise and d_2 <= e_1 """
    if not isinstance(d, DegreeSequence) or not isinstance(e, DegreeSequence):
        raise ValidationError("expected two degree sequences")
    if d.n != e.n:
        raise ValidationError("%s and %s have different lengths" % (d, e))
    if d.n < 2:
        raise ValidationError("separation needs sequences with at least 3 entries")
    return d < e and d[2] <= e[1]


def splits_strongly(d, e, n=None):
    """ d_n - n < e_1, the condition for the first summand to split off """
    if n is None:
        n = d.n
    if not d.is_finite(n):
        raise ValidationError("d_%d of %s is infinite" % (n, d))
    return d[n] - n < e[1]


def _pair_flags(chain, n):
    flags = []
    for d, e in zip(chain.sequences, chain.sequences[1:]):
        strong = d.is_finite(n) and splits_strongly(d, e, n)
        flags.append(PairFlags(is_strictly_separated(d, e), strong))
    return flags


def _check_hypotheses(diagram, n, enforce_hypotheses):
    if n is None:
        n = diagram.n
    elif n != diagram.n:
        raise ValidationError("diagram has %d variables, not %d" % (diagram.n, n))
    if n < 2:
        raise ValidationError("analysis needs a ring of dimension at least 2, got n=%d" % n)
    if enforce_hypotheses and not diagram.is_finite_length_consistent(n):
        raise ValidationError("Hilbert numerator is not divisible by (1-t)^%d: "
                              "not the diagram of a finite length module" % n)
    return n


def _checked_steps(flags, length):
    """ Number of leading steps whose integrality is forced

    Step k is forced when pairs 0..k are separated. The last step is forced once every
    pair is.
    """
    for k, pair in enumerate(flags):
        if not pair.separated:
            return k
    return length


def analyze(diagram, n=None, enforce_hypotheses=True):
    """ Decompose a diagram and look for splitting certificates or obstructions

    Steps are walked in order while consecutive pairs are separated. The first
    non-integral step found that way is an obstruction: no finite length module has the
    diagram. Raise NotInConeError when the diagram does not decompose.
    """
    n = _check_hypotheses(diagram, n, enforce_hypotheses)
    if diagram.is_zero():
        raise ValidationError("nothing to analyze in the zero diagram")

    chain = bs_decompose(diagram, CoefficientUnits.PI_TILDE)
    flags = _pair_flags(chain, n)
    terms = chain.terms()
    integral = [term.is_integral() for term in terms]

    checked = _checked_steps(flags, len(chain))
    for k in range(checked):
        if not integral[k]:
            logger.debug("obstruction at step %d: %s * pi~%s", k, *chain[k])
            return FiltrationReport(chain, flags, integral, Verdict.OBSTRUCTION,
                                    witness=terms[k], obstruction_step=k)

    if checked == len(chain) and all(integral):
        if all(pair.strong_split for pair in flags):
            verdict = Verdict.DIRECT_SUM
        else:
            verdict = Verdict.CLEAN_FILTRATION
    else:
        verdict = Verdict.INCONCLUSIVE
    logger.debug("verdict %s after checking %d of %d steps", verdict.value, checked, len(chain))
    return FiltrationReport(chain, flags, integral, verdict)


def minimal_integral_multiple(diagram, n=None, enforce_hypotheses=True):
    """ Smallest c >= 1 such that analyze(c * D) finds no obstruction

    Raise InconclusiveError when a non-integral step of c * D is not covered by the
    separation hypotheses, since nothing can be derived from it.
    """
    n = _check_hypotheses(diagram, n, enforce_hypotheses)
    chain = bs_decompose(diagram, CoefficientUnits.PI_TILDE)
    flags = _pair_flags(chain, n)
    checked = _checked_steps(flags, len(chain))

    multiple = math.lcm(*[coefficient.denominator
                          for coefficient in chain.coefficients[:checked]])
    unchecked = [k for k in range(checked, len(chain))
                 if (chain[k].coefficient * multiple).denominator != 1]
    if unchecked:
        raise InconclusiveError("step %d is not integral but %s and %s are not separated" %
                                (unchecked[0], chain[checked].sequence,
                                 chain[checked + 1].sequence))
    return multiple


def north_fork_degrees(diagram):
    """ The cutoff vector f of the North fork

    f_0 = 1 + max degree of column 0, f_1 = 1 + min degree of column 1 and
    f_i = min{j > f_{i-1} : beta_{i,j} != 0} for i > 1 (INF when there is none).
    """
    if not diagram.is_nonnegative():
        raise ValidationError("diagram has a negative entry")
    top = diagram.max_degree(0)
    first = diagram.min_degree(1) if diagram.n >= 1 else None
    if top is None or first is None:
        raise ValidationError("the North fork needs nonzero columns 0 and 1")

    cutoffs = [top + 1, first + 1]
    for i in range(2, diagram.n + 1):
        previous = cutoffs[-1]
        later = [j for j in diagram.column(i) if previous is not INF and j > previous]
        cutoffs.append(min(later) if later else INF)
    return tuple(cutoffs)


def truncate(diagram, cutoffs):
    """ Keep the entries beta_{i,j} with j < f_i """
    cutoffs = tuple(cutoffs)
    if len(cutoffs) != diagram.n + 1:
        raise ValidationError("expected %d cutoffs, got %d" % (diagram.n + 1, len(cutoffs)))
    return BettiDiagram(diagram.n, {(i, j): value for (i, j), value in diagram.items()
                                    if j < cutoffs[i]})


def format_cutoffs(cutoffs):
    """ "(1,2,3,5)" """
    return "(" + ",".join(str(cutoff) for cutoff in cutoffs) + ")"


def _extended_prefix(chain):
    """ Smallest k such that d^0..d^{k-1} share d_1 and are separated from every later
    sequence, or None """
    sequences = chain.sequences
    for k in range(1, len(sequences)):
        prefix, rest = sequences[:k], sequences[k:]
        if any(d[1] != sequences[0][1] for d in prefix):
            return None
        if all(is_strictly_separated(d, e) for d in prefix for e in rest):
            return k
    return None


def predict_quotient_betti(diagram, n=None, extended_hypotheses=False, enforce_hypotheses=True):
    """ Predicted diagram of the quotient by the North fork presentation

    This is c_0 pi_{d^0} plus the free module making up the rest of column 0. With
    extended_hypotheses, the first k steps play the role of the first one when they
    share their first syzygy degree and are separated from the rest of the chain.
    """
    n = _check_hypotheses(diagram, n, enforce_hypotheses)
    if diagram.is_zero():
        raise ValidationError("nothing to predict for the zero diagram")
    chain = bs_decompose(diagram, CoefficientUnits.PI_TILDE)

    if len(chain) == 1 or is_strictly_separated(chain[0].sequence, chain[1].sequence):
        prefix = 1
    elif extended_hypotheses:
        prefix = _extended_prefix(chain)
        if prefix is None:
            raise InconclusiveError("no prefix of the chain is separated from the rest")
        logger.debug("extended hypotheses: using the first %d steps", prefix)
    else:
        raise InconclusiveError("%s and %s are not separated" %
                                (chain[0].sequence, chain[1].sequence))

    core = BettiDiagram(diagram.n)
    for k in range(prefix):
        core = core + chain.term(k)

    free = {}
    for j, value in diagram.column(0).items():
        extra = value - core[(0, j)]
        if extra < 0:
            raise InconclusiveError("predicted free part is negative in degree %d" % j)
        free[(0, j)] = extra
    return core + BettiDiagram(diagram.n, free)


def check_free_split(core, free, n=None):
    """ Tell if a module with diagram core + free is forced to split off its free part

    The core must have codimension at least 2 and the free generators must live in
    degrees at least as large as every generator of the core.
    """
    if n is None:
        n = core.n
    if core.n != n or free.n != n:
        raise ValidationError("diagrams must both have n=%d" % n)
    if any(i != 0 for (i, _) in free.positions()):
        raise ValidationError("the free part must only have entries in column 0")

    if not core.hilbert_numerator().is_divisible_by_one_minus_t(2):
        return False
    if free.is_zero() or core.max_degree(0) is None:
        return True
    return free.min_degree(0) >= core.max_degree(0)
