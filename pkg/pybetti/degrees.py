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
""" Degree sequences over the integers extended with infinity """

import functools
import re
from itertools import combinations

from .errors import ValidationError, ParseError


@functools.total_ordering
class Infinity():
    """ The point at infinity of the integers, greater than any integer or rational

    There is a single instance, INF. It is used both as a degree sequence entry and as the
    value of a ratio whose denominator vanishes, so that comparisons stay exact.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("pybetti.INF")

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())

INF = Infinity()

_INFINITY_TOKENS = ("inf", "infinity", "oo", "∞")


def is_finite(value):
    """ Tell if a degree sequence entry (or a ratio) is finite """
    return value is not INF


class DegreeSequence():
    """ A sequence d = (d_0, ..., d_n) with d_i + 1 <= d_{i+1}

    Entries are integers or INF, and every entry after an infinite one is infinite.
    Instances are immutable and hashable.
    """
    __slots__ = ("_entries",)

    def __init__(self, entries):
        entries = tuple(entries)
        if not entries:
            raise ValidationError("a degree sequence needs at least one entry")

        for entry in entries:
            # bool is an int, but never a degree
            if entry is not INF and (isinstance(entry, bool) or not isinstance(entry, int)):
                raise ValidationError("invalid degree %r in %r" % (entry, entries))

        for previous, current in zip(entries, entries[1:]):
            if previous is INF:
                if current is not INF:
                    raise ValidationError(
                        "finite degree after an infinite one in %s" % _format_entries(entries))
            elif current is not INF and previous + 1 > current:
                raise ValidationError(
                    "degrees of %s are not strictly increasing" % _format_entries(entries))

        object.__setattr__(self, "_entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("DegreeSequence is immutable")

    def __reduce__(self):
        return (DegreeSequence, (self._entries,))

    @classmethod
    def parse(cls, literal, n=None):
        """ Build a sequence from a literal such as "(0,1,2,inf)"

        When n is given, the literal may be shorter than n+1 entries and is padded with
        infinities, so "(0)" denotes the sequence of a free module.
        """
        text = literal.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        tokens = [token.strip() for token in text.split(",")]
        if not tokens or any(not token for token in tokens):
            raise ParseError("can't parse degree sequence %r" % literal)

        entries = []
        for token in tokens:
            if token.lower() in _INFINITY_TOKENS:
                entries.append(INF)
            elif re.fullmatch(r"[+-]?\d+", token):
                entries.append(int(token))
            else:
                raise ParseError("can't parse degree %r in %r" % (token, literal))

        try:
            sequence = cls(entries)
        except ValidationError as err:
            raise ParseError(str(err)) from err
        if n is not None:
            sequence = sequence.padded(n)
        return sequence

    @property
    def entries(self):
        """ The entries as a tuple """
        return self._entries

    @property
    def n(self):
        """ Number of variables of the ring, i.e. len(d) - 1 """
        return len(self._entries) - 1

    @property
    def length(self):
        """ max{i : d_i finite} """
        finite = [i for i, entry in enumerate(self._entries) if entry is not INF]
        if not finite:
            raise ValidationError("the all-infinite sequence has no length")
        return finite[-1]

    def is_finite(self, i):
        """ Tell if d_i is finite """
        return self._entries[i] is not INF

    def padded(self, n):
        """ The same sequence with infinities appended up to n+1 entries """
        if n < self.n:
            raise ValidationError("can't pad %s down to %d variables" % (self, n))
        return DegreeSequence(self._entries + (INF,) * (n - self.n))

    def precedes(self, other):
        """ Termwise comparison d <= e """
        self._check_same_n(other)
        return all(a <= b for a, b in zip(self._entries, other.entries))

    def _check_same_n(self, other):
        if not isinstance(other, DegreeSequence):
            raise ValidationError("%r is not a degree sequence" % (other,))
        if other.n != self.n:
            raise ValidationError("degree sequences %s and %s have different lengths" %
                                  (self, other))

    def __le__(self, other):
        return self.precedes(other)

    def __lt__(self, other):
        return self.precedes(other) and self != other

    def __ge__(self, other):
        return other.precedes(self)

    def __gt__(self, other):
        return other.precedes(self) and self != other

    def __eq__(self, other):
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return self._entries == other.entries

    def __hash__(self):
        return hash(self._entries)

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, index):
        return self._entries[index]

    def __repr__(self):
        return "DegreeSequence(%s)" % _format_entries(self._entries)

    def __str__(self):
        return _format_entries(self._entries)


def _format_entries(entries):
    return "(" + ",".join(str(entry) for entry in entries) + ")"


def iter_degree_sequences(n, max_degree, min_degree=0, full_length=False):
    """ Enumerate every degree sequence with n+1 entries in [min_degree, max_degree] or INF

    d_0 is always finite. With full_length, only sequences without infinite entries are
    produced. The order is deterministic: by number of finite entries, then lexicographic.
    """
    window = range(min_degree, max_degree + 1)
    lengths = [n + 1] if full_length else range(1, n + 2)
    for finite_count in lengths:
        for finite_part in combinations(window, finite_count):
            yield DegreeSequence(finite_part + (INF,) * (n + 1 - finite_count))
