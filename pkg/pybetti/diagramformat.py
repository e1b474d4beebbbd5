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
""" Text and JSON serialization of Betti diagrams

Text format: one line per row, row r holds beta_{i,i+r} in its column i, tokens are
separated by a single space and a zero entry is written "-". This follows the layout of
displayed Betti tables, where the upper left entry is beta_{0,0}.

JSON format: {"n": 3, "entries": [{"i": 0, "j": 0, "v": "6/5"}, ...]}
"""

import json
import re
from fractions import Fraction

from .diagrams import BettiDiagram
from .errors import ParseError, ValidationError

ZERO_TOKEN = "-"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(token):
    """ Parse an integer or "a/b" token """
    if not _RATIONAL_RE.match(token):
        raise ParseError("invalid token %r" % token)
    try:
        return Fraction(token)
    except ZeroDivisionError as err:
        raise ParseError("zero denominator in %r" % token) from err


def format_rational(value):
    """ Canonical writing of an exact rational: "3", "-1/2" """
    return str(Fraction(value))


def parse_diagram(text, n=None):
    """ Read a diagram in text format. Every line must hold n+1 tokens """
    lines = text.strip().splitlines()
    if not lines:
        raise ParseError("empty diagram")

    rows = []
    for number, line in enumerate(lines, 1):
        tokens = line.split()
        if not tokens:
            raise ParseError("line %d is empty" % number)
        row = []
        for token in tokens:
            row.append(None if token == ZERO_TOKEN else parse_rational(token))
        rows.append(row)

    widths = set(len(row) for row in rows)
    if len(widths) > 1:
        raise ParseError("lines have different numbers of tokens: %s" %
                         ", ".join(str(width) for width in sorted(widths)))
    width = widths.pop()
    if n is not None and width != n + 1:
        raise ParseError("expected %d columns for n=%d, got %d" % (n + 1, n, width))

    try:
        return BettiDiagram.from_rows(rows, n=width - 1)
    except ValidationError as err:
        raise ParseError(str(err)) from err


def format_diagram(diagram):
    """ Write a diagram in text format

    Rows run from 0 to the regularity; the zero diagram is a single row of "-".
    """
    n = diagram.n
    if diagram.is_zero():
        return " ".join([ZERO_TOKEN] * (n + 1))

    if any(j < i for (i, j) in diagram.positions()):
        raise ValidationError("entries below row 0 can't be displayed")

    lines = []
    for r in range(diagram.regularity + 1):
        tokens = []
        for i in range(n + 1):
            value = diagram[(i, i + r)]
            tokens.append(format_rational(value) if value else ZERO_TOKEN)
        lines.append(" ".join(tokens))
    return "\n".join(lines)


def diagram_to_json(diagram):
    """ JSON compatible dict for a diagram, entries sorted by (i, j) """
    return {
        "n": diagram.n,
        "entries": [{"i": i, "j": j, "v": format_rational(value)}
                    for (i, j), value in diagram.items()],
        }


def diagram_from_json(data, n=None):
    """ Build a diagram from a JSON document (a str) or an already decoded dict """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as err:
            raise ParseError("invalid JSON: %s" % err) from err

    try:
        diagram_n = data["n"]
        entries = {}
        for entry in data["entries"]:
            value = entry["v"]
            if isinstance(value, str):
                value = parse_rational(value.strip())
            position = (entry["i"], entry["j"])
            if position in entries:
                raise ParseError("entry (%d, %d) given twice" % position)
            entries[position] = value
    except (KeyError, TypeError) as err:
        raise ParseError("malformed diagram document: %s" % err) from err

    if n is not None and n != diagram_n:
        raise ParseError("document has n=%s, expected %d" % (diagram_n, n))
    try:
        return BettiDiagram(diagram_n, entries)
    except ValidationError as err:
        raise ParseError(str(err)) from err


def read_diagram(text, n=None):
    """ Read a diagram in either format; a document starting with "{" is JSON """
    if text.lstrip().startswith("{"):
        return diagram_from_json(text, n)
    return parse_diagram(text, n)


def dump_json(data):
    """ Deterministic JSON text """
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
