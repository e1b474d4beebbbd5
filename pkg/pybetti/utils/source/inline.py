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
""" Giving a diagram directly on the command line"""

from pybetti.utils.gettext_wrapper import gettext as _
from ._source_argparse import AbstractSourceGenerator, CreateSourceAction

ROW_SEPARATOR = ";"

#pylint: disable=too-few-public-methods
class InlineSourceGenerator(AbstractSourceGenerator):
    """ Source generator returning the text given with --diagram """
    def create(self, config):
        return "\n".join(row.strip() for row in config.inline_diagram.split(ROW_SEPARATOR))


class InlineSource:
    """ Diagram source reading the rows of a diagram from a single argument """

    @staticmethod
    def add_to_argparser(parser):
        """
        Add command line arguments parsing to a argparse.ArgumentParser
        to read the diagram from the command line
        """
        group = parser.add_argument_group(_("command line input"))
        group.add_argument("--diagram",
                           dest='inline_diagram',
                           metavar="ROWS",
                           help=_("Diagram in text format with rows separated by '%s', " +
                                  "e.g. \"4 8 6 -;- 6 8 4\"") % ROW_SEPARATOR,
                           action=CreateSourceAction,
                           source_generator=InlineSourceGenerator)
