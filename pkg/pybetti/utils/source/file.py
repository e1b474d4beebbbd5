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
""" Reading a diagram from a plain file"""

from argparse import FileType
from pybetti.utils.gettext_wrapper import gettext as _
from ._source_argparse import AbstractSourceGenerator, CreateSourceAction

#pylint: disable=too-few-public-methods
class FileSourceGenerator(AbstractSourceGenerator):
    """ Source generator reading the file given with --file """
    def create(self, config):
        with config.input_file as input_file:
            return input_file.read()


class FileSource:
    """ Diagram source reading a text or JSON diagram from a plain file """

    @staticmethod
    def add_to_argparser(parser):
        """
        Add command line arguments parsing to a argparse.ArgumentParser
        to read the diagram from a file
        """
        group = parser.add_argument_group(_("plain file input"))
        group.add_argument("--file",
                           type=FileType("r", encoding="utf-8"),
                           dest='input_file',
                           help=_("Read the diagram from a plain file, in text or JSON format"),
                           action=CreateSourceAction,
                           source_generator=FileSourceGenerator)
