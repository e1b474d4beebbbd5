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
""" Helpers to add command line arguments parsing for diagram sources to argparse.ArgumentParser """

import argparse
from abc import ABC, abstractmethod
from pybetti.utils.gettext_wrapper import gettext as _

#pylint: disable=too-few-public-methods
class AbstractSourceGenerator(ABC):
    """ Abstract class for SourceGenerator.

    SourceGenerator are to be used in argparse.ArgumentParser.add_argument(), with parameter
    'source_generator', when action=CreateSourceAction
    Optionally, it can be used with add_default_source_to_argparse()
    """
    def __init__(self, option_string, optional=False):
        self.option_string = option_string
        self.optional = optional

    @abstractmethod
    def create(self, config):
        """ Return the text of the diagram, based on the parsed command line 'config' """

def add_default_source_to_argparse(parser, source_generator):
    """ Generate the default source_generator to be used if none is specified on command line"""
    assert issubclass(source_generator, AbstractSourceGenerator)
    parser.set_defaults(source_generator=source_generator('', optional=True))

#pylint: disable=too-few-public-methods
class CreateSourceAction(argparse.Action):
    """ Argparse action used to generate the 'source_generator'

    This is the main mechanism to allow the command line to read diagrams from new places """
    def __init__(self, option_strings, dest, **kwargs):
        if 'source_generator' not in kwargs:
            raise KeyError("Missing parameter 'source_generator'")

        assert issubclass(kwargs['source_generator'], AbstractSourceGenerator) and \
            kwargs['source_generator'] is not AbstractSourceGenerator

        self.source_generator = kwargs['source_generator']
        del kwargs['source_generator']

        super().__init__(option_strings, dest, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        source_generator = getattr(namespace, 'source_generator', None)

        if source_generator and not source_generator.optional:
            msg = _("%s not allowed. A diagram was already given with %s")
            raise argparse.ArgumentError(self,
                                         msg % (option_string, source_generator.option_string))

        setattr(namespace,
                'source_generator',
                self.source_generator(option_string, False))

        # Be sure the dest attribute is set (even if nargs is 0)
        setattr(namespace, self.dest, values if self.nargs != 0 else True)
