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
""" Various pre-defined sources to read a diagram from """
from importlib import import_module

#expose some interesting objects to caller
from ._source_argparse import add_default_source_to_argparse, AbstractSourceGenerator, \
    CreateSourceAction

def _import_sources():
    """ Load all (supported) modules in this package declaring a diagram source"""

    def looks_like_source(what):
        """ heuristic to tell if an object is a Source class """

        # We want to check 'what' is exactly a class, thus the use of unidiomatic type()
        # instead of isinstance()
        # pylint: disable=unidiomatic-typecheck
        return type(what) == type and \
               callable(what) and \
               hasattr(what, 'add_to_argparser')

    source_classes = []
    for module_name in [
            "file",
            "inline"]:
        try:
            module = import_module("." + module_name, __package__)
            for attr_name in dir(module):
                if attr_name.startswith('__'):
                    continue
                attr = getattr(module, attr_name)
                if looks_like_source(attr):
                    source_classes.append(attr)
        except ImportError:
            pass # ignore import error and assume user does not have the required dependencies
    return source_classes

SOURCE_CLASSES = _import_sources()

def add_all_sources_to_argparse(parser, default_source_generator=None):
    """
    Add command line arguments parsing to a argparse.ArgumentParser
    to read a diagram from any supported source
    """

    if default_source_generator:
        add_default_source_to_argparse(parser, default_source_generator)

    for source_class in SOURCE_CLASSES:
        method = getattr(source_class, "add_to_argparser")
        if method:
            assert callable(method) # Also assume staticmethod
            method(parser)
