#!/usr/bin/python
# vim: set fileencoding=utf-8 :
# This file is part of PYBETTI
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
from setuptools import setup

setup(name="PYBETTI",
      version="0.1.0",
      description='Exact Boij-Soderberg computations on Betti diagrams',
      author='The PYBETTI authors',
      license='MIT',
      python_requires='>=3.9',
      install_requires=[
          "sympy",
      ],
      packages=["pybetti",
                "pybetti.utils",
                "pybetti.utils.source",
              ],
      entry_points={
          "console_scripts": [
              "pybetti=pybetti.cli:main",
          ],
      },
      zip_safe=False)
