#!/usr/bin/env python3
# Copyright (C) 2026 The bnck authors
#
# This file is part of bnck.
#
# bnck is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# bnck is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with bnck.  If not, see <http://www.gnu.org/licenses/>.

from setuptools import setup
import os

SCRIPT_DIR = os.path.dirname(os.path.realpath(__file__))
DESCRIPTION_URL = os.path.join(SCRIPT_DIR, "misc/pypi-description.rst")
with open(DESCRIPTION_URL, encoding="utf8") as f:
    LONG_DESCRIPTION = f.read()

setup(
    name="bnck",
    version="0.1.0-dev",
    description=("Exact verification of Bn Courant algebroids and "
                 "generalized pseudo-Kahler structures on Lie groups."),
    long_description=LONG_DESCRIPTION,
    author="The bnck authors",
    license="GNU Lesser General Public License v3 or later (LGPLv3+)",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: "
        "GNU Lesser General Public License v3 or later (LGPLv3+)",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
    keywords="courant-algebroid lie-group generalized-geometry kahler",
    packages=["bnck"],
    python_requires=">=3.8",
    install_requires=["sympy>=1.12", "numpy"],
    extras_require={"tests": ["hypothesis"]},
    entry_points={"console_scripts": ["bnck = bnck.cli:main"]},
)
