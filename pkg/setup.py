# -*- coding: utf-8 -*-

from setuptools import setup, find_packages
import pathlib

here = pathlib.Path(__file__).parent.resolve()

long_description = (here / 'README.md').read_text(encoding='utf-8')


setup(
    name="congruencebases",
    version="0.1.0",
    description="Bases of solutions for linear congruences",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=['tests', 'examples']),
    python_requires=">=3.8",
    install_requires=[
        "lark>=1.1.0",
        "numpy>=1.21.4",
        "matplotlib>=3.5.0",
    ],
    extras_require={
        "test": ["pytest>=7.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["congruencebases=congruencebases.cli:main"],
    },
)
