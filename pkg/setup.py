# setup.py

from setuptools import setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="posalg",
    version="0.1.0",
    description="Exact workbench for positive 2-algebras, involutive bialgebras and their dilations",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=["posalg"],
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.24.0",
        "sympy>=1.12",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "black>=23.0.0",
            "flake8>=6.0.0",
        ],
    },
    entry_points={"console_scripts": ["posalg = posalg.cli:main"]},
    keywords="bialgebra, hecke algebra, inverse semigroup, positivity, exact arithmetic",
)
