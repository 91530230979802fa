#!/usr/bin/env python3
"""
Setup script for yhkernel, the Yokonuma-Hecke algebra kernel.
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read README for long description
readme_file = Path(__file__).parent / "README.md"
long_description = readme_file.read_text(encoding="utf-8") if readme_file.exists() else ""

# Read requirements (test tooling is not needed at runtime)
requirements_file = Path(__file__).parent / "requirements-prod.txt"
requirements = []
if requirements_file.exists():
    with open(requirements_file) as f:
        requirements = [line.strip() for line in f if line.strip() and not line.startswith('#')]

setup(
    name="yhkernel",
    version="1.0.0",
    description="Exact Yokonuma-Hecke algebras, framed braids and p-adic Markov traces",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["examples", "examples.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    python_requires=">=3.10",
    install_requires=requirements,
    extras_require={
        'test': ['pytest>=7.4.0', 'pytest-cov>=4.1.0', 'hypothesis>=6.80.0'],
    },
    entry_points={
        'console_scripts': [
            'yhkernel=src.main:main',
        ],
    },
    include_package_data=True,
    zip_safe=False,
)
