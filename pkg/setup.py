"""
Package and install gaugeforge.
"""
from __future__ import absolute_import
from setuptools import setup, find_packages

# PACKAGE METADATA
# #############################################################################
NAME = 'gaugeforge'
FULLNAME = 'gaugeforge'
DESCRIPTION = "Exact computations with Frobenius gauges over Witt vectors"
AUTHOR = "The gaugeforge developers"
AUTHOR_EMAIL = 'gaugeforge@users.noreply.github.com'
MAINTAINER = AUTHOR
MAINTAINER_EMAIL = AUTHOR_EMAIL
VERSION = '0.1.0'
with open("README.rst") as f:
    LONG_DESCRIPTION = ''.join(f.readlines())
PACKAGES = find_packages(exclude=['doc', 'ci'])
LICENSE = "BSD License"
URL = "https://github.com/gaugeforge/gaugeforge"
PLATFORMS = "Any"
ENTRY_POINTS = {
    'console_scripts': ['gaugeforge = gaugeforge.cli.main:main'],
}
CLASSIFIERS = [
    "Development Status :: 3 - Alpha",
    "Intended Audience :: Science/Research",
    "Intended Audience :: Education",
    "Topic :: Scientific/Engineering :: Mathematics",
    "Programming Language :: Python :: 3",
    "License :: OSI Approved :: {}".format(LICENSE),
]
KEYWORDS = 'witt-vectors p-adic crystals gauges dieudonne-modules f-zips'

# DEPENDENCIES
# #############################################################################
INSTALL_REQUIRES = [
    'numpy',
    'scipy',
    'numba',
    'future',
    'sympy',
]

if __name__ == '__main__':
    setup(name=NAME,
          fullname=FULLNAME,
          description=DESCRIPTION,
          long_description=LONG_DESCRIPTION,
          version=VERSION,
          author=AUTHOR,
          author_email=AUTHOR_EMAIL,
          maintainer=MAINTAINER,
          maintainer_email=MAINTAINER_EMAIL,
          license=LICENSE,
          url=URL,
          platforms=PLATFORMS,
          packages=PACKAGES,
          entry_points=ENTRY_POINTS,
          classifiers=CLASSIFIERS,
          keywords=KEYWORDS,
          install_requires=INSTALL_REQUIRES)
