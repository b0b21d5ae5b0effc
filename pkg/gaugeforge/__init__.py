"""
The ``gaugeforge`` package contains subpackages for exact computations with
Frobenius gauges over truncated Witt vectors of finite fields.

* :mod:`~gaugeforge.witt`: Witt vectors, chain rings and their modules
* :mod:`~gaugeforge.gauge`: gauges, phi-gauges, crystals and Dieudonne
  modules
* :mod:`~gaugeforge.zips`: F-zips, displays and perfections
* :mod:`~gaugeforge.cris`: the divided power model of crystalline
  cohomology
* :mod:`~gaugeforge.derham`: the de Rham gauge of affine varieties
* :mod:`~gaugeforge.cli`: the ``gaugeforge`` command and its suites

See the API reference for each subpackage for a list of all functions and
classes defined by it.
"""
from __future__ import absolute_import
import logging

__version__ = '0.1.0'

logging.getLogger(__name__).addHandler(logging.NullHandler())


def test(doctest=True, verbose=False, coverage=False):
    """
    Run the test suite of gaugeforge.

    Uses `py.test <http://pytest.org/>`__ to discover and run the tests.

    Parameters:

    * doctest : bool
        If ``True``, will run the doctests as well (code examples that start
        with a ``>>>`` in the docs).
    * verbose : bool
        If ``True``, will print extra information during the test run.
    * coverage : bool
        If ``True``, will run test coverage analysis on the code as well.
        Requires ``pytest-cov``.

    Raises:

    * ``AssertionError`` if pytest returns a non-zero error code indicating
      that some tests have failed.

    """
    import pytest
    args = []
    if verbose:
        args.append('-v')
    if coverage:
        args.append('--cov=gaugeforge')
        args.append('--cov-report=term-missing')
    if doctest:
        args.append('--doctest-modules')
    args.append('--pyargs')
    args.append('gaugeforge')
    status = pytest.main(args)
    assert status == 0, "Some tests have failed."
