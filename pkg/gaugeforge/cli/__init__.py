"""
The ``gaugeforge`` command line interface.

* :mod:`~gaugeforge.cli.main`: argument parsing and the ``main`` entry point
* :mod:`~gaugeforge.cli.jobs`: jobs, dispatch to the library and output
* :mod:`~gaugeforge.cli.suites`: the named acceptance suites and their
  bundles
"""
