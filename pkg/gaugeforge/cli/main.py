"""
The ``gaugeforge`` command.

Usage::

    gaugeforge COMMAND [ACTION] [--input FILE|-] [--format json|table]
                       [--seed SEED] [--p P] [--d D] [--n N] [--deg R] ...

Examples::

    gaugeforge cris table --p 2 --d 2 --R 6 --format table
    gaugeforge gauge validate --input fixture.json
    gaugeforge derham hg --variety '{"p": 2, "nvars": 1}' --i 0 --deg 8
    gaugeforge suite paper-invariants --njobs 4

The JSON result goes to stdout (or ``--output``), log messages to stderr.
The exit code is 0 if the report is ok, 1 if it is violated or undecided, 2
on malformed input, 3 on a precondition violation and 4 on a truncation
overflow.

----
"""
from __future__ import division, absolute_import, print_function
import argparse
import io
import json
import logging
import sys

from .. import constants
from ..utils import SchemaError
from . import jobs

log = logging.getLogger(__name__)

#: Flags copied into the job parameters when given
PARAMETERS = ['p', 'd', 'n', 'degree', 'i', 'rmin', 'rmax', 'twist',
              'samples', 'extra', 'a', 'b', 'variety', 'corrupt']


def _parse_args(argv):
    parser = argparse.ArgumentParser(
        prog='gaugeforge',
        description="Frobenius gauges over truncated Witt vectors.")
    parser.add_argument('command', choices=sorted(jobs.ACTIONS),
                        help="What to work on")
    parser.add_argument('action', nargs='?', default=None,
                        help="What to do (the first action of the command "
                             "by default, the suite name for 'suite')")
    parser.add_argument('--input', default=None,
                        help="JSON document to read, '-' for stdin")
    parser.add_argument('--output', default=None,
                        help="File to write the result to (default stdout)")
    parser.add_argument('--format', dest='fmt', default='json',
                        choices=jobs.FORMATS)
    parser.add_argument('--seed', type=int, default=constants.DEFAULT_SEED,
                        help="Seed of randomized checks (echoed)")
    parser.add_argument('--p', type=int, help="The prime")
    parser.add_argument('--d', type=int,
                        help="Field degree, or number of variables for cris")
    parser.add_argument('--n', type=int, help="Witt length")
    parser.add_argument('--deg', '--R', dest='degree', type=int,
                        help="Truncation degree")
    parser.add_argument('--i', type=int, help="Cohomological degree")
    parser.add_argument('--rmin', type=int, help="Lower end of the window")
    parser.add_argument('--rmax', type=int, help="Upper end of the window")
    parser.add_argument('--twist', type=int, help="Tate twist")
    parser.add_argument('--samples', type=int,
                        help="Number of random samples")
    parser.add_argument('--extra', type=int,
                        help="Extra truncation degree for stability checks")
    parser.add_argument('--a', default=None,
                        help="Witt vector as comma separated field codes")
    parser.add_argument('--b', default=None,
                        help="Second Witt vector for add and mul")
    parser.add_argument('--variety', default=None,
                        help="Variety as inline JSON or a JSON file")
    parser.add_argument('--corrupt', action='store_true', default=None,
                        help="Inject the corrupted fixture into a suite")
    parser.add_argument('--njobs', type=int, default=1,
                        help="Processes for suite bundles")
    parser.add_argument('--verbose', '-v', action='store_true',
                        help="Log debug messages to stderr")
    return parser.parse_args(argv)


def _read_json(source, stdin=None):
    """
    Parse JSON from a path, '-' (stdin) or an inline document.

    Raises :class:`~gaugeforge.utils.SchemaError` on unreadable input.

    Examples:

        >>> _read_json('{"p": 2}')
        {'p': 2}

    """
    try:
        if source == '-':
            text = (sys.stdin if stdin is None else stdin).read()
        elif source.lstrip().startswith(('{', '[')):
            text = source
        else:
            with io.open(source, encoding='utf-8') as f:
                text = f.read()
        return json.loads(text)
    except (IOError, OSError) as error:
        raise SchemaError("Cannot read {!r}: {}".format(source, error))
    except ValueError as error:
        raise SchemaError("Invalid JSON in {!r}: {}".format(source, error))


def _codes(text):
    "Comma separated field codes."
    try:
        return [int(c) for c in text.split(',')]
    except ValueError:
        raise SchemaError("Invalid field codes {!r}".format(text))


def build_job(args, stdin=None):
    """
    The :class:`~gaugeforge.cli.jobs.Job` of parsed arguments.

    Reads the ``--input`` document and the ``--variety`` JSON. Raises
    :class:`~gaugeforge.utils.SchemaError` on unreadable input.
    """
    params = {}
    for name in PARAMETERS:
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    for key in ['a', 'b']:
        if key in params:
            params[key] = _codes(params[key])
    if 'variety' in params:
        params['variety'] = _read_json(params['variety'], stdin)
    if args.input is not None:
        params['document'] = _read_json(args.input, stdin)
    return jobs.Job(args.command, args.action, params, args.seed,
                    args.output, args.fmt, args.njobs)


def main(argv=None, stdin=None, stdout=None):
    """
    Run the command line interface and return the exit code.
    """
    args = _parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s:%(name)s: %(message)s', stream=sys.stderr)
    try:
        job = build_job(args, stdin)
    except SchemaError as error:
        job = jobs.Job(args.command, args.action, seed=args.seed,
                       fmt=args.fmt)
        payload = jobs.error_payload(job, 'schema', error)
        code = constants.EXIT_SCHEMA
    else:
        payload, code = jobs.run(job)
    text = jobs.render(payload, args.fmt if args.fmt in jobs.FORMATS
                       else 'json')
    if args.output is None:
        print(text, file=sys.stdout if stdout is None else stdout)
    else:
        with io.open(args.output, 'w', encoding='utf-8') as f:
            f.write(u'{}\n'.format(text))
    if code != constants.EXIT_OK:
        log.info("Exit code %d (status %s)", code, payload['status'])
    return code


if __name__ == '__main__':
    raise SystemExit(main())
