"""
Jobs of the command line interface.

A :class:`~gaugeforge.cli.jobs.Job` names a command, an action, its
parameters and an optional JSON document. :func:`~gaugeforge.cli.jobs.run`
checks the job, dispatches it to the library and returns a JSON payload and
an exit code. Errors of the library become exit codes: malformed input 2,
precondition violations 3 and truncation overflows 4. A report that is not
ok gives 1.

**Jobs**

* :class:`~gaugeforge.cli.jobs.Job`
* :func:`~gaugeforge.cli.jobs.validate_job`
* :func:`~gaugeforge.cli.jobs.run`
* :func:`~gaugeforge.cli.jobs.exit_code`
* :func:`~gaugeforge.cli.jobs.error_payload`

**Output**

* :func:`~gaugeforge.cli.jobs.render`
* :func:`~gaugeforge.cli.jobs.format_table`
* :data:`~gaugeforge.cli.jobs.SCHEMAS`

----
"""
from __future__ import division, absolute_import
from future.builtins import object
import json
import logging
import time

import numpy as np

from .. import constants
from ..utils import (Report, PreconditionError, SchemaError,
                     TruncationOverflow, binomial)
from ..witt.fields import FiniteField
from ..witt.chainring import ChainRing
from ..witt.vectors import WittRing, ghost_equivalence_report
from ..gauge import core, rigidity
from ..gauge.phi import phi_gauge_from_dict, validate_phi_gauge
from ..gauge.crystal import (crystal_from_dict, hodge_interval,
                             standard_construction, reconstruct_crystal,
                             crystals_conjugate)
from ..gauge.dieudonne import (to_dieudonne, from_dieudonne,
                               validate_dieudonne)
from ..zips.fzip import (fzip_from_dict, validate_fzip, graded_dimensions,
                         zip_gauge_report, gauge_to_fzip)
from ..zips.display import (predisplay_from_dict, display_witness_from_dict,
                            validate_predisplay, validate_display)
from ..zips.perfection import (algebra_from_dict, monomial_algebra,
                               perfect_core, is_perfect,
                               surjective_frobenius_report)
from ..cris import filtrations
from ..cris.model import build_model
from ..cris.point import point_gauge, point_gauge_report, flatness_check
from ..derham.forms import variety_from_dict, de_rham_basis
from ..derham import cohomology
from . import suites

log = logging.getLogger(__name__)

#: Output formats
FORMATS = ('json', 'table')

#: Command -> accepted actions, the first is the default. None means the
#: action is checked by the command itself.
ACTIONS = {
    'witt': ('ghost', 'add', 'mul', 'neg', 'frobenius', 'verschiebung'),
    'gauge': ('validate', 'twist', 'decompose'),
    'crystal': ('roundtrip', 'construct', 'hodge'),
    'dieudonne': ('to',),
    'fzip': ('validate', 'from-gauge'),
    'display': ('validate',),
    'perfection': ('core', 'check'),
    'cris': ('table', 'cartier', 'section', 'stability', 'point'),
    'derham': ('hg', 'check', 'cohomology', 'stability'),
    'suite': None,
    'schema': None,
}

_CONTEXT = {'type': 'object', 'required': ['p', 'n'],
            'properties': {'p': {'type': 'integer'},
                           'd': {'type': 'integer', 'default': 1},
                           'n': {'type': 'integer'},
                           'minpoly': {'type': 'array'}}}

_GAUGE = {'type': 'object',
          'required': ['context', 'interval', 'components', 'f', 'v'],
          'properties': {
              'context': _CONTEXT,
              'interval': {'type': 'array', 'items': {'type': 'integer'},
                           'minItems': 2, 'maxItems': 2},
              'components': {'type': 'array',
                             'description': 'divisors e of each W_e '
                                            'summand, per degree'},
              'f': {'type': 'array', 'description': 'matrices M^r -> '
                                                    'M^(r+1)'},
              'v': {'type': 'array', 'description': 'matrices M^(r+1) -> '
                                                    'M^r'},
              'phi': {'type': 'array', 'description': 'optional matrix '
                                                      'M^b -> M^a'}}}

#: JSON schemas of the documents read with ``--input``
SCHEMAS = {
    'gauge': _GAUGE,
    'phi-gauge': dict(_GAUGE, required=_GAUGE['required'] + ['phi']),
    'crystal': {'type': 'object', 'required': ['rank', 'precision', 'phi'],
                'properties': {'context': _CONTEXT,
                               'rank': {'type': 'integer'},
                               'precision': {'type': 'integer'},
                               'scale': {'type': 'integer', 'default': 0},
                               'phi': {'type': 'array'}}},
    'fzip': {'type': 'object',
             'required': ['context', 'dim', 'interval', 'upper', 'lower',
                          'phi'],
             'properties': {'context': _CONTEXT,
                            'dim': {'type': 'integer'},
                            'interval': {'type': 'array'},
                            'upper': {'type': 'array',
                                      'description': 'generators of C^i'},
                            'lower': {'type': 'array',
                                      'description': 'generators of D_i'},
                            'phi': {'type': 'array'}}},
    'display': {'type': 'object', 'required': ['predisplay'],
                'properties': {
                    'predisplay': {
                        'type': 'object',
                        'required': ['context', 'modules', 'iota', 'alpha',
                                     'frobenius']},
                    'witness': {'type': 'object',
                                'required': ['ranks', 'phi']}}},
    'algebra': {'type': 'object', 'required': ['p', 'constants', 'unit'],
                'properties': {'p': {'type': 'integer'},
                               'constants': {'type': 'array',
                                             'description': 'c[i][j][k] '
                                                            'of e_i e_j'},
                               'unit': {'type': 'array'},
                               'staircase': {'type': 'array'}}},
    'variety': {'type': 'object', 'required': ['p'],
                'properties': {'p': {'type': 'integer'},
                               'd': {'type': 'integer', 'default': 1},
                               'nvars': {'type': 'integer'},
                               'names': {'type': 'array'},
                               'degree': {'type': 'integer'},
                               'equation': {'type': 'string'},
                               'witness': {'type': 'array'}}},
}


class Job(object):
    """
    One request of the command line interface.

    Parameters:

    * command : str
        A key of :data:`~gaugeforge.cli.jobs.ACTIONS`.
    * action : str or None
        None selects the default action of the command.
    * params : dict
        Parameters from the flags. A JSON document read with ``--input``
        is stored under ``'document'``.
    * seed : int
        Seed of every randomized check, echoed in the output.
    * output : str or None
        Path of the output file, None for stdout.
    * fmt : str
        ``'json'`` or ``'table'``.
    * njobs : int
        Number of processes for suites.

    """

    def __init__(self, command, action=None, params=None,
                 seed=constants.DEFAULT_SEED, output=None, fmt='json',
                 njobs=1):
        self.command = command
        self.action = action
        self.params = {} if params is None else dict(params)
        self.seed = seed
        self.output = output
        self.fmt = fmt
        self.njobs = njobs

    def to_dict(self):
        "The job as echoed in the output (the document is left out)."
        params = {k: v for k, v in self.params.items()
                  if k != 'document' and v is not None}
        return {'command': self.command, 'action': self.action,
                'params': params, 'seed': self.seed, 'format': self.fmt}

    def __repr__(self):
        return 'Job({!r}, {!r})'.format(self.command, self.action)


def validate_job(job):
    """
    Check a job before dispatch and fill in the default action.

    Raises :class:`~gaugeforge.utils.SchemaError` on an unknown command,
    action or format, an invalid seed or number of processes.

    Examples:

        >>> job = Job('cris')
        >>> validate_job(job).action
        'table'
        >>> try:
        ...     validate_job(Job('cris', 'plot'))
        ... except SchemaError as error:
        ...     print(str(error).split('.')[0])
        Unknown action 'plot' for cris

    """
    if job.command not in ACTIONS:
        raise SchemaError("Unknown command {!r}. Choose from {}".format(
            job.command, ', '.join(sorted(ACTIONS))))
    actions = ACTIONS[job.command]
    if actions is not None:
        if job.action is None:
            job.action = actions[0]
        elif job.action not in actions:
            raise SchemaError("Unknown action {!r} for {}. Choose from "
                              "{}".format(job.action, job.command,
                                          ', '.join(sorted(actions))))
    if job.fmt not in FORMATS:
        raise SchemaError("Unknown format {!r}".format(job.fmt))
    if not isinstance(job.seed, int) or isinstance(job.seed, bool) or \
            not 0 <= job.seed <= constants.MAX_SEED:
        raise SchemaError("Invalid seed {!r}. Must be an integer in [0, "
                          "{}]".format(job.seed, constants.MAX_SEED))
    if not isinstance(job.njobs, int) or job.njobs < 1:
        raise SchemaError("Invalid number of jobs {!r}".format(job.njobs))
    if not isinstance(job.params, dict):
        raise SchemaError("Parameters must be a JSON object")
    return job


def _integer(params, key, default=None):
    value = params.get(key)
    if value is None:
        if default is None:
            raise SchemaError("Missing parameter {!r}".format(key))
        return default
    if isinstance(value, bool):
        raise SchemaError("Parameter {!r} must be an integer".format(key))
    try:
        return int(value)
    except (TypeError, ValueError):
        raise SchemaError("Parameter {!r} must be an integer, got "
                          "{!r}".format(key, value))


def _document(job):
    document = job.params.get('document')
    if not isinstance(document, dict):
        raise SchemaError("{} {} needs a JSON object from --input".format(
            job.command, job.action))
    return document


def _witt_vector(params, key, witt):
    value = params.get(key)
    if not isinstance(value, (list, tuple)) or len(value) != witt.n:
        raise SchemaError("Parameter {!r} must list {} field codes".format(
            key, witt.n))
    try:
        codes = tuple(int(c) for c in value)
    except (TypeError, ValueError):
        raise SchemaError("Invalid Witt vector {!r}".format(value))
    if any(c < 0 or c >= witt.field.q for c in codes):
        raise SchemaError("Field codes of {!r} must lie in [0, {})".format(
            value, witt.field.q))
    return codes


def _witt(job):
    params = job.params
    field = FiniteField(_integer(params, 'p'), _integer(params, 'd', 1))
    n = _integer(params, 'n')
    if job.action == 'ghost':
        report = ghost_equivalence_report(field, n, params.get('samples'),
                                          job.seed)
        return report, {'context': report.details['context']}
    witt = WittRing(field, n)
    model = ChainRing(field, n)
    a = _witt_vector(params, 'a', witt)
    x = model.from_witt(a)
    if job.action in ('add', 'mul'):
        b = _witt_vector(params, 'b', witt)
        value = getattr(witt, job.action)(a, b)
        image = getattr(model, job.action)(x, model.from_witt(b))
    elif job.action == 'neg':
        value = witt.neg(a)
        image = model.neg(x)
    elif job.action == 'frobenius':
        value = witt.frobenius(a)
        image = model.sigma(x)
    else:
        value = witt.verschiebung(a)
        image = model.mul(model.from_integer(field.p), model.sigma(x, -1))
    expected = model.to_witt(image)
    report = Report('witt ' + job.action, {'context': witt.context})
    report.check(tuple(value) == tuple(expected),
                 {'operation': job.action, 'value': list(value),
                  'model': list(expected)})
    return report, {'context': witt.context, 'value': list(value)}


def _gauge(job):
    document = _document(job)
    phi_gauge = None
    if 'phi' in document:
        phi_gauge = phi_gauge_from_dict(document)
        gauge = phi_gauge.gauge
    else:
        gauge = core.gauge_from_dict(document)
    if job.action == 'twist':
        i = _integer(job.params, 'twist')
        if phi_gauge is None:
            twisted = core.tate_twist(gauge, i)
            report = core.validate_gauge(twisted)
        else:
            twisted = phi_gauge.twisted(i)
            report = validate_phi_gauge(twisted)
        return report, twisted.to_dict()
    if job.action == 'decompose':
        multiplicities, _, iso = rigidity.free_decomposition(gauge)
        report = Report('free decomposition', {'interval':
                                               list(gauge.interval)})
        report.check(iso.is_isomorphism(), {'failed': 'isomorphism'})
        return report, {'multiplicities': {str(i): m for i, m in
                                           sorted(multiplicities.items())}}
    report = Report('gauge', {'interval': list(gauge.interval)})
    if phi_gauge is None:
        report.add(core.validate_gauge(gauge))
    else:
        report.add(validate_phi_gauge(phi_gauge))
    # freeness and exactness are properties, not axioms
    freeness = report.add(rigidity.freeness_report(gauge), propagate=False)
    if gauge.n == 1:
        report.add(rigidity.exactness_report(gauge), propagate=False)
    lower, upper = core.concentration_interval(gauge)
    result = {'concentration': [lower, upper],
              'effective': core.is_effective(gauge),
              'coeffective': core.is_coeffective(gauge),
              'free': freeness.ok,
              'twists': core.effective_twist_range(gauge),
              'table': [{'r': r, 'divisors': list(module.divisors),
                         'length': int(sum(module.divisors))}
                        for r, module in zip(range(gauge.a, gauge.b + 1),
                                             gauge.components)]}
    return report, result


def _crystal_level(params, crystal):
    a, b = hodge_interval(crystal)
    default = max(crystal.normalized().precision - (b - a) - 1, 1)
    return _integer(params, 'n', default)


def _crystal(job):
    crystal = crystal_from_dict(_document(job))
    hodge = list(hodge_interval(crystal))
    if job.action == 'hodge':
        report = Report('hodge', {'hodge': hodge})
        return report, {'hodge': hodge, 'valuations': crystal.valuations,
                        'scale': crystal.scale}
    level = _crystal_level(job.params, crystal)
    if job.action == 'construct':
        phi_gauge = standard_construction(crystal, level)
        report = Report('standard construction', {'level': level,
                                                  'hodge': hodge})
        report.add(validate_phi_gauge(phi_gauge))
        report.add(rigidity.freeness_report(phi_gauge.gauge))
        return report, phi_gauge.to_dict()
    phi_gauge, basis = standard_construction(crystal, level,
                                             certificate=True)
    rebuilt, twist, alpha = reconstruct_crystal(phi_gauge,
                                                certificate=True)
    report = Report('crystal roundtrip', {'level': level, 'hodge': hodge})
    conjugacy = report.add(crystals_conjugate(
        crystal, rebuilt, level,
        certificate=phi_gauge.ring.matmul(basis, alpha)))
    return report, {'twist': twist, 'crystal': rebuilt.to_dict(),
                    'matrix': conjugacy.details.get('matrix')}


def _dieudonne(job):
    phi_gauge = phi_gauge_from_dict(_document(job)).tighten()
    module = to_dieudonne(phi_gauge)
    report = Report('dieudonne module', {'weight': module.weight})
    axioms = report.add(validate_dieudonne(module))
    if module.weight == 1 and axioms.ok:
        back = to_dieudonne(from_dieudonne(module))
        report.check(back.same_as(module), {'failed': 'round trip'})
    return report, module.to_dict()


def _fzip(job):
    document = _document(job)
    if job.action == 'validate':
        fzip = fzip_from_dict(document)
        report = validate_fzip(fzip)
        dims = graded_dimensions(fzip)
        return report, {'table': [{'i': i, 'upper': up, 'lower': down}
                                  for i, (up, down) in sorted(dims.items())]}
    phi_gauge = phi_gauge_from_dict(document)
    report = Report('gauge F-zip')
    if not report.add(zip_gauge_report(phi_gauge)).ok:
        return report, None
    fzip = gauge_to_fzip(phi_gauge)
    report.add(validate_fzip(fzip))
    return report, fzip.to_dict()


def _display(job):
    document = _document(job)
    predisplay = predisplay_from_dict(document.get('predisplay', document))
    if 'witness' in document:
        witness = display_witness_from_dict(predisplay.ring,
                                            document['witness'])
        report = validate_display(predisplay, witness)
    else:
        report = validate_predisplay(predisplay)
    return report, predisplay.to_dict()


def _algebra(job):
    document = _document(job)
    if 'staircase' in document:
        try:
            staircase = [tuple(int(e) for e in m)
                         for m in document['staircase']]
            return monomial_algebra(int(document['p']), staircase)
        except (KeyError, TypeError, ValueError) as error:
            raise SchemaError("Invalid staircase document: {}".format(error))
    return algebra_from_dict(document)


def _perfection(job):
    algebra = _algebra(job)
    if job.action == 'check':
        report = surjective_frobenius_report(algebra)
        return report, {'perfect': is_perfect(algebra), 'dim': algebra.dim}
    core_algebra, embedding = perfect_core(algebra)
    report = Report('perfect core', {'dim': algebra.dim,
                                     'core_dim': core_algebra.dim})
    report.check(is_perfect(core_algebra), {'failed': 'perfect'})
    report.check(perfect_core(core_algebra)[0].dim == core_algebra.dim,
                 {'failed': 'idempotent'})
    report.add(surjective_frobenius_report(algebra))
    return report, {'core': core_algebra.to_dict(),
                    'embedding': embedding.tolist(),
                    'perfect': is_perfect(algebra)}


def _cris(job):
    params = job.params
    p = _integer(params, 'p')
    field = FiniteField(p, _integer(params, 'field_degree', 1))
    if job.action == 'point':
        n = _integer(params, 'n', 1)
        window = (_integer(params, 'rmin', -1), _integer(params, 'rmax', 1))
        point = point_gauge(field, n, window)
        report = point_gauge_report(point, _integer(params, 'samples', 10),
                                    job.seed)
        report.add(flatness_check(field, n, 1, window))
        return report, point.to_dict()
    d = _integer(params, 'd')
    truncation = _integer(params, 'degree', constants.DEFAULT_TRUNCATION)
    if job.action == 'stability':
        report = filtrations.truncation_stability_report(
            field, d, truncation, _integer(params, 'extra', 2))
        return report, {'truncation': truncation}
    model = build_model(field, d, truncation)
    if job.action == 'cartier':
        return filtrations.cartier_report(model), model.to_dict()
    if job.action == 'section':
        report = filtrations.frobenius_section_check(
            model, _integer(params, 'samples', 10), job.seed)
        return report, model.to_dict()
    rows = filtrations.rank_table(model)
    report = Report('rank table', {'model': model.to_dict()})
    for row in rows:
        expected = binomial(row['r'] + d - 1, d - 1)
        report.check(row['j_rank'] == expected and
                     row['f_rank'] == expected,
                     {'index': row['r'], 'expected': expected})
    return report, {'model': model.to_dict(), 'table': rows}


def _variety(job):
    data = job.params.get('variety')
    if data is None:
        data = job.params.get('document')
    if not isinstance(data, dict):
        raise SchemaError("derham needs a variety (--variety or --input)")
    data = dict(data)
    if job.params.get('degree') is not None:
        data['degree'] = _integer(job.params, 'degree')
    return variety_from_dict(data)


def _derham(job):
    variety = _variety(job)
    if job.action == 'check':
        return cohomology.derham_gauge_report(variety), {
            'variety': variety.to_dict()}
    if job.action == 'stability':
        return cohomology.truncation_stability_report(variety), {
            'variety': variety.to_dict()}
    i = _integer(job.params, 'i', 0)
    if job.action == 'cohomology':
        basis = de_rham_basis(variety, i)
        report = Report('de Rham cohomology', {'i': i})
        return report, {'variety': variety.to_dict(), 'rank': len(basis),
                        'basis': [w.describe() for w in basis]}
    window = (_integer(job.params, 'rmin', -1),
              _integer(job.params, 'rmax', variety.dim))
    hg = cohomology.GaugeCohomology(variety, i, window)
    result = hg.to_dict()
    result['table'] = result.pop('ranks')
    return cohomology.gauge_cohomology_report(hg), result


def _suite(job):
    if job.action is None:
        raise SchemaError("suite needs a name. Choose from {}".format(
            ', '.join(sorted(suites.SUITES))))
    report = suites.run_suite(job.action, job.seed, job.njobs,
                              corrupt=bool(job.params.get('corrupt')))
    return report, {'table': [{'bundle': child.name,
                               'status': child.status}
                              for child in report.children]}


def _schema(job):
    if job.action is None:
        return Report('schema'), SCHEMAS
    if job.action not in SCHEMAS:
        raise SchemaError("Unknown schema {!r}. Choose from {}".format(
            job.action, ', '.join(sorted(SCHEMAS))))
    return Report('schema'), {job.action: SCHEMAS[job.action]}


_HANDLERS = {
    'witt': _witt,
    'gauge': _gauge,
    'crystal': _crystal,
    'dieudonne': _dieudonne,
    'fzip': _fzip,
    'display': _display,
    'perfection': _perfection,
    'cris': _cris,
    'derham': _derham,
    'suite': _suite,
    'schema': _schema,
}


def exit_code(status):
    """
    The exit code of a report status.

    >>> exit_code('ok'), exit_code('undecided'), exit_code('overflow')
    (0, 1, 4)

    """
    return {constants.STATUS_OK: constants.EXIT_OK,
            constants.STATUS_VIOLATED: constants.EXIT_VIOLATED,
            constants.STATUS_UNDECIDED: constants.EXIT_VIOLATED,
            constants.STATUS_OVERFLOW: constants.EXIT_OVERFLOW}[status]


def error_payload(job, kind, error):
    return {'job': job.to_dict(), 'status': 'error',
            'error': {'kind': kind, 'message': str(error)}}


def run(job):
    """
    Run a job.

    Parameters:

    * job : Job

    Returns:

    * payload : dict
        ``'job'`` echoes the job and its seed, ``'status'`` is the report
        status (or ``'error'``), ``'report'`` the full report and
        ``'result'`` the computed object.
    * code : int
        The exit code.

    Examples:

        >>> payload, code = run(Job('cris', 'table', {'p': 2, 'd': 2,
        ...                                           'degree': 6}))
        >>> code, payload['status']
        (0, 'ok')
        >>> [row['j_rank'] for row in payload['result']['table']]
        [1, 2, 3, 4, 5, 6]

    """
    start = time.time()
    try:
        validate_job(job)
        report, result = _HANDLERS[job.command](job)
    except SchemaError as error:
        log.debug("Schema error: %s", error)
        return error_payload(job, 'schema', error), constants.EXIT_SCHEMA
    except (PreconditionError, AssertionError) as error:
        log.debug("Precondition violated: %s", error)
        return error_payload(job, 'precondition', error), \
            constants.EXIT_PRECONDITION
    except TruncationOverflow as error:
        log.debug("Truncation overflow: %s", error)
        return error_payload(job, 'overflow', error), constants.EXIT_OVERFLOW
    except ValueError as error:
        log.debug("Invalid value: %s", error)
        return error_payload(job, 'precondition', error), \
            constants.EXIT_PRECONDITION
    log.debug("%s %s finished with status %s in %.3f s", job.command,
              job.action, report.status, time.time() - start)
    payload = {'job': job.to_dict(), 'status': report.status,
               'report': report.to_dict(), 'result': result}
    return payload, exit_code(report.status)


def _plain(obj):
    "Turn numpy scalars, arrays and tuples into JSON types."
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError("{!r} is not JSON serializable".format(obj))


def format_table(rows):
    """
    Align a list of dicts as text columns.

    The key ``'r'`` (or ``'i'``) comes first, the others in sorted order.

    Examples:

        >>> print(format_table([{'r': 0, 'rank': 1}, {'r': 10, 'rank': 2}]))
         r  rank
         0     1
        10     2

    """
    if not rows:
        return ''
    keys = sorted(rows[0])
    for first in ['i', 'r']:
        if first in keys:
            keys.remove(first)
            keys.insert(0, first)
    cells = [[str(key) for key in keys]]
    for row in rows:
        cells.append([json.dumps(row.get(key), default=_plain)
                      if not isinstance(row.get(key), str) else row[key]
                      for key in keys])
    widths = [max(len(line[k]) for line in cells) for k in range(len(keys))]
    return '\n'.join('  '.join(cell.rjust(width)
                               for cell, width in zip(line, widths))
                     for line in cells)


def render(payload, fmt='json'):
    """
    The text written for a payload.

    JSON output uses sorted keys so that identical jobs give identical
    bytes. The table view prints the status, the rows of the result table
    and the witnesses of the report.
    """
    if fmt == 'json':
        return json.dumps(payload, indent=2, sort_keys=True, default=_plain)
    job = payload['job']
    lines = ['{} {}: {}'.format(job['command'], job['action'],
                                payload['status'])]
    if 'error' in payload:
        lines.append('{kind} error: {message}'.format(**payload['error']))
        return '\n'.join(lines)
    result = payload.get('result')
    if isinstance(result, dict) and result.get('table'):
        lines.append(format_table(result['table']))
    for witness in payload['report']['witnesses']:
        lines.append('witness: ' + json.dumps(witness, sort_keys=True,
                                              default=_plain))
    return '\n'.join(lines)
