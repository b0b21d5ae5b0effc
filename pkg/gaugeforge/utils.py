"""
Miscellaneous utilities shared by all subpackages.

**Errors**

* :class:`~gaugeforge.utils.PreconditionError`: input outside the domain of an
  operation
* :class:`~gaugeforge.utils.SchemaError`: malformed JSON input
* :class:`~gaugeforge.utils.TruncationOverflow`: a result leaves a truncated
  model
* :class:`~gaugeforge.utils.ImplementationBug`: an identity that must hold by
  construction failed

**Reports**

* :class:`~gaugeforge.utils.Report`: outcome of a property checker

**Arithmetic**

* :func:`~gaugeforge.utils.binomial`
* :func:`~gaugeforge.utils.valuation`
* :func:`~gaugeforge.utils.inverse_mod`
* :func:`~gaugeforge.utils.compositions`
* :func:`~gaugeforge.utils.random_state`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import copy as cp

import numpy
import scipy.special

from . import constants


class PreconditionError(ValueError):
    """
    Raised when an operation is called outside of its domain.
    """
    pass


class SchemaError(ValueError):
    """
    Raised when a JSON document does not follow the expected schema.
    """
    pass


class TruncationOverflow(OverflowError):
    """
    Raised when a computation would leave a truncated model.
    """
    pass


class ImplementationBug(RuntimeError):
    """
    Raised when an identity that holds by construction is found violated.
    """
    pass


class Report(object):
    """
    The outcome of a property checker.

    A report starts with status ``'ok'``. Recording a witness with
    :meth:`~gaugeforge.utils.Report.violate` switches it to ``'violated'``.
    Sub-reports can be attached with :meth:`~gaugeforge.utils.Report.add` and
    their status propagates to the parent.

    Parameters:

    * name : str
        What was checked.
    * details : dict
        Extra information to carry along (counts, ranks, etc).

    Examples:

        >>> report = Report('relation')
        >>> report.ok
        True
        >>> report.violate({'index': 2})
        >>> report.status
        'violated'
        >>> report.witnesses
        [{'index': 2}]

    """

    _severity = {constants.STATUS_OK: 0,
                 constants.STATUS_UNDECIDED: 1,
                 constants.STATUS_VIOLATED: 2,
                 constants.STATUS_OVERFLOW: 3}

    def __init__(self, name, details=None):
        self.name = name
        self.status = constants.STATUS_OK
        self.witnesses = []
        self.children = []
        if details is None:
            self.details = {}
        else:
            self.details = details

    @property
    def ok(self):
        return self.status == constants.STATUS_OK

    def _escalate(self, status):
        if self._severity[status] > self._severity[self.status]:
            self.status = status

    def violate(self, witness):
        "Record a counterexample and mark the report as violated."
        self.witnesses.append(witness)
        self._escalate(constants.STATUS_VIOLATED)

    def undecided(self, witness):
        "Record a case that could not be decided."
        self.witnesses.append(witness)
        self._escalate(constants.STATUS_UNDECIDED)

    def overflow(self, witness):
        "Record a truncation overflow."
        self.witnesses.append(witness)
        self._escalate(constants.STATUS_OVERFLOW)

    def add(self, child, propagate=True):
        """
        Attach a sub-report. Returns the child for chaining.

        With *propagate* False the child is informational and its status
        does not reach the parent.
        """
        self.children.append(child)
        if propagate:
            self._escalate(child.status)
        return child

    def check(self, condition, witness):
        """
        Record *witness* as a violation if *condition* is false.

        Returns *condition* so calls can be used in expressions.
        """
        if not condition:
            self.violate(witness)
        return bool(condition)

    def violated_indices(self, key='index'):
        "The values of *key* over all witnesses that carry it."
        return [w[key] for w in self.witnesses
                if isinstance(w, dict) and key in w]

    def to_dict(self):
        "A JSON serializable view of the report (children sorted by name)."
        return {'name': self.name,
                'status': self.status,
                'witnesses': cp.deepcopy(self.witnesses),
                'details': cp.deepcopy(self.details),
                'children': [c.to_dict() for c in
                             sorted(self.children, key=lambda c: c.name)]}

    def __repr__(self):
        return 'Report({!r}, status={!r}, witnesses={})'.format(
            self.name, self.status, len(self.witnesses))


def binomial(n, k):
    """
    Exact binomial coefficient, zero outside of 0 <= k <= n.

    >>> binomial(5, 2)
    10
    >>> binomial(3, 4)
    0

    """
    if k < 0 or n < 0 or k > n:
        return 0
    return int(scipy.special.comb(n, k, exact=True))


def factorial(n):
    "Exact factorial as a Python integer."
    return int(scipy.special.factorial(n, exact=True))


def valuation(value, p):
    """
    The p-adic valuation of an integer. Zero has valuation ``None``.

    >>> valuation(24, 2)
    3
    >>> valuation(0, 3) is None
    True

    """
    if value == 0:
        return None
    value = abs(value)
    count = 0
    while value % p == 0:
        value //= p
        count += 1
    return count


def inverse_mod(a, m):
    """
    Inverse of *a* modulo *m*.

    Raises ``ValueError`` if *a* is not invertible.

    >>> inverse_mod(3, 8)
    3

    """
    a = a % m
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q*r1
        s0, s1 = s1, s0 - q*s1
    if r0 != 1:
        raise ValueError("{} is not invertible modulo {}".format(a, m))
    return s0 % m


def compositions(total, parts):
    """
    All tuples of *parts* non-negative integers summing to *total*.

    Ordered lexicographically from the largest first entry down.

    >>> list(compositions(2, 2))
    [(2, 0), (1, 1), (0, 2)]

    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def random_state(seed=None):
    """
    A :class:`numpy.random.RandomState` seeded with *seed*.

    Use the same seed to get the same pseudo-random sequence. If *seed* is
    None, a different sequence is produced every time.
    """
    return numpy.random.RandomState(seed)
