"""
Phi-gauges: gauges with a sigma-semilinear map phi : M^(+inf) -> M^(-inf).

* :class:`~gaugeforge.gauge.phi.PhiGauge`
* :func:`~gaugeforge.gauge.phi.validate_phi_gauge`
* :func:`~gaugeforge.gauge.phi.phi_gauge_from_dict`
* :func:`~gaugeforge.gauge.phi.truncate_phi_leq0`
* :func:`~gaugeforge.gauge.phi.is_phi_morphism`
* :func:`~gaugeforge.gauge.phi.phi_gauges_isomorphic`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import logging

from .. import constants
from ..utils import Report, SchemaError, TruncationOverflow
from ..witt import modules
from . import core, morphisms

log = logging.getLogger(__name__)


class PhiGauge(object):
    """
    A gauge with a semilinear map phi : M^b -> M^a of twist 1.

    It is a phi-gauge in the strict sense when phi is bijective.

    Parameters:

    * gauge : Gauge
    * phi : SemilinearMap
        From ``gauge.plus_infinity`` to ``gauge.minus_infinity``.

    """

    def __init__(self, gauge, phi):
        if phi.domain != gauge.plus_infinity or \
                phi.codomain != gauge.minus_infinity:
            raise ValueError("phi must map M^{} to M^{}".format(gauge.b,
                                                                 gauge.a))
        if phi.twist != 1:
            raise ValueError("phi must be sigma-semilinear (twist 1)")
        self.gauge = gauge
        self.phi = phi

    @property
    def ring(self):
        return self.gauge.ring

    @property
    def interval(self):
        return self.gauge.interval

    def is_phi_gauge(self):
        "True if phi is bijective."
        return self.phi.is_bijective()

    def tighten(self):
        """
        The same phi-gauge on the minimal window of its gauge.

        phi is transported along the isomorphisms f^k from the new top and
        v^k onto the old bottom.
        """
        gauge = self.gauge
        tight = gauge.tighten()
        a, b = tight.interval
        up = gauge.f_power(b, gauge.b - b)
        down = gauge.v_power(a, a - gauge.a).inverse()
        phi = down.compose(self.phi.compose(up))
        return PhiGauge(tight, phi)

    def twisted(self, i):
        "The Tate twist M(i) with the same phi."
        return PhiGauge(core.tate_twist(self.gauge, i), self.phi)

    def reduce_mod_p(self):
        gauge = self.gauge.reduce_mod_p()
        phi = modules.SemilinearMap(self.phi.matrix % self.ring.p,
                                    gauge.plus_infinity,
                                    gauge.minus_infinity, 1)
        return PhiGauge(gauge, phi)

    def to_dict(self):
        data = self.gauge.to_dict()
        data['phi'] = self.phi.matrix.tolist()
        return data

    def __repr__(self):
        return 'PhiGauge({!r})'.format(self.gauge)


def phi_gauge_from_dict(data):
    """
    Build a phi-gauge from the gauge JSON form with an extra ``"phi"`` key.

    Raises :class:`~gaugeforge.utils.SchemaError` on malformed input.
    """
    gauge = core.gauge_from_dict(data)
    if 'phi' not in data:
        raise SchemaError("Missing 'phi' matrix")
    matrix = core.matrix_from_json(gauge.ring, data['phi'],
                                   gauge.minus_infinity.rank,
                                   gauge.plus_infinity.rank)
    try:
        return PhiGauge(gauge, modules.SemilinearMap(
            matrix, gauge.plus_infinity, gauge.minus_infinity, 1))
    except ValueError as err:
        raise SchemaError(str(err))


def validate_phi_gauge(phi_gauge):
    """
    Check the gauge relations, that phi is well defined and bijective.
    """
    report = Report('phi-gauge')
    report.add(core.validate_gauge(phi_gauge.gauge))
    report.check(phi_gauge.phi.is_well_defined(), {'map': 'phi',
                                                   'failed': 'defined'})
    report.check(phi_gauge.is_phi_gauge(), {'map': 'phi',
                                            'failed': 'bijective'})
    return report


def truncate_phi_leq0(phi_gauge):
    """
    The truncation M_<=0 with phi composed from M^0 -> M^(+inf) and phi.

    The result need not be a phi-gauge, check
    :meth:`~gaugeforge.gauge.phi.PhiGauge.is_phi_gauge`. It is one exactly
    when f : M^r -> M^(r+1) is bijective for r >= 0.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> R = ChainRing(2, 1)
        >>> for i in [1, -1]:
        ...     G = core.free_gauge(R, i)
        ...     phi = modules.SemilinearMap(R.identity(1), G.plus_infinity,
        ...                                 G.minus_infinity, 1)
        ...     print(i, truncate_phi_leq0(PhiGauge(G, phi)).is_phi_gauge())
        1 True
        -1 False

    """
    gauge = phi_gauge.gauge
    truncated = core.truncate_leq0(gauge).window(min(gauge.a, 0), 0)
    to_top = gauge.f_power(0, max(gauge.b, 0))
    phi = phi_gauge.phi.compose(to_top)
    phi = modules.SemilinearMap(phi.matrix, truncated.plus_infinity,
                                truncated.minus_infinity, 1)
    result = PhiGauge(truncated, phi).tighten()
    if not result.is_phi_gauge():
        log.debug("Truncation of %s is not a phi-gauge", phi_gauge)
    return result


def is_phi_morphism(morphism, source, target):
    """
    True if a gauge morphism commutes with phi.

    The condition is alpha_(-inf) ∘ phi_M = phi_N ∘ alpha_(+inf).
    """
    lo, hi = morphism.window
    left = morphism.at(lo).compose(source.phi)
    right = target.phi.compose(morphism.at(hi))
    return left.equals(right)


def phi_gauges_isomorphic(first, second, limit=constants.MAX_ENUMERATION):
    """
    Decide whether two phi-gauges are isomorphic by exhaustive search.

    Returns:

    * result : True, False or None
        None when the Hom set of the underlying gauges is larger than
        *limit*.
    * witness : GaugeMorphism or None
        An isomorphism when one was found.

    """
    if core.fingerprint(first.gauge) != core.fingerprint(second.gauge):
        return False, None
    try:
        candidates = morphisms.enumerate_morphisms(first.gauge, second.gauge,
                                                   limit)
        for alpha in candidates:
            if alpha.is_isomorphism() and \
                    is_phi_morphism(alpha, first, second):
                return True, alpha
    except TruncationOverflow as err:
        log.info("Phi-gauge isomorphism undecided: %s", err)
        return None, None
    return False, None
