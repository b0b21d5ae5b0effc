"""
Dieudonne modules of weight i and their relation with phi-gauges.

A phi-gauge concentrated in [a, a + i] gives a Dieudonne module of weight i
on M^a with F = phi f^i and V = v^i phi^-1. In weight 1 this is an
equivalence with a quasi-inverse
:func:`~gaugeforge.gauge.dieudonne.from_dieudonne`. In higher weight the
functor forgets the middle components,
:func:`~gaugeforge.gauge.dieudonne.find_forgotten_pair` finds two
non-isomorphic phi-gauges with the same Dieudonne module.

* :class:`~gaugeforge.gauge.dieudonne.DieudonneModule`
* :func:`~gaugeforge.gauge.dieudonne.validate_dieudonne`
* :func:`~gaugeforge.gauge.dieudonne.to_dieudonne`
* :func:`~gaugeforge.gauge.dieudonne.from_dieudonne`
* :func:`~gaugeforge.gauge.dieudonne.find_forgotten_pair`
* :func:`~gaugeforge.gauge.dieudonne.random_dieudonne`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import itertools
import logging

from ..utils import Report, PreconditionError
from ..witt import modules, linalg
from ..witt.modules import WnModule
from . import core, phi as phimod

log = logging.getLogger(__name__)


class DieudonneModule(object):
    """
    A module with a sigma-linear F and a sigma^-1-linear V.

    Parameters:

    * module : WnModule
    * frobenius : SemilinearMap
        F, twist 1.
    * verschiebung : SemilinearMap
        V, twist -1.
    * weight : int
        i >= 1 with FV = VF = p^i.

    """

    def __init__(self, module, frobenius, verschiebung, weight=1):
        assert weight >= 1, "Invalid weight {}".format(weight)
        for mapping, twist in [(frobenius, 1), (verschiebung, -1)]:
            if mapping.domain != module or mapping.codomain != module or \
                    mapping.twist != twist:
                raise ValueError(
                    "{} is not an endomorphism of twist {}".format(
                        mapping, twist))
        self.module = module
        self.frobenius = frobenius
        self.verschiebung = verschiebung
        self.weight = weight

    @property
    def ring(self):
        return self.module.ring

    def same_as(self, other):
        return (self.weight == other.weight and self.module == other.module
                and self.frobenius.equals(other.frobenius) and
                self.verschiebung.equals(other.verschiebung))

    def to_dict(self):
        return {'weight': self.weight,
                'module': list(self.module.divisors),
                'F': self.frobenius.matrix.tolist(),
                'V': self.verschiebung.matrix.tolist()}

    def __repr__(self):
        return 'DieudonneModule({}, weight={})'.format(
            list(self.module.divisors), self.weight)


def validate_dieudonne(dieudonne):
    """
    Check that F and V are well defined and FV = VF = p^i.
    """
    ring = dieudonne.ring
    report = Report('dieudonne', {'weight': dieudonne.weight})
    F, V = dieudonne.frobenius, dieudonne.verschiebung
    report.check(F.is_well_defined(), {'map': 'F', 'failed': 'defined'})
    report.check(V.is_well_defined(), {'map': 'V', 'failed': 'defined'})
    power = modules.scalar_map(dieudonne.module,
                               ring.p_power(dieudonne.weight))
    report.check(F.compose(V).equals(power), {'relation': 'FV'})
    report.check(V.compose(F).equals(power), {'relation': 'VF'})
    return report


def to_dieudonne(phi_gauge):
    """
    The Dieudonne module of a phi-gauge stored on [a, a + i], i >= 1.

    Raises :class:`~gaugeforge.utils.PreconditionError` if phi is not
    bijective or the window has length zero.
    """
    gauge = phi_gauge.gauge
    a, b = gauge.interval
    if b == a:
        raise PreconditionError("Weight zero: store the gauge on [a, a + i]")
    if not phi_gauge.is_phi_gauge():
        raise PreconditionError("phi is not bijective")
    weight = b - a
    frobenius = phi_gauge.phi.compose(gauge.f_power(a, weight))
    verschiebung = gauge.v_power(b, weight).compose(phi_gauge.phi.inverse())
    return DieudonneModule(gauge.minus_infinity, frobenius, verschiebung,
                           weight)


def from_dieudonne(dieudonne):
    """
    The phi-gauge on [-1, 0] of a Dieudonne module of weight 1.

    M^-1 is the module itself, M^0 is its sigma twisted copy with phi the
    identity, f = sigma^-1(F) and v = V.

    Raises :class:`~gaugeforge.utils.PreconditionError` if the axioms fail.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> R = ChainRing(3, 2)
        >>> M = WnModule.free(R, 1)
        >>> D = DieudonneModule(M, modules.scalar_map(M, 3).compose(
        ...     modules.SemilinearMap(R.identity(1), M, M, 1)),
        ...     modules.SemilinearMap(R.identity(1), M, M, -1))
        >>> G = from_dieudonne(D)
        >>> int(G.gauge.f(-1).matrix[0, 0, 0])
        3
        >>> to_dieudonne(G).same_as(D)
        True

    """
    if dieudonne.weight != 1:
        raise PreconditionError("Only weight 1 Dieudonne modules come from "
                                "gauges on [-1, 0]")
    report = validate_dieudonne(dieudonne)
    if not report.ok:
        raise PreconditionError("Dieudonne axioms fail: {}".format(
            report.witnesses))
    ring = dieudonne.ring
    module = dieudonne.module
    f = modules.SemilinearMap(ring.sigma(dieudonne.frobenius.matrix, -1),
                              module, module)
    v = modules.SemilinearMap(dieudonne.verschiebung.matrix, module, module)
    gauge = core.Gauge(ring, (-1, 0), [module, module], [f], [v])
    phi = modules.SemilinearMap(ring.identity(module.rank), module, module, 1)
    return phimod.PhiGauge(gauge, phi)


def _rank_one_k_gauges(ring, weight):
    "All rank one phi-gauges over k on [0, weight] with phi the identity."
    module = WnModule.free(ring, 1)
    phi = modules.SemilinearMap(ring.identity(1), module, module, 1)
    steps = [(x, y) for x in range(ring.field.q) for y in range(ring.field.q)
             if ring.field.mul(x, y) == 0]
    for choice in itertools.product(steps, repeat=weight):
        f_maps = [modules.scalar_map(module, ring.lift(x)) for x, _ in choice]
        v_maps = [modules.scalar_map(module, ring.lift(y)) for _, y in choice]
        gauge = core.Gauge(ring, (0, weight), [module]*(weight + 1),
                           f_maps, v_maps)
        yield phimod.PhiGauge(gauge, phi)


def find_forgotten_pair(ring, weight=2):
    """
    Two non-isomorphic phi-gauges with the same Dieudonne module.

    Searches the rank one phi-gauges over k on [0, weight]. Returns None if
    there is no such pair (weight 1).
    """
    if ring.n != 1:
        raise PreconditionError("The search runs over k")
    seen = []
    for candidate in _rank_one_k_gauges(ring, weight):
        dieudonne = to_dieudonne(candidate)
        for other, other_dieudonne in seen:
            if dieudonne.same_as(other_dieudonne) and \
                    core.fingerprint(candidate.gauge) != \
                    core.fingerprint(other.gauge):
                log.debug("Forgotten pair %s and %s", other, candidate)
                return other, candidate
        seen.append((candidate, dieudonne))
    return None


def random_dieudonne(ring, rank, rng):
    """
    A random Dieudonne module of weight 1 on W_n^rank.

    F = A diag(p^e) B sigma with A, B invertible and e_i in {0, 1}, and
    V = sigma^-1(B^-1 diag(p^(1 - e)) A^-1) sigma^-1, so FV = VF = p.
    *rng* is a :class:`numpy.random.RandomState`.

    Examples:

        >>> from gaugeforge.utils import random_state
        >>> from gaugeforge.witt.chainring import ChainRing
        >>> D = random_dieudonne(ChainRing(2, 2), 2, random_state(0))
        >>> validate_dieudonne(D).ok
        True

    """
    module = WnModule.free(ring, rank)
    exps = [rng.randint(0, 2) for _ in range(rank)]
    left = modules.random_invertible(ring, rank, rng)
    right = modules.random_invertible(ring, rank, rng)
    frobenius = ring.matmul(left, ring.matmul(
        ring.diagonal([ring.p_power(e) for e in exps]), right))
    verschiebung = ring.matmul(linalg.inverse(ring, right), ring.matmul(
        ring.diagonal([ring.p_power(1 - e) for e in exps]),
        linalg.inverse(ring, left)))
    return DieudonneModule(
        module, modules.SemilinearMap(frobenius, module, module, 1),
        modules.SemilinearMap(ring.sigma(verschiebung, -1), module, module,
                              -1))
