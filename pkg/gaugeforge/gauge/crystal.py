"""
Virtual crystals and their phi-gauges.

A virtual crystal is a lattice M = W^r with a sigma-semilinear map
phi = p^s Phi sigma, where Phi is an r x r matrix over W_N that is
invertible after inverting p. It is stored at finite precision N. Its gauge
is M^r = {m in M : phi(m) in p^r M} with f multiplication by p and v the
inclusion, and phi_r sends x in M^r to p^(-r) phi(x).

**Crystals**

* :class:`~gaugeforge.gauge.crystal.VirtualCrystal`
* :func:`~gaugeforge.gauge.crystal.crystal_from_dict`
* :func:`~gaugeforge.gauge.crystal.random_crystal`
* :func:`~gaugeforge.gauge.crystal.hodge_interval`

**Functors**

* :func:`~gaugeforge.gauge.crystal.standard_construction`
* :func:`~gaugeforge.gauge.crystal.reconstruct_crystal`

**Comparison**

* :func:`~gaugeforge.gauge.crystal.crystals_conjugate`
* :func:`~gaugeforge.gauge.crystal.lattice_component`: brute force M^r

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import itertools
import logging
import warnings

import numpy as np

from .. import constants
from ..utils import Report, PreconditionError, SchemaError
from ..witt import linalg, modules
from ..witt.chainring import ChainRing
from ..witt.modules import WnModule
from . import core, morphisms, phi as phimod, rigidity

log = logging.getLogger(__name__)


class VirtualCrystal(object):
    """
    A lattice with phi = p^scale Phi sigma at precision N.

    Parameters:

    * ring : ChainRing
        W_N(F_q), N is the precision.
    * matrix : array (rank, rank, d)
        Phi.
    * scale : int
        The power of p in front of Phi (may be negative).

    Raises :class:`~gaugeforge.utils.PreconditionError` if Phi is singular
    at precision N.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> R = ChainRing(2, 4)
        >>> C = VirtualCrystal(R, R.from_integers([[0, 2], [1, 0]]))
        >>> hodge_interval(C)
        (0, 1)

    """

    def __init__(self, ring, matrix, scale=0):
        matrix = np.asarray(matrix, dtype=np.int64) % ring.modulus
        assert matrix.ndim == 3 and matrix.shape[0] == matrix.shape[1], \
            "Phi must be a square matrix"
        self.ring = ring
        self.matrix = matrix
        self.scale = int(scale)
        self.rank = matrix.shape[0]
        u, vals, v, uinv = linalg.smith(ring, matrix)
        if len(vals) < self.rank:
            raise PreconditionError(
                "Phi is singular at precision {}".format(ring.n))
        self._smith = (u, vals, v, uinv)

    @property
    def precision(self):
        return self.ring.n

    @property
    def valuations(self):
        "Valuations of the elementary divisors of Phi."
        return list(self._smith[1])

    def normalized(self):
        """
        The same crystal with the content of Phi moved into the scale.

        Dividing Phi by p^e loses e digits of precision.
        """
        e = min(self.valuations) if self.rank else 0
        if e == 0:
            return self
        ring = ChainRing(self.ring.field, self.ring.n - e)
        matrix = self.matrix // self.ring.p**e
        return VirtualCrystal(ring, matrix % ring.modulus, self.scale + e)

    def multiplied(self, i):
        "The crystal with phi replaced by p^i phi."
        return VirtualCrystal(self.ring, self.matrix, self.scale + i)

    def apply(self, x):
        """
        Phi sigma(x) for a lattice vector (the factor p^scale is left out).
        """
        return self.ring.matvec(self.matrix, self.ring.sigma(x))

    def to_dict(self):
        context = self.ring.field.to_dict()
        return {'context': context, 'rank': self.rank,
                'precision': self.precision, 'scale': self.scale,
                'phi': self.matrix.tolist()}

    def __repr__(self):
        return 'VirtualCrystal(rank={}, precision={}, scale={})'.format(
            self.rank, self.precision, self.scale)


def crystal_from_dict(data):
    """
    Read a crystal from {"context", "rank", "precision", "phi", "scale"}.

    The context carries p, d and the defining polynomial. Raises
    :class:`~gaugeforge.utils.SchemaError` on malformed input.
    """
    try:
        context = dict(data.get('context', {'p': data.get('p', 2)}))
        context['n'] = int(data['precision'])
        rank = int(data['rank'])
        scale = int(data.get('scale', 0))
        rows = data['phi']
    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError("Invalid crystal document: {}".format(err))
    ring = core.ring_from_context(context)
    matrix = core.matrix_from_json(ring, rows, rank, rank)
    return VirtualCrystal(ring, matrix, scale)


def random_crystal(field, precision, rank, rng, top=2):
    """
    A random crystal Phi = A diag(p^e) B with A, B invertible, e_0 = 0 and
    the other e_i drawn from 0, ..., *top*.

    *rng* is a :class:`numpy.random.RandomState`.
    """
    ring = ChainRing(field, precision)
    exps = [0] + [rng.randint(0, top + 1) for _ in range(rank - 1)]
    diag = ring.diagonal([ring.p_power(e) for e in exps])
    left = modules.random_invertible(ring, rank, rng)
    right = modules.random_invertible(ring, rank, rng)
    return VirtualCrystal(ring, ring.matmul(left, ring.matmul(diag, right)))


def hodge_interval(crystal):
    """
    The minimal (a, b) with p^b M ⊆ phi(M) ⊆ p^a M.
    """
    vals = crystal.valuations
    if not vals:
        return (crystal.scale, crystal.scale)
    return (crystal.scale + min(vals), crystal.scale + max(vals))


def _check_precision(crystal, level):
    a, b = hodge_interval(crystal)
    effective = crystal.normalized().precision
    needed = level + (b - a) + 1
    if effective < needed:
        raise PreconditionError(
            "Precision {} is too low for level {} and Hodge interval "
            "[{}, {}]: need {}".format(effective, level, a, b, needed))


def standard_construction(crystal, level, certificate=False):
    """
    The phi-gauge of a virtual crystal at level n.

    With U Phi V = diag(p^e_i), the lattice basis sigma^-1(V) splits every
    M^r as the sum of the p^c_i(r) W with c_i(r) = max(r - s - e_i, 0).

    Parameters:

    * crystal : VirtualCrystal
    * level : int
        The length n of the gauge.
    * certificate : bool
        If True, also return sigma^-1(V) reduced to W_n, the basis of M in
        which M^a has standard coordinates.

    Raises :class:`~gaugeforge.utils.PreconditionError` when the precision
    contract N >= n + (b - a) + 1 fails.
    """
    _check_precision(crystal, level)
    source = crystal.ring
    u, vals, v, uinv = crystal._smith
    ring = ChainRing(source.field, level)
    s = crystal.scale
    a, b = hodge_interval(crystal)
    module = WnModule.free(ring, crystal.rank)

    def depth(i, r):
        return max(r - s - vals[i], 0)

    f_maps, v_maps = [], []
    for r in range(a, b):
        steps = [depth(i, r + 1) - depth(i, r) for i in range(crystal.rank)]
        f_maps.append(modules.SemilinearMap(
            ring.diagonal([ring.p_power(1 - t) for t in steps]),
            module, module))
        v_maps.append(modules.SemilinearMap(
            ring.diagonal([ring.p_power(t) for t in steps]), module, module))
    gauge = core.Gauge(ring, (a, b), [module]*(b - a + 1), f_maps, v_maps)
    v_inv = linalg.inverse(source, v)
    matrix = source.matmul(source.sigma(v_inv, -1), uinv) % ring.modulus
    result = phimod.PhiGauge(gauge, modules.SemilinearMap(matrix, module,
                                                          module, 1))
    log.debug("Standard construction on [%d, %d] at level %d", a, b, level)
    if certificate:
        return result, source.sigma(v, -1) % ring.modulus
    return result


def reconstruct_crystal(phi_gauge, precision=None, certificate=False):
    """
    A virtual crystal whose standard construction is the given phi-gauge.

    With L = M^a and the free decomposition alpha of the gauge, the crystal
    is phi o f^(b-a) written in the basis alpha_a, with scale a.

    Parameters:

    * phi_gauge : PhiGauge
        With free underlying gauge.
    * precision : int or None
        The precision N of the crystal (default n + (b - a) + 1).
    * certificate : bool
        If True, also return alpha_a.

    Returns:

    * crystal : VirtualCrystal
    * twist : int
        The scale a. Phi alone gives the gauge M(a).

    Raises :class:`~gaugeforge.utils.PreconditionError` if the gauge is not
    free, naming the failed condition and index.
    """
    tight = phi_gauge.tighten()
    gauge = tight.gauge
    ring = gauge.ring
    report = rigidity.freeness_report(gauge)
    if not report.ok:
        raise PreconditionError(
            "Gauge is not free: {}".format(report.witnesses[0]))
    _, iso, degrees = morphisms.free_cover(gauge)
    a, b = gauge.interval
    alpha_top = iso.at(b).matrix
    alpha_bottom = linalg.inverse(ring, iso.at(a).matrix)
    transported = ring.matmul(alpha_bottom,
                              ring.matmul(tight.phi.matrix,
                                          ring.sigma(alpha_top)))
    if precision is None:
        precision = ring.n + (b - a) + 1
    lifted = ChainRing(ring.field, precision)
    weights = lifted.diagonal([lifted.p_power(deg - a) for deg in degrees])
    matrix = lifted.matmul(transported, weights)
    crystal = VirtualCrystal(lifted, matrix, scale=a)
    log.debug("Reconstructed a rank %d crystal with twist %d", crystal.rank,
              a)
    if certificate:
        return crystal, a, iso.at(a).matrix
    return crystal, a


def _conjugates(ring, first, second, h):
    "True if h is invertible and first sigma(h) = h second."
    if not linalg.is_invertible(ring, h):
        return False
    left = ring.matmul(first, ring.sigma(h))
    right = ring.matmul(h, second)
    return np.array_equal(left, right)


def _prime_coordinates(ring, matrix):
    "F_p coordinates of a matrix over W_1."
    return (np.asarray(matrix) % ring.p).reshape(-1)


def _twisted_commutator(ring, first, second):
    """
    The F_p matrix of h -> first sigma(h) - h second on matrices mod p.
    """
    rank, d = first.shape[0], ring.d
    size = rank*rank*d
    columns = []
    for k in range(size):
        h = np.zeros(size, dtype=np.int64)
        h[k] = 1
        h = h.reshape(rank, rank, d)
        value = ring.matmul(first, ring.sigma(h)) - ring.matmul(h, second)
        columns.append(_prime_coordinates(ring, value))
    return np.stack(columns, axis=1)


def _hensel_search(ring, first, second, limit):
    """
    Conjugating matrices found by lifting solutions modulo p one digit at a
    time. Returns one or None.
    """
    p, rank, d = ring.p, first.shape[0], ring.d
    operator = _twisted_commutator(ring, first, second)
    basis = linalg.nullspace_mod_p(operator, p)
    if basis.shape[0] == 0:
        return None
    if p**basis.shape[0] > limit:
        warnings.warn(
            "Gave up because the {} solutions modulo p exceed the search "
            "limit {}. Try increasing the limit.".format(p**basis.shape[0],
                                                         limit),
            RuntimeWarning)
        return None
    for combo in itertools.product(range(p), repeat=basis.shape[0]):
        h = (np.dot(np.array(combo, dtype=np.int64), basis) % p)
        h = h.reshape(rank, rank, d)
        if linalg.rank_mod_p(_reduced_square(ring, h), p) < rank*d:
            continue
        for k in range(1, ring.n):
            defect = (ring.matmul(h, second) -
                      ring.matmul(first, ring.sigma(h))) % ring.modulus
            layer = (defect // p**k) % p
            if (defect % p**k).any():
                h = None
                break
            step = linalg.solve_mod_p(operator,
                                      _prime_coordinates(ring, layer), p)
            if step is None:
                h = None
                break
            h = (h + p**k*step.reshape(rank, rank, d)) % ring.modulus
        if h is not None and _conjugates(ring, first, second, h):
            return h
    return None


def _reduced_square(ring, h):
    """
    The (rank*d) x (rank*d) F_p matrix of x -> h x on coordinates mod p.
    """
    rank, d = h.shape[0], ring.d
    blocks = np.zeros((rank*d, rank*d), dtype=np.int64)
    for j in range(rank):
        for c in range(d):
            x = np.zeros((rank, d), dtype=np.int64)
            x[j, c] = 1
            blocks[:, j*d + c] = ring.matvec(h, x).reshape(-1) % ring.p
    return blocks


def _capped_valuations(ring, matrix):
    "Elementary divisor valuations of a square matrix, n for the missing."
    vals = linalg.smith(ring, matrix)[1]
    return sorted(vals) + [ring.n]*(matrix.shape[0] - len(vals))


def crystals_conjugate(first, second, level, certificate=None,
                       limit=constants.MAX_CONJUGACY_SEARCH):
    """
    Decide whether h^-1 Phi_1 sigma(h) = Phi_2 modulo p^n for some h.

    Both crystals are normalized first and must then share their scale. A
    given certificate is tried first. Different elementary divisors prove
    that no h exists. Over F_2 with few candidates the search is exhaustive,
    otherwise solutions modulo p are lifted one digit at a time and a failed
    search is reported as undecided.

    Returns a :class:`~gaugeforge.utils.Report` with status ``'ok'`` and the
    conjugating matrix in ``details['matrix']``, ``'violated'`` or
    ``'undecided'``.
    """
    report = Report('crystal conjugacy', {'level': level})
    first, second = first.normalized(), second.normalized()
    if first.rank != second.rank or first.scale != second.scale:
        report.violate({'failed': 'shape', 'scales': [first.scale,
                                                      second.scale]})
        return report
    ring = ChainRing(first.ring.field, level)
    one = first.matrix % ring.modulus
    two = second.matrix % ring.modulus
    if certificate is not None:
        h = np.asarray(certificate, dtype=np.int64) % ring.modulus
        if _conjugates(ring, one, two, h):
            report.details['matrix'] = h.tolist()
            report.details['method'] = 'certificate'
            return report
    capped = [_capped_valuations(ring, m) for m in (one, two)]
    if capped[0] != capped[1]:
        report.violate({'failed': 'elementary divisors',
                        'valuations': capped})
        return report
    size = ring.modulus**(ring.d*first.rank**2)
    if ring.p == 2 and size <= limit:
        for entries in itertools.product(range(ring.modulus),
                                         repeat=ring.d*first.rank**2):
            h = np.array(entries, dtype=np.int64).reshape(
                first.rank, first.rank, ring.d)
            if _conjugates(ring, one, two, h):
                report.details['matrix'] = h.tolist()
                report.details['method'] = 'exhaustive'
                return report
        report.violate({'failed': 'exhaustive search', 'candidates': size})
        return report
    h = _hensel_search(ring, one, two, limit)
    if h is not None:
        report.details['matrix'] = h.tolist()
        report.details['method'] = 'lifting'
        return report
    report.undecided({'failed': 'lifting search'})
    return report


def lattice_component(crystal, r, level):
    """
    M^r found by brute force as a set of lattice vectors modulo p^level.

    Used as an oracle for small crystals. Requires p^(level + r - a) to be
    within the precision.
    """
    ring = crystal.ring
    s = crystal.scale
    members = set()
    target = r - s
    for coords in itertools.product(range(ring.modulus),
                                    repeat=crystal.rank*ring.d):
        x = np.array(coords, dtype=np.int64).reshape(crystal.rank, ring.d)
        image = crystal.apply(x)
        if target <= 0 or all(ring.valuation(y) >= target for y in image):
            members.add(tuple((x % ring.p**level).reshape(-1)))
    return members
