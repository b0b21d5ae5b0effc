"""
Predisplays and displays over W_n(R) for a finite field R.

Since R is perfect, the ideal I = V W_n(R) is p W_n(R), cyclic of length
n - 1 and generated by V(1). So I (x) P has one generator V(1) (x) e_j for
each summand W_e of P with min(n - 1, e) > 0, and it is enough to check the
relations on these generators: V(eta) (x) x = V(1) (x) sigma^-1(eta) x.

* :func:`~gaugeforge.zips.display.ideal_tensor`
* :class:`~gaugeforge.zips.display.Predisplay`
* :class:`~gaugeforge.zips.display.DisplayWitness`
* :func:`~gaugeforge.zips.display.validate_predisplay`
* :func:`~gaugeforge.zips.display.validate_display`
* :func:`~gaugeforge.zips.display.tate_display`
* :func:`~gaugeforge.zips.display.predisplay_from_dict`
* :func:`~gaugeforge.zips.display.display_witness_from_dict`

----
"""
from __future__ import division, absolute_import
from future.builtins import range, object, super
import logging
from collections import Counter

import numpy as np

from ..utils import Report, SchemaError
from ..witt import modules
from ..witt.modules import WnModule, SemilinearMap
from ..gauge import core

log = logging.getLogger(__name__)


def ideal_tensor(module):
    """
    The module I (x) P, with generator k matching the generator k of P.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> R = ChainRing(2, 3)
        >>> ideal_tensor(WnModule(R, [3, 1, 2])).divisors
        (2, 2, 1)
        >>> ideal_tensor(WnModule.free(ChainRing(2, 1), 2)).rank
        0

    """
    top = module.ring.n - 1
    return WnModule(module.ring, [min(top, e) for e in module.divisors
                                  if min(top, e) > 0])


def multiplication(module):
    "The multiplication map I (x) P -> P."
    ring = module.ring
    source = ideal_tensor(module)
    matrix = ring.scale(ring.p_power(1),
                        ring.identity(module.rank)[:, :source.rank])
    return SemilinearMap(matrix, source, module)


class Predisplay(object):
    """
    A predisplay of degree d over W_n(R).

    Parameters:

    * modules : list of WnModule
        P_0, ..., P_d.
    * iotas : list of SemilinearMap
        Linear maps iota_i : P_(i+1) -> P_i.
    * alphas : list of SemilinearMap
        Linear maps alpha_i : I (x) P_i -> P_(i+1), on the generators of
        :func:`~gaugeforge.zips.display.ideal_tensor`.
    * frobenius : list of SemilinearMap
        Twist 1 maps F_i : P_i -> P_0.

    """

    def __init__(self, modules, iotas, alphas, frobenius):
        modules = list(modules)
        if not modules:
            raise ValueError("A predisplay needs at least P_0")
        degree = len(modules) - 1
        if len(iotas) != degree or len(alphas) != degree or \
                len(frobenius) != degree + 1:
            raise ValueError(
                "Degree {} needs {} iota and alpha maps and {} F maps".format(
                    degree, degree, degree + 1))
        for i in range(degree):
            if iotas[i].domain != modules[i + 1] or \
                    iotas[i].codomain != modules[i] or iotas[i].twist != 0:
                raise ValueError("iota_{} must be linear P_{} -> P_{}".format(
                    i, i + 1, i))
            if alphas[i].domain != ideal_tensor(modules[i]) or \
                    alphas[i].codomain != modules[i + 1] or \
                    alphas[i].twist != 0:
                raise ValueError(
                    "alpha_{} must be linear I(x)P_{} -> P_{}".format(
                        i, i, i + 1))
        for i, frob in enumerate(frobenius):
            if frob.domain != modules[i] or frob.codomain != modules[0] or \
                    frob.twist != 1:
                raise ValueError(
                    "F_{} must be sigma-semilinear P_{} -> P_0".format(i, i))
        self.ring = modules[0].ring
        self.modules = modules
        self.iotas = list(iotas)
        self.alphas = list(alphas)
        self.frobenius = list(frobenius)

    @property
    def degree(self):
        return len(self.modules) - 1

    def to_dict(self):
        return {'context': self.ring.context,
                'modules': [list(m.divisors) for m in self.modules],
                'iota': [m.matrix.tolist() for m in self.iotas],
                'alpha': [m.matrix.tolist() for m in self.alphas],
                'frobenius': [m.matrix.tolist() for m in self.frobenius]}

    def __repr__(self):
        return 'Predisplay(degree={}, {})'.format(
            self.degree, [list(m.divisors) for m in self.modules])


class DisplayWitness(object):
    """
    A normal decomposition: free modules L_0, ..., L_d and twist 1 maps
    Phi_i : L_i -> L_0 + ... + L_d.

    Parameters:

    * ring : ChainRing
    * ranks : list of int
    * phis : list of SemilinearMap

    """

    def __init__(self, ring, ranks, phis):
        self.ring = ring
        self.ranks = [int(r) for r in ranks]
        self.total = WnModule.free(ring, sum(self.ranks))
        if len(phis) != len(self.ranks):
            raise ValueError("Need one Phi per summand")
        for rank, phi in zip(self.ranks, phis):
            if phi.domain != WnModule.free(ring, rank) or \
                    phi.codomain != self.total or phi.twist != 1:
                raise ValueError("Phi must be sigma-semilinear L_i -> sum L")
        self.phis = list(phis)

    @property
    def degree(self):
        return len(self.ranks) - 1

    def summands(self):
        return [WnModule.free(self.ring, r) for r in self.ranks]

    def total_phi(self):
        "The map from the sum of the L_i to itself."
        matrix = np.concatenate([phi.matrix for phi in self.phis], axis=1)
        return SemilinearMap(matrix, self.total, self.total, 1)

    def expected_module(self, i):
        "(I (x) L_0) + ... + (I (x) L_(i-1)) + L_i + ... + L_d."
        summands = self.summands()
        divisors = []
        for j, module in enumerate(summands):
            piece = ideal_tensor(module) if j < i else module
            divisors.extend(piece.divisors)
        return WnModule(self.ring, divisors)

    def to_dict(self):
        return {'ranks': self.ranks,
                'phi': [phi.matrix.tolist() for phi in self.phis]}


def validate_predisplay(predisplay):
    """
    Check iota_i alpha_i = multiplication and F_(i+1) alpha_i = F_i on
    I (x) P_i.

    Witnesses carry ``'index'`` i, ``'generator'`` and ``'relation'``
    (``'iota alpha'`` or ``'frobenius'``). Ill defined maps are reported
    with relation ``'defined'``.
    """
    report = Report('predisplay', {'degree': predisplay.degree})
    everything = predisplay.iotas + predisplay.alphas + predisplay.frobenius
    for mapping in everything:
        report.check(mapping.is_well_defined(),
                     {'map': repr(mapping), 'relation': 'defined'})
    target = predisplay.modules[0]
    for i in range(predisplay.degree):
        module = predisplay.modules[i]
        iota, alpha = predisplay.iotas[i], predisplay.alphas[i]
        mult = multiplication(module)
        lifted = predisplay.frobenius[i + 1].compose(alpha)
        for k in range(alpha.domain.rank):
            gen = alpha.domain.generator(k)
            first = iota.apply(alpha.apply(gen))
            report.check(module.is_zero_element(first - mult.apply(gen)),
                         {'index': i, 'generator': k,
                          'relation': 'iota alpha'})
            second = lifted.apply(gen)
            expected = predisplay.frobenius[i].apply(module.generator(k))
            report.check(target.is_zero_element(second - expected),
                         {'index': i, 'generator': k,
                          'relation': 'frobenius'})
    return report


def validate_display(predisplay, witness):
    """
    Check that a predisplay is a display with the given normal
    decomposition.

    On top of :func:`~gaugeforge.zips.display.validate_predisplay`, the
    L_i must be free, each P_i must have the shape of the decomposition and
    the sum of the Phi_i must be bijective.

    Examples:

        >>> from gaugeforge.witt.chainring import ChainRing
        >>> P, W = tate_display(ChainRing(3, 2))
        >>> validate_display(P, W).ok
        True

    """
    report = Report('display', {'degree': predisplay.degree,
                                'ranks': witness.ranks})
    report.add(validate_predisplay(predisplay))
    if not report.check(witness.degree == predisplay.degree,
                        {'failed': 'degree'}):
        return report
    for i, module in enumerate(predisplay.modules):
        expected = witness.expected_module(i)
        report.check(Counter(module.divisors) == Counter(expected.divisors),
                     {'index': i, 'failed': 'decomposition',
                      'found': list(module.divisors),
                      'expected': list(expected.divisors)})
    report.check(witness.total_phi().is_bijective(),
                 {'failed': 'automorphism'})
    return report


def tate_display(ring, degree=1):
    """
    The display with L_degree = W_n and the other L_i zero.

    P_i is W_n for i <= degree, iota is the identity, alpha sends
    V(1) (x) e to p e and F_i = p^(degree - i) sigma.
    """
    module = WnModule.free(ring, 1)
    ident = modules.identity_map(module)
    tensor = ideal_tensor(module)
    pe = SemilinearMap(ring.scale(ring.p_power(1),
                                  ring.identity(1)[:, :tensor.rank]),
                       tensor, module)
    frobenius = [SemilinearMap(ring.scalar_matrix(1,
                                                  ring.p_power(degree - i)),
                               module, module, 1)
                 for i in range(degree + 1)]
    predisplay = Predisplay([module]*(degree + 1), [ident]*degree,
                            [pe]*degree, frobenius)
    ranks = [0]*degree + [1]
    total = WnModule.free(ring, 1)
    phis = [SemilinearMap(None, WnModule.free(ring, r), total, 1)
            for r in ranks[:-1]]
    phis.append(SemilinearMap(ring.identity(1), total, total, 1))
    return predisplay, DisplayWitness(ring, ranks, phis)


def predisplay_from_dict(data):
    """
    Build a predisplay from its JSON form.

    Raises :class:`~gaugeforge.utils.SchemaError` on malformed input.
    """
    try:
        ring = core.ring_from_context(data['context'])
        mods = [WnModule(ring, d) for d in data['modules']]
        iota_rows, alpha_rows = data['iota'], data['alpha']
        frob_rows = data['frobenius']
        degree = len(mods) - 1
        if len(iota_rows) != degree or len(alpha_rows) != degree or \
                len(frob_rows) != degree + 1:
            raise ValueError("lists do not match the degree")
    except (KeyError, TypeError, ValueError, AssertionError) as err:
        raise SchemaError("Invalid predisplay document: {}".format(err))

    def linear(rows, source, target, twist=0):
        return SemilinearMap(core.matrix_from_json(ring, rows, target.rank,
                                                   source.rank),
                             source, target, twist)

    iotas = [linear(iota_rows[i], mods[i + 1], mods[i])
             for i in range(degree)]
    alphas = [linear(alpha_rows[i], ideal_tensor(mods[i]), mods[i + 1])
              for i in range(degree)]
    frobenius = [linear(frob_rows[i], mods[i], mods[0], 1)
                 for i in range(degree + 1)]
    try:
        return Predisplay(mods, iotas, alphas, frobenius)
    except ValueError as err:
        raise SchemaError(str(err))


def display_witness_from_dict(ring, data):
    """
    Build a normal decomposition over *ring* from ``{"ranks", "phi"}``.
    """
    try:
        ranks = [int(r) for r in data['ranks']]
        rows = data['phi']
        if len(rows) != len(ranks):
            raise ValueError("need one Phi per rank")
    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError("Invalid display witness: {}".format(err))
    total = WnModule.free(ring, sum(ranks))
    phis = [SemilinearMap(core.matrix_from_json(ring, m, total.rank, r),
                          WnModule.free(ring, r), total, 1)
            for m, r in zip(rows, ranks)]
    return DisplayWitness(ring, ranks, phis)
