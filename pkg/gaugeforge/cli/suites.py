"""
Acceptance suites: named collections of property bundles.

A bundle is a module level function taking a seed (and optional sizes) and
returning a :class:`~gaugeforge.utils.Report` named after the bundle. A
suite lists bundles with their keyword arguments. Bundles are independent
and can run in a :class:`multiprocessing.Pool`. Their reports are merged by
bundle name so the result does not depend on the number of processes.

**Running**

* :func:`~gaugeforge.cli.suites.run_suite`
* :data:`~gaugeforge.cli.suites.SUITES`
* :data:`~gaugeforge.cli.suites.BUNDLES`

**Bundles**

* :func:`~gaugeforge.cli.suites.witt_ghost_bundle`
* :func:`~gaugeforge.cli.suites.gauge_relation_bundle`
* :func:`~gaugeforge.cli.suites.crystal_round_trip_bundle`
* :func:`~gaugeforge.cli.suites.freeness_bundle`
* :func:`~gaugeforge.cli.suites.length_law_bundle`
* :func:`~gaugeforge.cli.suites.dieudonne_bundle`
* :func:`~gaugeforge.cli.suites.cris_model_bundle`
* :func:`~gaugeforge.cli.suites.point_gauge_bundle`
* :func:`~gaugeforge.cli.suites.derham_bundle`
* :func:`~gaugeforge.cli.suites.perfection_bundle`
* :func:`~gaugeforge.cli.suites.corrupted_fixture_bundle`

----
"""
from __future__ import division, absolute_import
from future.builtins import range
import logging
import multiprocessing
import time

from .. import constants
from ..utils import (Report, SchemaError, ImplementationBug, random_state,
                     binomial)
from ..witt.fields import FiniteField
from ..witt.chainring import ChainRing
from ..witt.modules import WnModule, scalar_map
from ..witt.vectors import ghost_equivalence_report
from ..gauge import core, morphisms, rigidity
from ..gauge.crystal import (random_crystal, standard_construction,
                             reconstruct_crystal, crystals_conjugate)
from ..gauge.dieudonne import (random_dieudonne, validate_dieudonne,
                               from_dieudonne, to_dieudonne)
from ..cris import filtrations
from ..cris.model import build_model
from ..cris.point import point_gauge, point_gauge_report, flatness_check
from ..derham.forms import affine_space
from ..derham.cohomology import derham_gauge_report, hg_gauge
from ..zips.perfection import (monomial_algebra, monomial_downsets,
                               perfect_core, is_perfect,
                               surjective_frobenius_report)

log = logging.getLogger(__name__)


def _summarize(report, child, witness):
    "Fold a sub-report into *report* as one witness when it is not ok."
    if child.ok:
        return True
    witness = dict(witness)
    witness['status'] = child.status
    witness['witnesses'] = child.witnesses
    if child.status == constants.STATUS_OVERFLOW:
        report.overflow(witness)
    elif child.status == constants.STATUS_UNDECIDED:
        report.undecided(witness)
    else:
        report.violate(witness)
    return False


def witt_ghost_bundle(seed, primes=(2, 3), lengths=(1, 2, 3, 4),
                      samples=constants.GHOST_SAMPLES):
    "Witt arithmetic against Z/p^n for every prime and length."
    report = Report('witt ghost', {'seed': seed})
    for p in primes:
        for n in lengths:
            report.add(ghost_equivalence_report(p, n, samples, seed))
    return report


def _random_morphism(ring, rng):
    "A random morphism between two random rank one chains on [-1, 1]."
    source = morphisms.random_chain(ring, rng, -1, 1)
    target = morphisms.random_chain(ring, rng, -1, 1)
    hom = morphisms.hom_module(source, target)
    return hom.morphism(hom.module.random_element(rng))


#: Number of constructors cycled through by the gauge relation bundle
CONSTRUCTORS = 12


def _constructed_gauges(seed, samples):
    """
    Gauges from every constructor, drawn in a fixed order.

    The kinds cycle through random sums, Tate twists, sums with the
    p-multiple fixture, free sums, tensor products, truncations, kernels,
    cokernels, standard constructions, Dieudonne modules, point gauges and
    de Rham gauges of the affine line.
    """
    rings = [ChainRing(2, 1), ChainRing(2, 2), ChainRing(3, 1),
             ChainRing(3, 2), ChainRing(2, 3)]
    derham = {}
    rng = random_state(seed)
    for k in range(samples):
        ring = rings[k % len(rings)]
        kind = k % CONSTRUCTORS
        if kind == 0:
            gauge = morphisms.random_gauge(ring, rng,
                                           pieces=rng.randint(1, 4))
        elif kind == 1:
            gauge = core.tate_twist(morphisms.random_gauge(ring, rng),
                                    rng.randint(-2, 3))
        elif kind == 2:
            gauge = core.direct_sum(
                morphisms.random_chain(ring, rng, 0, 1),
                core.p_multiple_gauge(ring, rank=rng.randint(1, 3)))
        elif kind == 3:
            multiplicities = {i: rng.randint(0, 3) for i in range(-1, 2)}
            gauge = rigidity.free_sum(ring, multiplicities)
        elif kind == 4:
            gauge = morphisms.tensor(
                morphisms.random_chain(ring, rng, -1, 0),
                morphisms.random_chain(ring, rng, 0, 1))
        elif kind == 5:
            gauge = core.truncate_leq0(morphisms.random_gauge(ring, rng))
        elif kind == 6:
            gauge = morphisms.kernel(_random_morphism(ring, rng))[0]
        elif kind == 7:
            gauge = morphisms.cokernel(_random_morphism(ring, rng))[0]
        elif kind == 8:
            crystal = random_crystal(ring.field, ring.n + 2,
                                     rng.randint(1, 3), rng, 1)
            gauge = standard_construction(crystal, ring.n).gauge
        elif kind == 9:
            module = random_dieudonne(ring, rng.randint(1, 3), rng)
            gauge = from_dieudonne(module).gauge
        elif kind == 10:
            gauge = point_gauge(ring.field, ring.n).gauge
        else:
            key = (ring.p, rng.randint(0, 2))
            if key not in derham:
                variety = affine_space(ring.p, 1)
                derham[key] = hg_gauge(variety, key[1]).gauge
            gauge = derham[key]
        yield k, gauge


def gauge_relation_bundle(seed, samples=constants.GAUGE_SAMPLES):
    "fv = vf = p on generated gauges."
    report = Report('gauge relation', {'seed': seed, 'gauges': samples})
    for k, gauge in _constructed_gauges(seed, samples):
        _summarize(report, core.validate_gauge(gauge),
                   {'index': k, 'context': gauge.ring.context})
    return report


def crystal_round_trip_bundle(seed, samples=constants.CRYSTAL_SAMPLES,
                              primes=(2, 3), level=2, top=2,
                              searched=(2,)):
    """
    Reconstructing the standard construction of random crystals gives a
    conjugate crystal. The construction must be a free gauge. Undecided
    conjugacy counts as a failure.

    For the primes in *searched* conjugacy is decided by the search alone,
    for the others the basis change known from the construction is checked.
    The methods used are counted in ``details['methods']``.
    """
    precision = level + top + 1
    report = Report('crystal round trip', {'seed': seed, 'level': level,
                                           'precision': precision})
    methods = {}
    rng = random_state(seed)
    for p in primes:
        field = FiniteField(p)
        for k in range(samples):
            crystal = random_crystal(field, precision, 1 + k % 3, rng, top)
            witness = {'index': k, 'p': p, 'crystal': crystal.to_dict()}
            phi_gauge, basis = standard_construction(crystal, level,
                                                     certificate=True)
            if not _summarize(report,
                              rigidity.freeness_report(phi_gauge.gauge),
                              dict(witness, failed='free')):
                continue
            rebuilt, _, alpha = reconstruct_crystal(phi_gauge,
                                                    certificate=True)
            certificate = None
            if p not in searched:
                certificate = phi_gauge.ring.matmul(basis, alpha)
            conjugacy = crystals_conjugate(crystal, rebuilt, level,
                                           certificate=certificate)
            method = conjugacy.details.get('method', conjugacy.status)
            methods[method] = methods.get(method, 0) + 1
            if not conjugacy.ok:
                report.violate(dict(witness, failed='conjugacy',
                                    status=conjugacy.status))
    report.details['methods'] = methods
    return report


def freeness_bundle(seed, max_rank=2, samples=10):
    """
    The quotient criterion and its dual agree on all small W_2(F_2)-gauges
    with free components, free or not. N -> pN -> pN is refused and
    standard constructions are accepted.
    """
    ring = ChainRing(2, 2)
    report = Report('freeness criteria', {'seed': seed,
                                          'max_rank': max_rank})
    count = non_free = 0
    for k, gauge in enumerate(rigidity.free_component_gauges(ring,
                                                              max_rank)):
        reduced = gauge.reduce_mod_p()
        forward = rigidity.quotient_criterion(reduced).ok
        backward = rigidity.dual_quotient_criterion(reduced).ok
        report.check(forward == backward,
                     {'index': k, 'gauge': gauge.to_dict(),
                      'criteria': [forward, backward]})
        count += 1
        non_free += not forward
    report.details['gauges'] = count
    report.details['non_free'] = non_free
    report.check(non_free > 0, {'failed': 'no non-free gauge enumerated'})
    report.check(not rigidity.is_free_W_gauge(core.p_multiple_gauge(ring)),
                 {'failed': 'p-multiple fixture accepted'})
    rng = random_state(seed)
    for k in range(samples):
        crystal = random_crystal(FiniteField(2), 4, 1 + k % 3, rng, 1)
        gauge = standard_construction(crystal, 2).gauge
        report.check(rigidity.is_free_W_gauge(gauge),
                     {'index': k, 'failed': 'standard construction'})
    return report


def _k_gauges(seed, samples):
    rng = random_state(seed)
    fields = [FiniteField(2), FiniteField(3), FiniteField(2, 2)]
    for k in range(samples):
        field = fields[k % len(fields)]
        if k % 2:
            gauge = morphisms.random_gauge(ChainRing(field, 2), rng)
            yield k, gauge.reduce_mod_p()
        else:
            yield k, morphisms.random_gauge(ChainRing(field, 1), rng,
                                            pieces=rng.randint(1, 4))
    for k, gauge in enumerate(rigidity.free_component_gauges(
            ChainRing(2, 2), 1)):
        yield samples + k, gauge.reduce_mod_p()


def length_law_bundle(seed, samples=200):
    "Every quasi-rigid gauge over k has components of one length."
    report = Report('quasi-rigid lengths', {'seed': seed})
    found = 0
    for k, gauge in _k_gauges(seed, samples):
        if not rigidity.is_quasi_rigid(gauge):
            continue
        found += 1
        try:
            rigidity.quasi_rigid_lengths(gauge)
        except ImplementationBug as error:
            report.violate({'index': k, 'lengths': gauge.lengths(),
                            'message': str(error)})
    report.details['quasi_rigid'] = found
    return report


def dieudonne_bundle(seed, samples=constants.DIEUDONNE_SAMPLES, level=2):
    """
    FV = VF = p^i on every Dieudonne module of a phi-gauge and the weight
    one round trip on random modules.
    """
    report = Report('dieudonne', {'seed': seed})
    rng = random_state(seed)
    rings = [ChainRing(2, level), ChainRing(3, level),
             ChainRing(FiniteField(2, 2), level)]
    for k in range(samples):
        ring = rings[k % len(rings)]
        module = random_dieudonne(ring, 1 + k % 3, rng)
        witness = {'index': k, 'context': ring.context}
        if not _summarize(report, validate_dieudonne(module),
                          dict(witness, failed='axioms')):
            continue
        back = to_dieudonne(from_dieudonne(module))
        report.check(back.same_as(module), dict(witness, failed='round trip'))
    for k in range(samples):
        crystal = random_crystal(FiniteField(2 + k % 2), level + 3,
                                 1 + k % 3, rng, 2)
        phi_gauge = standard_construction(crystal, level).tighten()
        if phi_gauge.interval[0] == phi_gauge.interval[1]:
            continue
        module = to_dieudonne(phi_gauge)
        _summarize(report, validate_dieudonne(module),
                   {'index': k, 'weight': module.weight,
                    'failed': 'construction axioms'})
    return report


def cris_model_bundle(seed, primes=(2, 3), variables=(1, 2),
                      truncation=constants.DEFAULT_TRUNCATION, extra=2):
    """
    Graded ranks binom(r + d - 1, d - 1), bijective Cartier maps, the
    Frobenius section and truncation stability of the crystalline model.
    """
    report = Report('crystalline model', {'seed': seed,
                                          'truncation': truncation})
    for p in primes:
        for d in variables:
            model = build_model(p, d, truncation)
            for row in filtrations.rank_table(model):
                expected = binomial(row['r'] + d - 1, d - 1)
                report.check(row['j_rank'] == expected,
                             {'p': p, 'd': d, 'index': row['r'],
                              'rank': row['j_rank'], 'expected': expected})
            report.add(filtrations.cartier_report(model))
            report.add(filtrations.frobenius_section_check(model, seed=seed))
            report.add(filtrations.truncation_stability_report(
                p, d, truncation, extra))
    return report


def point_gauge_bundle(seed, lengths=(1, 2, 3), samples=5):
    "The gauge ring of a point over F_2 and F_4 and its flatness."
    report = Report('point gauge', {'seed': seed})
    for field in [FiniteField(2), FiniteField(2, 2)]:
        for n in lengths:
            report.add(point_gauge_report(point_gauge(field, n), samples,
                                          seed))
            report.add(flatness_check(field, n, 1))
    return report


def derham_bundle(seed, primes=(2, 3), variables=(1, 2), degrees=None):
    """
    All de Rham gauge checks on affine spaces. *degrees* maps p to the
    truncation degree (default 8 for both primes).
    """
    if degrees is None:
        degrees = {2: 8, 3: 8}
    report = Report('de Rham gauge', {'seed': seed})
    for p in primes:
        for nvars in variables:
            report.add(derham_gauge_report(affine_space(p, nvars,
                                                        degrees[p])))
    return report


def perfection_bundle(seed, variables=(1, 2, 3), max_size=8):
    """
    The perfect core of every monomial quotient of F_2[x, y, z] of small
    dimension is perfect and stable, and a surjective Frobenius is
    bijective.
    """
    report = Report('perfection', {'seed': seed, 'max_size': max_size})
    count = 0
    for nvars in variables:
        for staircase in monomial_downsets(nvars, max_size):
            algebra = monomial_algebra(2, staircase)
            core_algebra, _ = perfect_core(algebra)
            witness = {'staircase': [list(m) for m in staircase]}
            report.check(is_perfect(core_algebra),
                         dict(witness, failed='perfect'))
            report.check(perfect_core(core_algebra)[0].dim ==
                         core_algebra.dim, dict(witness, failed='idempotent'))
            _summarize(report, surjective_frobenius_report(algebra),
                       dict(witness, failed='surjective'))
            count += 1
    report.details['algebras'] = count
    return report


def corrupted_fixture_bundle(seed):
    "A gauge over W_2(F_2) with f = v = 1, so fv = 1 != p."
    ring = ChainRing(2, 2)
    module = WnModule.free(ring, 1)
    gauge = core.Gauge(ring, (0, 1), [module, module],
                       [scalar_map(module, 1)], [scalar_map(module, 1)])
    report = Report('corrupted fixture', {'seed': seed})
    report.add(core.validate_gauge(gauge))
    return report


#: Bundle name -> function
BUNDLES = {
    'witt ghost': witt_ghost_bundle,
    'gauge relation': gauge_relation_bundle,
    'crystal round trip': crystal_round_trip_bundle,
    'freeness criteria': freeness_bundle,
    'quasi-rigid lengths': length_law_bundle,
    'dieudonne': dieudonne_bundle,
    'crystalline model': cris_model_bundle,
    'point gauge': point_gauge_bundle,
    'de Rham gauge': derham_bundle,
    'perfection': perfection_bundle,
    'corrupted fixture': corrupted_fixture_bundle,
}

#: Suite name -> list of (bundle name, keyword arguments)
SUITES = {
    'paper-invariants': [
        ('witt ghost', {}),
        ('gauge relation', {}),
        ('crystal round trip', {}),
        ('freeness criteria', {}),
        ('quasi-rigid lengths', {}),
        ('dieudonne', {}),
        ('crystalline model', {}),
        ('point gauge', {}),
        ('de Rham gauge', {}),
        ('perfection', {}),
    ],
    'exhaustive-small': [
        ('witt ghost', {'primes': (2,), 'lengths': (1, 2, 3)}),
        ('freeness criteria', {'samples': 0}),
        ('point gauge', {'lengths': (1,), 'samples': 2}),
        ('perfection', {'max_size': 6}),
    ],
    'derham-demo': [
        ('de Rham gauge', {'variables': (1,)}),
    ],
}


def _run_bundle(task):
    """
    Run one (bundle name, seed, keyword arguments) task. Needed for
    multiprocessing.
    """
    name, seed, kwargs = task
    if name not in BUNDLES:
        raise SchemaError("Unknown bundle {!r}".format(name))
    start = time.time()
    report = BUNDLES[name](seed, **kwargs)
    log.debug("Bundle %r finished with status %s in %.2f s", name,
              report.status, time.time() - start)
    return report


def run_suite(name, seed=0, njobs=1, pool=None, corrupt=False,
              registry=None):
    """
    Run a named suite and merge the bundle reports.

    Parameters:

    * name : str
        A key of *registry*.
    * seed : int
        Passed to every bundle and echoed in the report.
    * njobs : int
        Number of processes. With njobs > 1 the bundles are mapped over a
        :class:`multiprocessing.Pool`.
    * pool : None or multiprocessing.Pool
        An existing pool to use instead of creating one.
    * corrupt : bool
        Add the corrupted fixture bundle (fault injection).
    * registry : dict or None
        The suites to choose from, default
        :data:`~gaugeforge.cli.suites.SUITES`.

    Returns:

    * report : Report
        Children are the bundle reports sorted by name.

    Raises :class:`~gaugeforge.utils.SchemaError` for an unknown suite or
    an empty registry.

    Examples:

        >>> tiny = {'tiny': [('witt ghost', {'primes': (2,),
        ...                                  'lengths': (1, 2)})]}
        >>> run_suite('tiny', registry=tiny).status
        'ok'
        >>> run_suite('tiny', registry=tiny, corrupt=True).status
        'violated'

    """
    assert njobs > 0, "Invalid number of jobs {}. Must be > 0.".format(njobs)
    if njobs == 1:
        assert pool is None, "njobs should be number of processes in the pool"
    if registry is None:
        registry = SUITES
    if not registry:
        raise SchemaError("The suite registry is empty")
    if name not in registry:
        raise SchemaError("Unknown suite {!r}. Choose from {}".format(
            name, sorted(registry)))
    tasks = [(bundle, seed, dict(kwargs)) for bundle, kwargs in
             registry[name]]
    if corrupt:
        tasks.append(('corrupted fixture', seed, {}))
    log.debug("Running suite %r with %d bundles", name, len(tasks))
    if njobs > 1 and pool is None:
        pool = multiprocessing.Pool(njobs)
        created_pool = True
    else:
        created_pool = False
    if pool is None:
        results = [_run_bundle(task) for task in tasks]
    else:
        results = pool.map(_run_bundle, tasks)
    if created_pool:
        pool.close()
        pool.join()
    report = Report('suite', {'suite': name, 'seed': seed,
                              'bundles': sorted(t[0] for t in tasks)})
    for child in sorted(results, key=lambda r: r.name):
        report.add(child)
    return report
