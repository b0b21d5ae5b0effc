"""
Tests for the acceptance suites and their bundles.
"""
from __future__ import absolute_import, division
import multiprocessing

from pytest import raises

from ...utils import SchemaError
from ...gauge.core import validate_gauge
from ..suites import (run_suite, SUITES, BUNDLES, witt_ghost_bundle,
                      gauge_relation_bundle, crystal_round_trip_bundle,
                      length_law_bundle, dieudonne_bundle,
                      corrupted_fixture_bundle, perfection_bundle,
                      freeness_bundle, derham_bundle, _constructed_gauges,
                      CONSTRUCTORS)

TINY = {'tiny': [('witt ghost', {'primes': (2,), 'lengths': (1, 2)}),
                 ('perfection', {'variables': (1,), 'max_size': 3})]}


def test_registry_names():
    "Every suite runs known bundles"
    assert set(SUITES) == {'paper-invariants', 'exhaustive-small',
                           'derham-demo'}
    for name, bundles in SUITES.items():
        for bundle, _ in bundles:
            assert bundle in BUNDLES
    assert 'corrupted fixture' not in [b for b, _ in
                                       SUITES['paper-invariants']]


def test_empty_registry():
    "An empty registry and unknown suites are schema errors"
    with raises(SchemaError):
        run_suite('paper-invariants', registry={})
    with raises(SchemaError):
        run_suite('nope', registry=TINY)


def test_tiny_suite():
    "Bundle reports are merged by name and the seed is echoed"
    report = run_suite('tiny', seed=12, registry=TINY)
    assert report.ok
    assert report.details['seed'] == 12
    assert [c.name for c in report.children] == ['perfection', 'witt ghost']


def test_corrupted_fixture():
    "The corrupted fixture is violated with a witness"
    report = corrupted_fixture_bundle(0)
    assert report.status == 'violated'
    corrupted = run_suite('tiny', registry=TINY, corrupt=True)
    assert corrupted.status == 'violated'
    child = [c for c in corrupted.children if c.name == 'corrupted fixture']
    assert child[0].children[0].witnesses


def test_pool_gives_same_report():
    "Running the bundles in processes does not change the report"
    serial = run_suite('tiny', seed=4, registry=TINY).to_dict()
    pool = multiprocessing.Pool(2)
    try:
        parallel = run_suite('tiny', seed=4, njobs=2, pool=pool,
                             registry=TINY).to_dict()
    finally:
        pool.close()
        pool.join()
    assert parallel == serial
    with raises(AssertionError):
        run_suite('tiny', njobs=0, registry=TINY)


def test_small_bundles():
    "Reduced bundles pass"
    assert witt_ghost_bundle(1, primes=(3,), lengths=(1, 2), samples=30).ok
    assert gauge_relation_bundle(2, samples=8).ok
    assert crystal_round_trip_bundle(3, samples=3, primes=(2,)).ok
    assert length_law_bundle(4, samples=10).ok
    assert dieudonne_bundle(5, samples=3).ok
    assert perfection_bundle(6, variables=(1,), max_size=4).ok


def test_constructed_gauges_cover_every_constructor():
    "One pass over the constructors gives valid gauges of each kind"
    gauges = [gauge for _, gauge in _constructed_gauges(7, CONSTRUCTORS)]
    assert len(gauges) == CONSTRUCTORS
    for gauge in gauges:
        assert validate_gauge(gauge).ok
    report = gauge_relation_bundle(7, samples=2*CONSTRUCTORS)
    assert report.ok


def test_crystal_round_trip_uses_search():
    "At p = 2 conjugacy is found by the search, not from a known basis"
    report = crystal_round_trip_bundle(3, samples=4, primes=(2,))
    assert report.ok
    methods = report.details['methods']
    assert sum(methods.values()) == 4
    assert set(methods) <= set(['exhaustive', 'lifting'])
    known = crystal_round_trip_bundle(3, samples=2, primes=(3,))
    assert known.details['methods'] == {'certificate': 2}


def test_freeness_bundle_meets_non_free_gauges():
    "The enumerated family has free and non-free members and both agree"
    report = freeness_bundle(0, max_rank=1, samples=2)
    assert report.ok
    assert report.details['gauges'] == 9
    assert 0 < report.details['non_free'] < 9


def test_derham_bundle_degree_eight_at_three():
    "The de Rham checks at p = 3 pass with truncation degree 8"
    assert derham_bundle(0, primes=(3,), variables=(1,)).ok
