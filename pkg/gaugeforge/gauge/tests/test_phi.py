"""
Tests for phi-gauges and their morphisms.
"""
from __future__ import absolute_import, division
from pytest import raises

from ...utils import SchemaError
from ...witt.chainring import ChainRing
from ...witt.modules import SemilinearMap
from ..core import p_multiple_gauge, is_coeffective
from ..crystal import VirtualCrystal, standard_construction
from ..morphisms import identity
from ..phi import (PhiGauge, validate_phi_gauge, phi_gauge_from_dict,
                   is_phi_morphism, phi_gauges_isomorphic, truncate_phi_leq0)


def lattice_phi_gauge():
    "N -> pN -> pN over W_2(F_2) with phi = sigma"
    gauge = p_multiple_gauge(ChainRing(2, 2))
    phi = SemilinearMap(gauge.ring.identity(1), gauge.plus_infinity,
                        gauge.minus_infinity, 1)
    return PhiGauge(gauge, phi)


def test_phi_must_be_semilinear():
    "phi needs twist one and the end components"
    gauge = p_multiple_gauge(ChainRing(2, 2))
    with raises(ValueError):
        PhiGauge(gauge, SemilinearMap(gauge.ring.identity(1),
                                      gauge.plus_infinity,
                                      gauge.minus_infinity, 0))


def test_tighten_transports_phi():
    "Tightening a widened phi-gauge gives back the original"
    G = lattice_phi_gauge()
    wide = PhiGauge(G.gauge.window(-2, 4), G.phi)
    assert validate_phi_gauge(wide).ok
    tight = wide.tighten()
    assert tight.gauge.same_as(G.gauge)
    assert tight.phi.equals(G.phi)


def test_twist_and_reduction():
    "Twisting shifts the window and reduction keeps phi bijective"
    G = lattice_phi_gauge()
    assert G.twisted(2).interval == (-2, 0)
    reduced = G.reduce_mod_p()
    assert reduced.ring.n == 1
    assert validate_phi_gauge(reduced).ok


def test_json_round_trip():
    "Phi-gauges survive their JSON form"
    G = lattice_phi_gauge()
    back = phi_gauge_from_dict(G.to_dict())
    assert back.gauge.same_as(G.gauge)
    assert back.phi.equals(G.phi)
    data = G.to_dict()
    del data['phi']
    with raises(SchemaError):
        phi_gauge_from_dict(data)


def test_identity_is_phi_isomorphism():
    "The identity commutes with phi and decides isomorphism"
    G = lattice_phi_gauge()
    assert is_phi_morphism(identity(G.gauge), G, G)
    result, witness = phi_gauges_isomorphic(G, G)
    assert result is True
    assert witness.is_isomorphism()


def test_phi_changes_isomorphism_class():
    "phi = 1 and phi = -1 on the same gauge are not isomorphic over F_3"
    gauge = p_multiple_gauge(ChainRing(3, 1))
    ring = gauge.ring
    plus = PhiGauge(gauge, SemilinearMap(ring.identity(1),
                                         gauge.plus_infinity,
                                         gauge.minus_infinity, 1))
    minus = PhiGauge(gauge, SemilinearMap(ring.from_integers([[2]]),
                                          gauge.plus_infinity,
                                          gauge.minus_infinity, 1))
    result, witness = phi_gauges_isomorphic(plus, minus)
    assert result is False
    assert witness is None


def test_truncation_of_phi_gauges():
    "M_<=0 keeps phi exactly when M is coeffective"
    ring = ChainRing(2, 4)
    crystal = VirtualCrystal(ring, ring.from_integers([[0, 2], [1, 0]]))
    G = standard_construction(crystal, 2)
    assert not truncate_phi_leq0(G).is_phi_gauge()
    shifted = G.twisted(1)
    assert is_coeffective(shifted.gauge)
    T = truncate_phi_leq0(shifted)
    assert T.is_phi_gauge()
    assert T.gauge.same_as(shifted.gauge)
    assert T.phi.equals(shifted.phi)
