"""
Gauges, phi-gauges, virtual crystals and Dieudonne modules over W_n(F_q).
"""
from __future__ import absolute_import

from .core import Gauge, free_gauge, zero_gauge, tate_twist, validate_gauge
from .morphisms import GaugeMorphism, tensor
from .phi import PhiGauge
from .crystal import VirtualCrystal, standard_construction
from .dieudonne import DieudonneModule
