"""
The divided power model of crystalline sections over k[x]/(x^p), its
filtrations and Cartier maps, and the gauge ring at a perfect point.
"""
from __future__ import absolute_import

from .model import DPAlgebra, build_model, dp_mul, dp_gamma
from .filtrations import (graded_piece, cartier_fr, rank_table,
                          assemble_generalized_fzip)
from .point import PointGauge, point_gauge, flatness_check
