"""
Truncated algebraic de Rham complexes of smooth affine varieties over F_q,
the inverse Cartier operator and the gauge complexes G_1^r built from them.
"""
from __future__ import absolute_import

from .forms import (AffineVariety, affine_space, hypersurface,
                    certify_smoothness, variety_from_dict, DifferentialForm,
                    kaehler_d, wedge, de_rham_cohomology, de_rham_basis)
from .complexes import (cartier_inverse, cartier_c, CartierOperator,
                        DeRhamGaugeComplex, build_G1, gauge_map_f,
                        gauge_map_v, ladder_report,
                        cartier_round_trip_report)
from .cohomology import (gauge_cohomology, GaugeCohomology, hg_gauge,
                         derham_gauge_report, truncation_stability_report)
