"""
F-zips, predisplays and displays, and perfection of finite F_p-algebras.
"""
from __future__ import absolute_import

from .fzip import FZip, GeneralizedFZip, gauge_to_fzip, validate_fzip
from .display import Predisplay, DisplayWitness
from .perfection import FiniteAlgebra, perfect_core, is_perfect
