"""
Exact arithmetic in W_n(F_q) and linear algebra over these chain rings.

* :mod:`~gaugeforge.witt.fields`: finite fields F_q with table arithmetic
* :mod:`~gaugeforge.witt.vectors`: Witt vectors in Witt coordinates through
  the universal structure polynomials
* :mod:`~gaugeforge.witt.chainring`: the unramified model (Z/p^n)[t]/(F) of
  W_n(F_q) used for all matrix computations
* :mod:`~gaugeforge.witt.linalg`: Smith and Howell forms, kernels and
  quotients over the chain ring and row reduction modulo p
* :mod:`~gaugeforge.witt.modules`: modules in canonical divisor form and
  semilinear maps between them
"""
