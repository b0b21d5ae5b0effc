"""
Holds the numeric defaults and limits used throughout :mod:`gaugeforge`.

All modules should import their defaults from here!

----
"""

#: Largest field size for which the addition and multiplication tables of
#: :class:`~gaugeforge.witt.fields.FiniteField` are built
MAX_FIELD_SIZE = 1024

#: Largest Witt length for which the structure polynomials are generated
MAX_WITT_LENGTH = 6

#: Default divided power truncation order of the crystalline model
DEFAULT_TRUNCATION = 6

#: Default coefficient degree truncation of polynomial differential forms
DEFAULT_FORM_DEGREE = 8

#: Largest number of module elements the enumeration oracles will visit
MAX_ENUMERATION = 100000

#: Largest number of candidate matrices the conjugacy search will visit
MAX_CONJUGACY_SEARCH = 200000

#: Number of sampled triples in the Witt ghost equivalence bundle
GHOST_SAMPLES = 10000

#: Number of generated gauges in the gauge relation bundle
GAUGE_SAMPLES = 1000

#: Number of random crystals in the round trip bundle
CRYSTAL_SAMPLES = 100

#: Number of random Dieudonne modules in the weight one round trip bundle
DIEUDONNE_SAMPLES = 100

#: Report status strings
STATUS_OK = 'ok'
STATUS_VIOLATED = 'violated'
STATUS_UNDECIDED = 'undecided'
STATUS_OVERFLOW = 'overflow'

#: Exit codes of the command line interface
EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_SCHEMA = 2
EXIT_PRECONDITION = 3
EXIT_OVERFLOW = 4

#: Seed used by the command line interface when none is given
DEFAULT_SEED = 0

#: Largest seed accepted by the command line interface (numpy's limit)
MAX_SEED = 2**32 - 1
