"""
Error types for orbitclosure.

Every error carries the exit code the CLI uses when it surfaces.
"""


class OrbitClosureError(Exception):
    """Base class for all orbitclosure errors"""

    exit_code = 1


class ParseError(OrbitClosureError):
    """A problem document or scalar string could not be read"""

    exit_code = 3


class NotAdmissible(OrbitClosureError):
    """Relations are not length-homogeneous admissible, or J is not nilpotent"""

    exit_code = 4


class GeneratorNotInRadical(OrbitClosureError):
    """A generator of C has a nonzero component on the top idempotent"""

    exit_code = 5


class NotOverBaseField(OrbitClosureError):
    """A classification needs roots that do not lie in the rationals"""

    exit_code = 6


class DenominatorVanishes(OrbitClosureError):
    """A specialization hits a pole"""

    exit_code = 7


class RankDeficient(OrbitClosureError):
    """Family rows are linearly dependent over the fraction field"""

    exit_code = 8


class LimitNotStable(OrbitClosureError):
    """A computed limit is not a submodule of the expected dimension"""

    exit_code = 9


class FormulaMismatch(OrbitClosureError):
    """The two orbit dimension formulas disagree"""

    exit_code = 10


class DimensionMismatch(OrbitClosureError):
    """Two points of different Grassmannians were compared"""

    exit_code = 11


class InconclusiveClassification(OrbitClosureError):
    """Sampling could not classify a symbolic limit"""

    exit_code = 12


class InvalidPoint(OrbitClosureError):
    """A blow-up centre references unknown curves or crossings"""

    exit_code = 13


class NotMinusOne(OrbitClosureError):
    """Only curves of self-intersection -1 can be blown down"""

    exit_code = 14
