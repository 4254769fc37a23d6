"""Dirac-equation numerics: operator algebra, zitterbewegung and pair creation."""

__version__ = "0.1.0"

from .constants import ATOMIC, NATURAL, SI, PhysConsts, UnitSystem, preset  # noqa: E402
from .errors import *  # noqa: E402,F401,F403
