"""Planetary conjunctions in the clock model of uniform circular motion."""

from .alignment import AlignmentReport, alignment_period
from .errors import ConjunctionError, DegeneratePairError, UnitMismatchError, UnknownBodyError
from .kinematics import (
    CATALOGS,
    Angle,
    Body,
    Units,
    angular_velocity,
    position,
    relative_angular_velocity,
    synodic_period,
)
from .ratio import Ratio, format_ratio, lcm_ratio, make, parse_ratio
from .series import (
    ConjunctionEvent,
    CycleCandidate,
    SeriesParams,
    advance_angle,
    classify_families,
    cycle_search,
    generate_series,
    trigon_points,
)

__version__ = "0.1.0"
