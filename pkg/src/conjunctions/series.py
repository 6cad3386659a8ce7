"""Successive conjunctions of a pair: longitudes, trigon geometry and cycles.

Consecutive conjunctions are ``synodic`` time units apart and the meeting
point advances by ``advance`` degrees each time.  The advance is an explicit
parameter.  The published Jupiter-Saturn table uses 245.56 deg, while
evaluating (360/29.46) * 19.85 gives 242.57 deg; :func:`advance_angle`
computes the latter and the caller chooses which to feed in.

All arithmetic is generic over Python numbers: floats give double-precision
results, Fractions give exact ones (e.g. exact trigon closure for 240 deg).
"""

from dataclasses import dataclass
from fractions import Fraction
import math
import numbers

from .kinematics import FULL_TURN, Angle, circular_distance, wrap_degrees


def _num(x):
    # ints become Fractions so integer inputs stay exact
    if isinstance(x, numbers.Rational):
        return Fraction(x)
    return float(x)


@dataclass(frozen=True)
class SeriesParams:
    synodic: object
    advance: object
    radius: float = 1.0
    epoch_longitude: object = 0

    def __post_init__(self):
        if self.synodic <= 0:
            raise ValueError("synodic period must be positive")
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        object.__setattr__(self, "synodic", _num(self.synodic))
        object.__setattr__(self, "advance", _num(self.advance))
        object.__setattr__(self, "epoch_longitude", wrap_degrees(_num(self.epoch_longitude)))


@dataclass(frozen=True)
class ConjunctionEvent:
    index: int
    elapsed: object
    longitude: Angle
    family: int


@dataclass(frozen=True)
class CycleCandidate:
    k: int
    angular_offset: object
    time_offset: object
    total_years: object
    # True when k*advance lands east (counter-clockwise) of the start
    east: bool
    within_tolerance: bool = False
    angular_record: bool = False
    time_record: bool = False


def advance_angle(slow_period, synodic):
    """Longitude swing of the slower body between consecutive conjunctions."""
    slow_period, synodic = _num(slow_period), _num(synodic)
    if slow_period <= 0 or synodic < 0:
        raise ValueError("periods must be positive")
    return Angle(FULL_TURN / slow_period * synodic)


def event(params, n):
    return ConjunctionEvent(
        index=n,
        elapsed=n * params.synodic,
        longitude=Angle(params.epoch_longitude + n * params.advance),
        family=n % 3,
    )


def generate_series(params, count):
    if count < 1:
        raise ValueError("count must be at least 1")
    return [event(params, n) for n in range(count)]


def trigon_points(params, count):
    """Plane positions ``r * (cos L_n, sin L_n)`` of the first ``count`` events."""
    points = []
    for ev in generate_series(params, count):
        rad = math.radians(float(ev.longitude.degrees))
        points.append((params.radius * math.cos(rad), params.radius * math.sin(rad)))
    return points


def classify_families(events):
    """Split events into the three residue classes of their index mod 3."""
    families = ([], [], [])
    for ev in events:
        families[ev.index % 3].append(ev)
    return families


def family_step(advance):
    """Per-member drift of each family, ``3 * advance`` reduced mod 360."""
    return wrap_degrees(3 * _num(advance))


def cycle_candidate(params, k):
    total = k * params.synodic
    m = wrap_degrees(k * params.advance)
    return CycleCandidate(
        k=k,
        angular_offset=circular_distance(m),
        time_offset=abs(total - round(total)),
        total_years=total,
        east=m <= FULL_TURN / 2,
    )


def cycle_search(params, k_max, angular_tol=0.0, time_tol=0.0):
    """Cycle lengths ``k <= k_max`` that bring the series back in sync.

    A cycle is kept when it is within both tolerances (back near the start
    longitude *and* near a whole number of years), or when it sets a new
    strict record for either offset on its own.  Results are sorted by k and
    flagged with the reason(s) they were kept.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if angular_tol < 0 or time_tol < 0:
        raise ValueError("tolerances must be non-negative")
    best_ang = best_time = None
    found = []
    for k in range(1, k_max + 1):
        c = cycle_candidate(params, k)
        ang_rec = best_ang is None or c.angular_offset < best_ang
        time_rec = best_time is None or c.time_offset < best_time
        within = c.angular_offset <= angular_tol and c.time_offset <= time_tol
        if ang_rec:
            best_ang = c.angular_offset
        if time_rec:
            best_time = c.time_offset
        if within or ang_rec or time_rec:
            found.append(
                CycleCandidate(
                    c.k, c.angular_offset, c.time_offset, c.total_years, c.east,
                    within_tolerance=within, angular_record=ang_rec, time_record=time_rec,
                )
            )
    return found
