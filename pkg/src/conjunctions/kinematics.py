"""Uniform circular motion of bodies and the synodic period of a pair."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
import numbers

from .errors import DegeneratePairError, UnitMismatchError, UnknownBodyError
from .ratio import Ratio, parse_ratio

FULL_TURN = 360


class Units(str, Enum):
    HOURS = "hours"
    YEARS = "years"


@dataclass(frozen=True)
class Body:
    """A body in uniform circular motion; ``period`` in ``units``."""

    name: str
    period: Ratio
    units: Units = Units.YEARS

    def __post_init__(self):
        # rationals stay exact; a float period is kept as a general real
        if isinstance(self.period, str):
            object.__setattr__(self, "period", parse_ratio(self.period))
        elif isinstance(self.period, numbers.Rational):
            object.__setattr__(self, "period", Fraction(self.period))
        object.__setattr__(self, "units", Units(self.units))
        if self.period <= 0:
            raise ValueError(f"{self.name}: period must be positive, got {self.period}")


def wrap_degrees(value):
    """Reduce an angle into [0, 360); exact for Fraction input."""
    return value % FULL_TURN


def circular_distance(a, b=0):
    """Unsigned separation of two directions on the circle, in [0, 180]."""
    m = wrap_degrees(a - b)
    return min(m, FULL_TURN - m)


@dataclass(frozen=True)
class Angle:
    """Direction in degrees, normalised to [0, 360).

    ``degrees`` stays a Fraction when built from rationals; ``precision``
    only affects :meth:`format`.
    """

    degrees: object
    precision: int = 2

    def __post_init__(self):
        object.__setattr__(self, "degrees", wrap_degrees(self.degrees))

    def __float__(self):
        return float(self.degrees)

    def format(self, precision=None):
        p = self.precision if precision is None else precision
        return f"{float(self.degrees):.{p}f}"


def angular_velocity(body):
    """Degrees per time unit, ``360 / period``."""
    return FULL_TURN / body.period


def _check_units(a, b):
    if a.units != b.units:
        raise UnitMismatchError(
            f"{a.name} is in {a.units.value} but {b.name} is in {b.units.value}"
        )


def relative_angular_velocity(p, e):
    """Signed ``omega_p - omega_e``; bodies must share units."""
    _check_units(p, e)
    return angular_velocity(p) - angular_velocity(e)


def position(body, t):
    """Longitude of ``body`` at time ``t`` when it starts at 0."""
    if t < 0:
        raise ValueError("time must be non-negative")
    return Angle(angular_velocity(body) * t)


def synodic_period(fast, slow):
    """Time between successive conjunctions, ``t_a t_b / (t_b - t_a)``.

    Argument order does not matter; the faster body is picked internally.
    """
    _check_units(fast, slow)
    if fast.period == slow.period:
        raise DegeneratePairError(fast.name, slow.name)
    if fast.period > slow.period:
        fast, slow = slow, fast
    return fast.period * slow.period / (slow.period - fast.period)


def conjunction_longitudes(a, b, count):
    """Where the first ``count`` conjunctions of ``a`` and ``b`` happen.

    Starts with the shared longitude 0 at t = 0; for the clock's minute and
    hour hands the eleven results are the vertices of a regular 11-gon.
    """
    s = synodic_period(a, b)
    return [position(a, k * s) for k in range(count)]


def pairwise_synodic(bodies):
    """``[((a, b), S_ab), ...]`` over every unordered pair, in input order."""
    return [((a, b), synodic_period(a, b)) for a, b in combinations(bodies, 2)]


def _catalog(units, **periods):
    return {name: Body(name, parse_ratio(p), units) for name, p in periods.items()}


# Mars at 1.8 y is the coarse value used for the triple-conjunction example;
# the real sidereal period (~1.88 y) is deliberately absent.
CATALOGS = {
    "clock": _catalog(Units.HOURS, second="1/60", minute="1", hour="12"),
    "coarse": _catalog(Units.YEARS, mars="9/5", jupiter="12", saturn="30"),
    "refined": _catalog(Units.YEARS, jupiter="11.86", saturn="29.46"),
    "alt": _catalog(Units.YEARS, mars="1.8", jupiter="11.8", saturn="29.5"),
}


def lookup(name, catalog="coarse"):
    try:
        bodies = CATALOGS[catalog]
    except KeyError:
        raise UnknownBodyError(catalog, CATALOGS) from None
    try:
        return bodies[name.lower()]
    except KeyError:
        raise UnknownBodyError(name, bodies) from None


def parse_bodies(lines):
    """Read body definitions, one ``name period units`` per line.

    Blank lines and ``#`` comments are skipped; units default to years.
    """
    bodies = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'name period [units]', got {raw!r}")
        name, period = fields[0], parse_ratio(fields[1])
        units = Units(fields[2]) if len(fields) == 3 else Units.YEARS
        bodies[name.lower()] = Body(name.lower(), period, units)
    return bodies


def load_bodies(path):
    with open(path, encoding="utf-8") as fh:
        return parse_bodies(fh)
