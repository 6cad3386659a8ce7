"""Ecliptic and equatorial coordinates on the celestial sphere.

The ecliptic-to-equatorial change of frame is the rotation about the
vernal-equinox axis by the obliquity phi::

    [1     0       0   ]
    [0   cos phi  sin phi]
    [0  -sin phi  cos phi]

Coordinates are treated as row vectors, ``v_eq = v_ecl @ M``; the inverse is
``v_ecl = v_eq @ M.T``.  With this reading the ecliptic north pole lands at
RA 18h, dec +66.6 deg and the summer solstice point (longitude 90) at
dec +23.4 deg, which matches the sky.
"""

from dataclasses import dataclass
from fractions import Fraction
import math
import re

import numpy as np

from .kinematics import circular_distance

DEFAULT_OBLIQUITY = 23.4
HOURS_TO_DEG = 15
_POLE_EPS = 1e-12


def check_obliquity(phi):
    if not 0 <= phi < 90:
        raise ValueError(f"obliquity must be in [0, 90) degrees, got {phi}")
    return float(phi)


@dataclass(frozen=True)
class EclipticCoord:
    longitude: float
    latitude: float
    # set when the point is a pole and the longitude is a convention (0)
    degenerate: bool = False

    def __post_init__(self):
        if not -90 <= self.latitude <= 90:
            raise ValueError(f"latitude out of range: {self.latitude}")
        object.__setattr__(self, "longitude", self.longitude % 360)


@dataclass(frozen=True)
class EquatorialCoord:
    right_ascension: float  # hours
    declination: float
    degenerate: bool = False

    def __post_init__(self):
        if not -90 <= self.declination <= 90:
            raise ValueError(f"declination out of range: {self.declination}")
        object.__setattr__(self, "right_ascension", self.right_ascension % 24)


def ecl_to_eq_matrix(obliquity=DEFAULT_OBLIQUITY):
    phi = math.radians(check_obliquity(obliquity))
    c, s = math.cos(phi), math.sin(phi)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, s], [0.0, -s, c]])


def _to_cartesian(lon_deg, lat_deg):
    lon, lat = math.radians(lon_deg), math.radians(lat_deg)
    return np.array([math.cos(lat) * math.cos(lon), math.cos(lat) * math.sin(lon), math.sin(lat)])


def _to_spherical(v):
    x, y, z = v
    rho = math.hypot(x, y)
    lat = math.degrees(math.atan2(z, rho))
    if rho < _POLE_EPS:
        return 0.0, math.copysign(90.0, z), True
    return math.degrees(math.atan2(y, x)) % 360, lat, False


def ecl_to_eq(c, obliquity=DEFAULT_OBLIQUITY):
    v = _to_cartesian(c.longitude, c.latitude) @ ecl_to_eq_matrix(obliquity)
    ra, dec, pole = _to_spherical(v)
    return EquatorialCoord(ra / HOURS_TO_DEG, dec, pole)


def eq_to_ecl(c, obliquity=DEFAULT_OBLIQUITY):
    v = _to_cartesian(c.right_ascension * HOURS_TO_DEG, c.declination) @ ecl_to_eq_matrix(obliquity).T
    lon, lat, pole = _to_spherical(v)
    return EclipticCoord(lon, lat, pole)


_UNITS = {
    "hours": ("h", "m", "s"),
    "degrees": ("°", "′", "″"),
}
# ASCII stand-ins accepted on input
_ALIASES = {
    "hours": (r"h", r"m", r"s"),
    "degrees": (r"°|d", r"′|'|m", r"″|\"|''|s"),
}


def _pattern(kind):
    a, b, c = _ALIASES[kind]
    return re.compile(
        rf"^\s*([+-]?)(\d+)\s*(?:{a})\s*(\d+)\s*(?:{b})\s*(\d+(?:\.\d*)?)\s*(?:{c})\s*$"
    )


_PATTERNS = {kind: _pattern(kind) for kind in _UNITS}


def parse_sexagesimal(text, kind="degrees"):
    """``"20h 10m 58s"`` -> 20.18278 (hours); ``"300° 26′ 17″"`` -> 300.43806."""
    if kind not in _PATTERNS:
        raise ValueError(f"kind must be 'hours' or 'degrees', got {kind!r}")
    m = _PATTERNS[kind].match(text)
    if not m:
        raise ValueError(f"malformed sexagesimal {kind} value: {text!r}")
    sign, whole, minutes, seconds = m.groups()
    minutes, seconds = int(minutes), Fraction(seconds)
    if minutes >= 60 or seconds >= 60:
        raise ValueError(f"minutes and seconds must be below 60: {text!r}")
    value = int(whole) + Fraction(minutes, 60) + seconds / 3600
    return float(-value if sign == "-" else value)


def format_sexagesimal(value, kind="degrees"):
    """Format to whole seconds, e.g. ``"20h 10m 58s"``."""
    u1, u2, u3 = _UNITS[kind]
    total = round(abs(value) * 3600)
    whole, rem = divmod(total, 3600)
    minutes, seconds = divmod(rem, 60)
    sign = "-" if value < 0 and total else ""
    return f"{sign}{whole}{u1} {minutes}{u2} {seconds}{u3}"


def is_ecliptic_conjunction(a, b, tol=0.0):
    """Same ecliptic longitude within ``tol`` degrees; latitude ignored."""
    return circular_distance(a.longitude, b.longitude) <= tol


def is_equatorial_conjunction(a, b, tol=0.0):
    """Same right ascension within ``tol`` hours; declination ignored."""
    return (
        circular_distance(a.right_ascension * HOURS_TO_DEG, b.right_ascension * HOURS_TO_DEG)
        <= tol * HOURS_TO_DEG
    )
