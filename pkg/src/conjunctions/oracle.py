"""Brute-force conjunction finder used to cross-check the closed forms.

Bodies are stepped forward on a uniform time grid.  Their relative angle is
unwrapped into a continuous signal, a conjunction is a crossing of a
multiple of 360 deg, and each crossing is refined by bisection.  Phases are
evaluated as ``(t / period) mod 1`` in exact rational arithmetic from the
float time, so long horizons do not lose precision to large angles.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import math

from .kinematics import FULL_TURN, angular_velocity, circular_distance

HALF_TURN = FULL_TURN // 2


@dataclass(frozen=True)
class SimConfig:
    dt: float
    t_end: float
    refine_tol: float = 1e-9

    def __post_init__(self):
        if not 0 < self.dt < self.t_end:
            raise ValueError("need 0 < dt < t_end")
        if not 0 < self.refine_tol < self.dt:
            raise ValueError("need 0 < refine_tol < dt")

    @classmethod
    def for_bodies(cls, bodies, t_end, refine_tol=1e-9):
        """dt = S/100 for a pair, (shortest period)/100 otherwise."""
        bodies = list(bodies)
        if len(bodies) == 2:
            step = _relative_period(*bodies) / 100
        else:
            step = min(b.period for b in bodies) / 100
        return cls(float(step), float(t_end), refine_tol)


@dataclass(frozen=True)
class AlignmentHit:
    time: float
    separation: float  # largest pairwise separation at ``time``, degrees


def _relative_period(a, b):
    rate = abs(angular_velocity(a) - angular_velocity(b))
    if rate == 0:
        raise ValueError(f"{a.name} and {b.name} have the same period")
    return FULL_TURN / rate


def _phase(body, t):
    return (Fraction(t) / body.period) % 1 * FULL_TURN


def _signed_diff(a, b, t):
    """Wrapped ``theta_a - theta_b`` in [-180, 180)."""
    t = Fraction(t)
    return _wrap180((t / a.period - t / b.period) % 1 * FULL_TURN)


def _wrap180(x):
    return (x + HALF_TURN) % FULL_TURN - HALF_TURN


def _grid(cfg):
    n = math.floor(cfg.t_end / cfg.dt)
    times = [i * cfg.dt for i in range(1, n + 1)]
    if not times or times[-1] < cfg.t_end:
        times.append(cfg.t_end)
    return times


def _crossed(u0, u1):
    """Multiples m with 360*m in the half-open span from u0 to u1."""
    if u1 > u0:
        return range(math.floor(u0 / FULL_TURN) + 1, math.floor(u1 / FULL_TURN) + 1)
    return range(math.ceil(u1 / FULL_TURN), math.ceil(u0 / FULL_TURN))


def _bisect(f, lo, hi, tol):
    """Shrink [lo, hi] around the sign change of f; f(lo) must be non-zero."""
    neg = f(lo) < 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        v = f(mid)
        if v != 0 and (v < 0) == neg:
            lo = mid
        else:
            hi = mid
    return lo, hi


def detect_pair_conjunctions(a, b, cfg):
    """Times in (0, t_end] at which ``a`` and ``b`` share a longitude.

    Both bodies start at longitude 0 at t = 0 (not reported).
    """
    if cfg.dt >= _relative_period(a, b) / 2:
        raise ValueError("step too coarse for Nyquist-style guarantee: need dt < S/2")
    events = []
    t0, w0, u0 = 0.0, Fraction(0), Fraction(0)
    for t1 in _grid(cfg):
        w1 = _signed_diff(a, b, t1)
        u1 = u0 + _wrap180(w1 - w0)
        for m in _crossed(u0, u1):
            def h(t, t0=t0, w0=w0, u0=u0, m=m):
                return u0 + _wrap180(_signed_diff(a, b, t) - w0) - FULL_TURN * m
            lo, hi = _bisect(h, t0, t1, cfg.refine_tol)
            events.append((lo + hi) / 2)
        t0, w0, u0 = t1, w1, u1
    return events


def max_separation(bodies, t):
    t = Fraction(t)
    phases = [_phase(b, t) for b in bodies]
    return max(circular_distance(p, q) for p, q in combinations(phases, 2))


def detect_alignment(bodies, angular_tol, cfg):
    """Earliest t > 0 with every pairwise separation <= ``angular_tol`` degrees.

    Conjunctions of the fastest-separating pair are found first; any
    alignment must lie within ``angular_tol / rate`` of one of them.  Near
    such a conjunction the largest separation is convex in t, so it is
    minimised by ternary search and the first time it drops to the tolerance
    is located by bisection.  Returns None when nothing is found by t_end.
    """
    bodies = list(bodies)
    if len(bodies) < 2:
        raise ValueError("alignment needs at least two bodies")
    if angular_tol <= 0:
        raise ValueError("angular_tol must be positive")
    rates = {
        (a, b): float(abs(angular_velocity(a) - angular_velocity(b)))
        for a, b in combinations(bodies, 2)
    }
    (a, b), rate = max(rates.items(), key=lambda kv: kv[1])
    fastest = max(rates.values())
    half_width = angular_tol / rate

    def excess(t):
        return float(max_separation(bodies, t)) - angular_tol

    for tk in detect_pair_conjunctions(a, b, cfg):
        if excess(tk) - fastest * half_width > 0:
            continue
        lo, hi = max(tk - half_width, 0.0), tk + half_width
        left, right = lo, hi
        while right - left > cfg.refine_tol:
            m1 = left + (right - left) / 3
            m2 = right - (right - left) / 3
            if excess(m1) <= excess(m2):
                right = m2
            else:
                left = m1
        t_min = (left + right) / 2
        if excess(t_min) > 0:
            continue
        t_hit = t_min
        if excess(lo) <= 0:
            t_hit = lo
        else:
            # lo is outside the tolerance, t_hit inside
            while t_hit - lo > cfg.refine_tol:
                mid = (lo + t_hit) / 2
                if excess(mid) <= 0:
                    t_hit = mid
                else:
                    lo = mid
        return AlignmentHit(t_hit, float(max_separation(bodies, t_hit)))
    return None
