"""Simultaneous conjunction of several bodies (e.g. a triple conjunction).

All bodies line up again after the least common integer multiple of the
pairwise synodic periods.
"""

from dataclasses import dataclass
from fractions import Fraction
import numbers

from .errors import ConjunctionError
from .kinematics import pairwise_synodic, synodic_period
from .ratio import lcm_ratios


@dataclass(frozen=True)
class AlignmentReport:
    bodies: tuple
    pairwise: tuple  # ((label, synodic), ...)
    period: Fraction

    @property
    def units(self):
        return self.bodies[0].units


def alignment_period(bodies):
    bodies = tuple(bodies)
    if len(bodies) < 2:
        raise ConjunctionError("alignment needs at least two bodies")
    for b in bodies:
        if not isinstance(b.period, numbers.Rational):
            raise ConjunctionError(
                f"{b.name}: period must be rational; with incommensurable periods "
                "a common alignment period need not exist"
            )
    pairs = pairwise_synodic(bodies)
    # lcm over the chain (b0,b1), (b1,b2), ... already spans every body; the
    # full set of pairs must not change it.
    chain = [synodic_period(a, b) for a, b in zip(bodies, bodies[1:])]
    period = lcm_ratios(s for _, s in pairs)
    if lcm_ratios(chain) != period:
        raise AssertionError(
            f"inconsistent alignment period: {lcm_ratios(chain)} vs {period}"
        )
    return AlignmentReport(
        bodies=bodies,
        pairwise=tuple((f"{a.name}-{b.name}", s) for (a, b), s in pairs),
        period=period,
    )
