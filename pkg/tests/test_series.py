from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from conjunctions.series import (
    SeriesParams,
    advance_angle,
    classify_families,
    cycle_candidate,
    cycle_search,
    family_step,
    generate_series,
    trigon_points,
)

PUBLISHED = SeriesParams(synodic=19.85, advance=245.56)
COARSE = SeriesParams(synodic=20, advance=240)

TABLE = [
    (0.00, 0.00), (245.56, 19.85), (131.12, 39.70), (16.68, 59.55), (262.24, 79.40),
    (147.80, 99.25), (33.36, 119.10), (278.92, 138.95), (164.48, 158.80),
]


def test_advance_angle_coarse_is_exact():
    assert advance_angle(30, 20).degrees == 240
    assert isinstance(advance_angle(30, 20).degrees, Fraction)
    assert advance_angle(29.46, 0).degrees == 0


def test_advance_angle_refined_formula():
    a = advance_angle(Fraction("29.46"), Fraction("19.85")).degrees
    assert a == Fraction(119100, 491)
    assert float(a) == pytest.approx(242.566191, abs=1e-6)
    # the published 245.56 is not what this expression gives
    assert abs(float(a) - 245.56) > 2.9


def test_series_reproduces_table():
    events = generate_series(PUBLISHED, 9)
    for ev, (lon, years) in zip(events, TABLE):
        assert float(ev.longitude) == pytest.approx(lon, abs=0.01)
        assert ev.elapsed == pytest.approx(years, abs=0.01)
        assert ev.longitude.format() == f"{lon:.2f}"


def test_series_epoch_and_closure():
    first = generate_series(PUBLISHED, 1)
    assert len(first) == 1 and first[0].longitude.degrees == 0 and first[0].elapsed == 0
    third = generate_series(COARSE, 4)[3]
    assert third.longitude.degrees == 0 and third.elapsed == 60


def test_series_epoch_longitude_shifts_everything():
    shifted = generate_series(SeriesParams(synodic=20, advance=240, epoch_longitude=300), 3)
    assert [e.longitude.degrees for e in shifted] == [300, 180, 60]


def test_series_count_must_be_positive():
    with pytest.raises(ValueError):
        generate_series(PUBLISHED, 0)


@pytest.mark.parametrize("kwargs", [dict(synodic=0, advance=1), dict(synodic=1, advance=1, radius=0)])
def test_params_validated(kwargs):
    with pytest.raises(ValueError):
        SeriesParams(**kwargs)


@given(
    st.floats(0.1, 100, allow_nan=False),
    st.floats(-720, 720, allow_nan=False),
    st.integers(2, 60),
)
def test_longitude_recurrence(synodic, advance, count):
    events = generate_series(SeriesParams(synodic=synodic, advance=advance), count)
    for prev, nxt in zip(events, events[1:]):
        step = (float(nxt.longitude) - float(prev.longitude) - advance) % 360
        assert min(step, 360 - step) < 1e-8
        assert nxt.elapsed == pytest.approx(nxt.index * synodic)
        assert nxt.family == nxt.index % 3


def test_trigon_points():
    assert trigon_points(PUBLISHED, 1) == [(1.0, 0.0)]
    x, y = trigon_points(SeriesParams(synodic=20, advance=240), 2)[1]
    assert x == pytest.approx(-0.5, abs=1e-12)
    assert y == pytest.approx(-math.sqrt(3) / 2, abs=1e-12)
    x, y = trigon_points(PUBLISHED, 4)[3]
    assert x == pytest.approx(math.cos(math.radians(16.68)), abs=1e-9)
    assert y == pytest.approx(math.sin(math.radians(16.68)), abs=1e-9)
    assert x > 0 and y > 0
    big = trigon_points(SeriesParams(synodic=20, advance=240, radius=9.5), 1)
    assert big == [(9.5, 0.0)]


def test_families():
    fams = classify_families(generate_series(PUBLISHED, 9))
    assert [[e.index for e in f] for f in fams] == [[0, 3, 6], [1, 4, 7], [2, 5, 8]]
    single = classify_families(generate_series(PUBLISHED, 1))
    assert [len(f) for f in single] == [1, 0, 0]


def test_family_members_drift_by_constant_step():
    step = family_step(245.56)
    assert step == pytest.approx(16.68, abs=1e-9)
    for fam in classify_families(generate_series(PUBLISHED, 30)):
        for a, b in zip(fam, fam[1:]):
            d = (float(b.longitude) - float(a.longitude)) % 360
            assert d == pytest.approx(step, abs=1e-8)
            assert b.elapsed - a.elapsed == pytest.approx(59.55)


def test_cycle_candidate_fields():
    c1 = cycle_candidate(PUBLISHED, 1)
    assert c1.angular_offset == pytest.approx(min(245.56, 360 - 245.56))
    assert not c1.east
    c3 = cycle_candidate(PUBLISHED, 3)
    assert c3.angular_offset == pytest.approx(16.68, abs=0.01)
    assert c3.east
    c22 = cycle_candidate(PUBLISHED, 22)
    assert c22.angular_offset == pytest.approx(2.32, abs=0.02)
    assert c22.total_years == pytest.approx(436.7, abs=0.1)
    c66 = cycle_candidate(PUBLISHED, 66)
    assert c66.angular_offset == pytest.approx(6.96, abs=0.02)
    assert c66.total_years == pytest.approx(1310.1, abs=0.2)


def test_cycle_search_records():
    found = cycle_search(PUBLISHED, 66)
    ang = [c.k for c in found if c.angular_record]
    time = [c.k for c in found if c.time_record]
    assert ang == [1, 3, 19, 22]
    assert time[:3] == [1, 6, 7]
    assert [c.k for c in found] == sorted(c.k for c in found)


def test_cycle_search_k6_first_near_whole_year():
    found = {c.k: c for c in cycle_search(PUBLISHED, 6)}
    assert found[6].time_record
    assert found[6].total_years == pytest.approx(119.10, abs=0.01)
    assert min(cycle_candidate(PUBLISHED, k).time_offset for k in range(1, 6)) > found[6].time_offset


def test_cycle_search_tolerance_window():
    found = cycle_search(PUBLISHED, 70, angular_tol=7, time_tol=0.15)
    hits = [c.k for c in found if c.within_tolerance]
    assert 66 in hits
    for c in found:
        if c.within_tolerance:
            assert c.angular_offset <= 7 and c.time_offset <= 0.15


def test_cycle_search_validation():
    with pytest.raises(ValueError):
        cycle_search(PUBLISHED, 0)
    with pytest.raises(ValueError):
        cycle_search(PUBLISHED, 5, angular_tol=-1)


@pytest.mark.parametrize("advance, q", [(240, 3), (90, 4)])
def test_exact_closure_examples(advance, q):
    found = cycle_search(SeriesParams(synodic=1, advance=advance), 12)
    zero = [c.k for c in found if c.angular_offset == 0]
    assert zero and zero[0] == q


@given(st.integers(1, 40), st.integers(1, 40))
def test_exact_closure_rational_advance(p, q):
    adv = Fraction(360 * p, q)
    # k*adv is a multiple of 360 first at k = reduced denominator of p/q
    q_red = Fraction(p, q).denominator
    params = SeriesParams(synodic=1, advance=adv)
    offsets = [cycle_candidate(params, k).angular_offset for k in range(1, q_red + 1)]
    assert offsets[-1] == 0
    assert all(o > 0 for o in offsets[:-1])


@given(st.floats(0.01, 359.99), st.floats(0.1, 50), st.integers(1, 200))
def test_cycle_offsets_bounded_and_records_monotone(advance, synodic, k_max):
    found = cycle_search(SeriesParams(synodic=synodic, advance=advance), k_max)
    rec = [c.angular_offset for c in found if c.angular_record]
    assert rec == sorted(rec, reverse=True)
    for c in found:
        assert 0 <= c.angular_offset <= 180
        assert 0 <= c.time_offset <= 0.5
