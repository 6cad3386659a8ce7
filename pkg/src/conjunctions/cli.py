"""Command-line front end.

Every subcommand calls into the library and only formats the results.
The default output format can be set with ``CONJUNCTIONS_FORMAT``.
"""

import argparse
import csv
import io
import json
import os
import sys

from . import alignment, coords, kinematics, oracle, series
from .errors import ConjunctionError, UnknownBodyError
from .kinematics import Body, Units
from .ratio import RatioParseError, format_ratio, parse_ratio
from .svg import render_trigon

FORMATS = ("table", "csv", "jsonl", "svg")
FORMAT_ENV = "CONJUNCTIONS_FORMAT"

SERIES_NOTES = """\
notes on the published Jupiter-Saturn numbers:
  The published table steps 245.56 deg per conjunction and quotes it as
  (360/29.46)*19.85, but that expression evaluates to 242.57 deg
  (exactly 119100/491).  The table itself is consistent with 245.56, so
  --advance is explicit; pass --slow-period instead to use the formula.
  For k=22 the text quotes 2.31 deg while 22*245.56 mod 360 = 2.32 deg.
  "C_66 comes close to C_0 within 6.96 years" should read 6.96 degrees:
  66*245.56 mod 360 = 6.96.
"""


class UsageError(Exception):
    pass


def _default_format():
    fmt = os.environ.get(FORMAT_ENV, "table")
    return fmt if fmt in FORMATS else "table"


def _ratio(text):
    try:
        return parse_ratio(text)
    except RatioParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fixed(x, places=2):
    return f"{float(x):.{places}f}"


def _resolve_bodies(args, names):
    """Catalog names, body-file names, or bare period literals."""
    available = dict(kinematics.CATALOGS[args.catalog])
    units = available[next(iter(available))].units if available else Units.YEARS
    if args.bodies:
        available.update(kinematics.load_bodies(args.bodies))
    out = []
    for name in names:
        key = name.lower()
        if key in available:
            out.append(available[key])
            continue
        try:
            period = parse_ratio(name)
        except RatioParseError:
            if name[:1] in "0123456789.+-/":
                raise
            raise UnknownBodyError(name, available) from None
        out.append(Body(name, period, Units(args.units) if args.units else units))
    return out


def _emit(args, text):
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _jsonl(records):
    return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)


def _table(header, rows):
    cols = list(zip(header, *rows)) if rows else [(h,) for h in header]
    widths = [max(len(str(v)) for v in col) for col in cols]
    lines = ["  ".join(str(v).rjust(w) for v, w in zip(line, widths)) for line in [header, *rows]]
    return "\n".join(lines) + "\n"


def _render(args, header, rows, records=None):
    if args.format == "csv":
        return _csv(header, rows)
    if args.format == "jsonl":
        if records is None:
            records = [dict(zip(header, r)) for r in rows]
        return _jsonl(records)
    if args.format == "svg":
        raise UsageError(f"svg output is only available for series and trigon, not {args.command}")
    return _table(header, rows)


# -- subcommands -------------------------------------------------------------


def cmd_synodic(args):
    a, b = _resolve_bodies(args, [args.a, args.b])
    s = kinematics.synodic_period(a, b)
    unit = a.units.value
    if args.format == "table":
        return (
            f"{a.name}-{b.name} synodic period\n"
            f"exact: {format_ratio(s)}\n"
            f"decimal: {_fixed(s)} {unit}\n"
        )
    header = ["pair", "exact", "decimal", "units"]
    return _render(args, header, [[f"{a.name}-{b.name}", format_ratio(s), _fixed(s), unit]])


def _series_params(args):
    advance = args.advance
    if advance is None:
        if args.slow_period is None:
            raise UsageError("give --advance, or --slow-period to derive it")
        advance = series.advance_angle(args.slow_period, args.synodic).degrees
    return series.SeriesParams(
        synodic=args.synodic, advance=advance, radius=args.radius, epoch_longitude=args.epoch
    )


def cmd_series(args):
    params = _series_params(args)
    if args.format == "svg":
        return render_trigon(params, args.count)
    events = series.generate_series(params, args.count)
    header = ["n", "elapsed_years", "longitude_deg", "family"]
    rows = [[e.index, _fixed(e.elapsed), e.longitude.format(args.precision), e.family] for e in events]
    return _render(args, header, rows)


def cmd_trigon(args):
    params = _series_params(args)
    if args.format == "svg":
        return render_trigon(params, args.count)
    pts = series.trigon_points(params, args.count)
    header = ["n", "x", "y"]
    rows = [[n, f"{x:.6f}", f"{y:.6f}"] for n, (x, y) in enumerate(pts)]
    return _render(args, header, rows)


def cmd_cycles(args):
    params = series.SeriesParams(synodic=args.synodic, advance=args.advance)
    found = series.cycle_search(params, args.kmax, args.ang_tol, args.time_tol)
    header = ["k", "angular_offset_deg", "direction", "total_years", "time_offset_years", "kept_for"]
    rows = []
    for c in found:
        why = [n for n, flag in (("tolerance", c.within_tolerance), ("angle-record", c.angular_record),
                                 ("time-record", c.time_record)) if flag]
        rows.append([
            c.k, _fixed(c.angular_offset), "east" if c.east else "west",
            _fixed(c.total_years), _fixed(c.time_offset), "+".join(why),
        ])
    return _render(args, header, rows)


def cmd_align(args):
    report = alignment.alignment_period(_resolve_bodies(args, args.names))
    unit = report.units.value
    header = ["pair", "synodic_exact", "synodic_decimal"]
    rows = [[label, format_ratio(s), _fixed(s, 4)] for label, s in report.pairwise]
    if args.format == "table":
        return (
            _table(header, rows)
            + f"alignment period: {format_ratio(report.period)} {unit} "
            f"({_fixed(report.period)} {unit})\n"
        )
    records = [dict(zip(header, r)) for r in rows]
    records.append({"alignment_period": format_ratio(report.period), "decimal": _fixed(report.period), "units": unit})
    rows.append(["alignment", format_ratio(report.period), _fixed(report.period, 4)])
    return _render(args, header, rows, records)


def cmd_clock(args):
    hands = kinematics.CATALOGS["clock"]
    sec, minute, hour = hands["second"], hands["minute"], hands["hour"]
    mh = kinematics.synodic_period(minute, hour)
    vertices = kinematics.conjunction_longitudes(hour, minute, 11)
    triple = alignment.alignment_period([sec, minute, hour])
    rows = [
        ["minute-hour synodic period (h)", format_ratio(mh), _fixed(mh, 4)],
        *[[f"11-gon vertex {k} (deg)", format_ratio(v.degrees), v.format()] for k, v in enumerate(vertices)],
        *[[f"{label} synodic period (h)", format_ratio(s), _fixed(s, 4)] for label, s in triple.pairwise],
        ["triple conjunction period (h)", format_ratio(triple.period), _fixed(triple.period, 4)],
    ]
    header = ["quantity", "exact", "decimal"]
    return _render(args, header, rows)


def _angle_arg(text, kind):
    try:
        return float(text)
    except ValueError:
        return coords.parse_sexagesimal(text, kind)


def cmd_coords(args):
    phi = args.obliquity
    if args.source == "ecl":
        if args.lon is None or args.lat is None:
            raise UsageError("--from ecl needs --lon and --lat")
        src = coords.EclipticCoord(_angle_arg(args.lon, "degrees"), _angle_arg(args.lat, "degrees"))
        dst = coords.ecl_to_eq(src, phi)
        row = [
            f"{dst.right_ascension:.6f}", coords.format_sexagesimal(dst.right_ascension, "hours"),
            f"{dst.declination:.6f}", coords.format_sexagesimal(dst.declination, "degrees"),
            dst.degenerate,
        ]
        header = ["ra_hours", "ra_hms", "dec_deg", "dec_dms", "pole"]
    else:
        if args.ra is None or args.dec is None:
            raise UsageError("--from eq needs --ra and --dec")
        src = coords.EquatorialCoord(_angle_arg(args.ra, "hours"), _angle_arg(args.dec, "degrees"))
        dst = coords.eq_to_ecl(src, phi)
        row = [
            f"{dst.longitude:.6f}", coords.format_sexagesimal(dst.longitude, "degrees"),
            f"{dst.latitude:.6f}", coords.format_sexagesimal(dst.latitude, "degrees"),
            dst.degenerate,
        ]
        header = ["lon_deg", "lon_dms", "lat_deg", "lat_dms", "pole"]
    return _render(args, header, [row])


def cmd_oracle(args):
    bodies = _resolve_bodies(args, args.names)
    if args.dt is None:
        cfg = oracle.SimConfig.for_bodies(bodies, args.t_end, args.tol)
    else:
        cfg = oracle.SimConfig(args.dt, args.t_end, args.tol)
    if args.align or len(bodies) > 2:
        hit = oracle.detect_alignment(bodies, args.ang_tol, cfg)
        header = ["first_alignment", "max_separation_deg"]
        rows = [["none found", ""]] if hit is None else [[f"{hit.time:.9f}", f"{hit.separation:.6f}"]]
        return _render(args, header, rows)
    times = oracle.detect_pair_conjunctions(bodies[0], bodies[1], cfg)
    return _render(args, ["k", "time"], [[k, f"{t:.9f}"] for k, t in enumerate(times, 1)])


# -- parser ------------------------------------------------------------------


def _add_common(p, bodies=False):
    p.add_argument("--format", choices=FORMATS, default=_default_format(),
                   help=f"output format (default: ${FORMAT_ENV} or table)")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    if bodies:
        p.add_argument("--catalog", choices=sorted(kinematics.CATALOGS), default="coarse",
                       help="period set the body names refer to (default: coarse)")
        p.add_argument("--bodies", metavar="FILE",
                       help="extra body definitions, one 'name period [units]' per line")
        p.add_argument("--units", choices=[u.value for u in Units],
                       help="units for bodies given as bare periods")


def _add_series_args(p):
    p.add_argument("--synodic", type=_ratio, required=True, help="time between conjunctions (years)")
    p.add_argument("--advance", type=_ratio, help="longitude step per conjunction (degrees)")
    p.add_argument("--slow-period", type=_ratio,
                   help="derive the step as (360/slow_period)*synodic instead of --advance")
    p.add_argument("--count", type=int, default=9)
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--epoch", type=_ratio, default=0, help="longitude of C_0 (degrees)")
    p.add_argument("--precision", type=int, default=2, help="decimals for longitudes")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="conjunctions",
        description="Clock-model conjunction calculator with exact rational arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synodic", help="synodic period of two bodies")
    p.add_argument("a")
    p.add_argument("b")
    _add_common(p, bodies=True)
    p.set_defaults(func=cmd_synodic)

    for name, func, helptext in (
        ("series", cmd_series, "successive conjunctions in time and longitude"),
        ("trigon", cmd_trigon, "plane positions of successive conjunctions"),
    ):
        p = sub.add_parser(name, help=helptext, description=helptext, epilog=SERIES_NOTES,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        _add_series_args(p)
        _add_common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("cycles", help="search cycle lengths that return near the start",
                       epilog=SERIES_NOTES, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--synodic", type=_ratio, required=True)
    p.add_argument("--advance", type=_ratio, required=True)
    p.add_argument("--kmax", type=int, default=100)
    p.add_argument("--ang-tol", type=float, default=0.0, help="degrees")
    p.add_argument("--time-tol", type=float, default=0.0, help="years")
    _add_common(p)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("align", help="period of simultaneous conjunction of several bodies")
    p.add_argument("names", nargs="+", metavar="BODY")
    _add_common(p, bodies=True)
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("clock", help="clock-hand conjunctions (12/11 h, 11-gon, 1/59 h, 12 h)")
    _add_common(p)
    p.set_defaults(func=cmd_clock)

    p = sub.add_parser("coords", help="ecliptic <-> equatorial conversion")
    p.add_argument("--from", dest="source", choices=("ecl", "eq"), required=True)
    p.add_argument("--lon", help="ecliptic longitude, degrees or D° M′ S″")
    p.add_argument("--lat", help="ecliptic latitude")
    p.add_argument("--ra", help="right ascension, hours or Hh Mm Ss")
    p.add_argument("--dec", help="declination")
    p.add_argument("--obliquity", type=float, default=coords.DEFAULT_OBLIQUITY)
    _add_common(p)
    p.set_defaults(func=cmd_coords)

    p = sub.add_parser("oracle", help="brute-force simulation cross-check")
    p.add_argument("names", nargs="+", metavar="BODY")
    p.add_argument("--t-end", type=float, required=True)
    p.add_argument("--dt", type=float)
    p.add_argument("--tol", type=float, default=1e-9, help="bisection time tolerance")
    p.add_argument("--align", action="store_true", help="find the first alignment of all bodies")
    p.add_argument("--ang-tol", type=float, default=0.01, help="alignment tolerance, degrees")
    _add_common(p, bodies=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        _emit(args, args.func(args))
    except (UsageError, UnknownBodyError, RatioParseError) as exc:
        print(f"conjunctions {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (ConjunctionError, ValueError, ZeroDivisionError) as exc:
        print(f"conjunctions {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
