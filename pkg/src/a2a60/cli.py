"""Command-line front end.

Four subcommands: `fit` (estimate a path-loss law from aggregated
measurements), `compare` (evaluate the fitted law against the terrestrial
reference models and free space over a distance grid), `sample` (draw
shadowed path-loss values), and `report` (regenerate the campaign tables
side by side with the published values).

Results go to stdout, diagnostics to stderr; the exit code is nonzero iff a
diagnostic was emitted. Output contains no timestamps, so identical
arguments and input files give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv as _csv
import json
import sys

from . import published
from .beams import PUBLISHED_TABLE
from .dataset import (
    RANK_FILES,
    RawTrialRecord,
    _open_fixture,
    load_csv,
    load_measurement_points,
    load_rank_points,
    to_fit_points,
)
from .fitting import fit_ci, fit_fi
from .pathloss import CiModel, FiModel, free_space_pl, friis_reference_pl, mean_pl, sample_pl
from .tr38901 import SCENARIOS, pl_3gpp_los, scenario_defaults

FORMATS = ("csv", "json", "markdown-table")
REPORT_COLUMNS = ("section", "param", "computed", "published", "abs_delta", "note")

# dispersion note shown wherever a mean-square residual meets a published value
_MSE_NOTE = "published dispersion values follow the mean-square (dB^2) convention"


def _full(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _human(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.2f}"
    return str(value)


def _emit(fmt: str, columns, rows, out=None) -> None:
    out = out or sys.stdout
    if fmt == "csv":
        writer = _csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_full(v) for v in row])
    elif fmt == "json":
        doc = [dict(zip(columns, row)) for row in rows]
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif fmt == "markdown-table":
        out.write("| " + " | ".join(columns) + " |\n")
        out.write("|" + "|".join(" --- " for _ in columns) + "|\n")
        for row in rows:
            out.write("| " + " | ".join(_human(v) for v in row) + " |\n")
    else:
        raise ValueError(f"unknown output format {fmt!r}")


def _load_points(args):
    if args.input:
        points = load_csv(args.input)
        if points and isinstance(points[0], RawTrialRecord):
            raise ValueError(
                "fit expects the aggregated schema (distance_m,height_m,rank,path_loss_db); "
                "aggregate raw trials first"
            )
    else:
        points = load_measurement_points()
    height = "all" if args.height == "all" else float(args.height)
    if args.rank == "all":
        rank = "all"
    elif args.rank.lower() in ("none", "best", ""):
        rank = None
    else:
        rank = int(args.rank)
    return to_fit_points(points, height=height, rank=rank)


def cmd_fit(args) -> None:
    points = _load_points(args)
    if args.model == "ci":
        report = fit_ci(points, args.freq_ghz)
        intercept = friis_reference_pl(args.freq_ghz)
    else:
        report = fit_fi(points)
        intercept = report.model.intercept_db
    columns = ("model", "points", "intercept_db", "ple", "sigma_db", "mse_db2")
    rows = [(args.model, report.point_count, intercept, report.model.ple,
             report.sigma_db, report.mse_db2)]
    _emit(args.format, columns, rows)


def _parse_distances(spec: str) -> list[float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"invalid --distances {spec!r}, expected START:STOP:STEP")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"invalid --distances {spec!r}: fields must be numbers") from None
    if step <= 0:
        raise ValueError(f"invalid --distances {spec!r}: STEP must be positive")
    if stop < start:
        raise ValueError(f"invalid --distances {spec!r}: STOP must be >= START")
    count = int((stop - start) / step + 1e-9)
    return [start + i * step for i in range(count + 1)]


def cmd_compare(args) -> None:
    distances = _parse_distances(args.distances)
    points = to_fit_points(load_csv(args.input) if args.input else load_measurement_points())
    ci = fit_ci(points, args.freq_ghz).model
    params = {name: scenario_defaults(name) for name in SCENARIOS}
    columns = ("distance_m", "ci_fit", "umi", "uma", "rma", "inoo", "fspl")
    rows = []
    for d in distances:
        rows.append((
            d,
            mean_pl(ci, d),
            pl_3gpp_los(params["umi"], args.freq_ghz, d),
            pl_3gpp_los(params["uma"], args.freq_ghz, d),
            pl_3gpp_los(params["rma"], args.freq_ghz, d),
            pl_3gpp_los(params["inoo"], args.freq_ghz, d),
            free_space_pl(args.freq_ghz, d),
        ))
    _emit(args.format, columns, rows)


def cmd_sample(args) -> None:
    if args.model == "ci":
        ple = published.TABLE1["ci"]["ple"] if args.ple is None else args.ple
        sigma = published.TABLE1["ci"]["sigma"] if args.sigma is None else args.sigma
        model = CiModel(args.freq_ghz, ple, sigma)
    else:
        intercept = published.TABLE1["fi"]["intercept_db"] if args.intercept is None else args.intercept
        ple = published.TABLE1["fi"]["ple"] if args.ple is None else args.ple
        sigma = published.TABLE1["fi"]["sigma"] if args.sigma is None else args.sigma
        model = FiModel(intercept, ple, sigma)
    for value in sample_pl(model, args.distance, args.n, args.seed):
        print(repr(float(value)))


def _delta(computed, reference):
    if computed is None or reference is None:
        return None
    return abs(computed - reference)


def _fit_rows(section, report, intercept, pub_intercept, pub_ple, pub_sigma, note=""):
    rows = [
        (section, "intercept_db", intercept, pub_intercept, _delta(intercept, pub_intercept), note),
        (section, "ple", report.model.ple, pub_ple, _delta(report.model.ple, pub_ple), note),
        (section, "mean_sq_resid_db2", report.mse_db2, pub_sigma,
         _delta(report.mse_db2, pub_sigma), _MSE_NOTE),
        (section, "sigma_db", report.sigma_db, None, None, "rms residual of this fit"),
    ]
    return rows


def _report_table1(args):
    points = to_fit_points(load_csv(args.input) if args.input else load_measurement_points())
    ci = fit_ci(points, args.freq_ghz)
    fi = fit_fi(points)
    rows = _fit_rows("ci", ci, friis_reference_pl(args.freq_ghz),
                     published.TABLE1["ci"]["intercept_db"], published.TABLE1["ci"]["ple"],
                     published.TABLE1["ci"]["sigma"])
    rows += _fit_rows("fi", fi, fi.model.intercept_db,
                      published.TABLE1["fi"]["intercept_db"], published.TABLE1["fi"]["ple"],
                      published.TABLE1["fi"]["sigma"])
    return rows


def _report_table2(args):
    points = load_csv(args.input) if args.input else load_measurement_points()
    rows = []
    mirror = "published h=6 / h=15 columns are mirrored relative to the bundled series"
    for key, label in (("all", "all"), (6.0, "h=6"), (12.0, "h=12"), (15.0, "h=15")):
        report = fit_ci(to_fit_points(points, height=key), args.freq_ghz)
        note = mirror if key in (6.0, 15.0) else ""
        tkey = "all" if key == "all" else key
        rows.append((label, "ple", report.model.ple, published.TABLE2_PLE[tkey],
                     _delta(report.model.ple, published.TABLE2_PLE[tkey]), note))
        rows.append((label, "mean_sq_resid_db2", report.mse_db2, published.TABLE2_SIGMA[tkey],
                     _delta(report.mse_db2, published.TABLE2_SIGMA[tkey]), _MSE_NOTE))
        rows.append((label, "sigma_db", report.sigma_db, None, None, "rms residual of this fit"))
    return rows


def _report_table3(args):
    missing = []
    for rank, name in RANK_FILES.items():
        try:
            with _open_fixture(name):
                pass
        except FileNotFoundError:
            missing.append(name)
    if missing:
        raise ValueError(f"missing rank fixtures: {', '.join(sorted(missing))}")

    best = to_fit_points(load_csv(args.input) if args.input else load_measurement_points())
    needs_beams = "requires beam-level data"
    rows = []
    for rank in range(1, 10):
        section = f"rank {rank}"
        if rank == 1:
            report = fit_ci(best, args.freq_ghz)
            intercept = friis_reference_pl(args.freq_ghz)
        elif rank in RANK_FILES:
            report = fit_fi(to_fit_points(load_rank_points(rank), rank=rank))
            intercept = report.model.intercept_db
        else:
            report = None
        if report is not None:
            rows.append((section, "ple", report.model.ple, published.TABLE3_PLE[rank],
                         _delta(report.model.ple, published.TABLE3_PLE[rank]), ""))
            rows.append((section, "intercept_db", intercept, published.TABLE3_INTERCEPT_DB[rank],
                         _delta(intercept, published.TABLE3_INTERCEPT_DB[rank]), ""))
            rows.append((section, "mean_sq_resid_db2", report.mse_db2, published.TABLE3_SIGMA[rank],
                         _delta(report.mse_db2, published.TABLE3_SIGMA[rank]), _MSE_NOTE))
        else:
            for param, pub in (("ple", published.TABLE3_PLE[rank]),
                               ("intercept_db", published.TABLE3_INTERCEPT_DB[rank]),
                               ("mean_sq_resid_db2", published.TABLE3_SIGMA[rank])):
                rows.append((section, param, None, pub, None, needs_beams))
        delta_pub = published.TABLE3_DELTA_DEG[rank]
        if rank == 1:
            rows.append((section, "delta_deg", 0.0, delta_pub, _delta(0.0, delta_pub),
                         "zero by definition for the best pair"))
        else:
            rows.append((section, "delta_deg", None, delta_pub, None, needs_beams))
    return rows


def _report_conclusion(args):
    points = to_fit_points(load_csv(args.input) if args.input else load_measurement_points())
    report = fit_ci(points, args.freq_ghz)
    intercept = friis_reference_pl(args.freq_ghz)
    slope = 10.0 * report.model.ple
    pub = published.CONCLUSION
    return [
        ("conclusion", "intercept_db", intercept, pub["intercept_db"],
         _delta(intercept, pub["intercept_db"]), ""),
        ("conclusion", "slope_db_per_decade", slope, pub["slope_db_per_decade"],
         _delta(slope, pub["slope_db_per_decade"]), ""),
        ("conclusion", "mean_sq_resid_db2", report.mse_db2, pub["sigma"],
         _delta(report.mse_db2, pub["sigma"]), _MSE_NOTE),
        ("conclusion", "sigma_db", report.sigma_db, None, None, "rms residual of this fit"),
    ]


def cmd_report(args) -> None:
    builders = {
        "table1": _report_table1,
        "table2": _report_table2,
        "table3": _report_table3,
        "conclusion": _report_conclusion,
    }
    rows = builders[args.which](args)
    if args.which == "conclusion" and args.format == "markdown-table":
        computed = next(r for r in rows if r[1] == "intercept_db")[2]
        slope = next(r for r in rows if r[1] == "slope_db_per_decade")[2]
        pub = published.CONCLUSION
        sys.stdout.write(
            f"PL(d) = {computed:.2f} + {slope:.2f} log10(d) dB "
            f"(published: {pub['intercept_db']} + {pub['slope_db_per_decade']} log10(d), "
            f"sigma {pub['sigma']})\n\n"
        )
    _emit(args.format, REPORT_COLUMNS, rows)


def _add_common_fit_flags(sub):
    sub.add_argument("--input", default=None, help="aggregated-schema CSV (default: bundled data)")
    sub.add_argument("--height", default="all", help='height filter in meters, or "all"')
    sub.add_argument("--rank", default="all", help='beam-pair rank filter, "none" for best pair, or "all"')
    sub.add_argument("--freq-ghz", type=float, default=published.CARRIER_FREQ_GHZ,
                     help="carrier frequency in GHz")
    sub.add_argument("--format", choices=FORMATS, default="csv")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="a2a60",
        description="60 GHz UAV-to-UAV path-loss toolkit",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    fit = subs.add_parser("fit", help="fit a path-loss law to aggregated measurements")
    fit.add_argument("--model", choices=("ci", "fi"), required=True)
    _add_common_fit_flags(fit)
    fit.set_defaults(func=cmd_fit)

    compare = subs.add_parser("compare", help="tabulate fitted, reference and free-space losses")
    compare.add_argument("--distances", default="6:40:2", help="distance grid START:STOP:STEP in meters")
    compare.add_argument("--input", default=None, help="aggregated-schema CSV (default: bundled data)")
    compare.add_argument("--freq-ghz", type=float, default=published.CARRIER_FREQ_GHZ)
    compare.add_argument("--format", choices=FORMATS, default="csv")
    compare.set_defaults(func=cmd_compare)

    sample = subs.add_parser("sample", help="draw shadowed path-loss values, one per line")
    sample.add_argument("--model", choices=("ci", "fi"), default="ci")
    sample.add_argument("--distance", type=float, required=True, help="distance in meters")
    sample.add_argument("--n", type=int, required=True, help="number of samples")
    sample.add_argument("--seed", type=int, default=0, help="generator seed")
    sample.add_argument("--freq-ghz", type=float, default=published.CARRIER_FREQ_GHZ)
    sample.add_argument("--ple", type=float, default=None,
                        help="path-loss exponent (default: published model)")
    sample.add_argument("--sigma", type=float, default=None,
                        help="shadowing sigma in dB (default: published model)")
    sample.add_argument("--intercept", type=float, default=None,
                        help="floating intercept in dB (fi model only)")
    sample.set_defaults(func=cmd_sample)

    report = subs.add_parser("report", help="regenerate a published table with deltas")
    report.add_argument("--which", choices=("table1", "table2", "table3", "conclusion"),
                        required=True)
    report.add_argument("--input", default=None,
                        help="best-beam aggregated CSV (default: bundled data)")
    report.add_argument("--freq-ghz", type=float, default=published.CARRIER_FREQ_GHZ)
    report.add_argument("--format", choices=FORMATS, default="csv")
    report.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
