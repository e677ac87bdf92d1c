"""Measurement ingestion and the bundled fixture datasets.

Two canonical CSV schemas. Raw sounder trials:

    distance_m,height_m,tx_beam_idx,rx_beam_idx,trial_idx,path_loss_db

and aggregated per-point path loss (rank empty for best-beam data):

    distance_m,height_m,rank,path_loss_db

The bundled files under ``a2a60/data/`` are in aggregated form; they
transcribe the per-point markers and reference curves of the campaign's
published figures (see README for provenance). Set the ``A2A_DATA_DIR``
environment variable to load fixtures from another directory instead.
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import published
from .beams import BeamScanRecord
from .fitting import FitPoint

DATA_DIR_ENV = "A2A_DATA_DIR"

RAW_COLUMNS = ("distance_m", "height_m", "tx_beam_idx", "rx_beam_idx",
               "trial_idx", "path_loss_db")
AGGREGATED_COLUMNS = ("distance_m", "height_m", "rank", "path_loss_db")
CURVE_COLUMNS = ("curve", "distance_m", "path_loss_db")

MEASUREMENTS_FILE = "fig2_measurements.csv"
RANK_FILES = {2: "fig6_rank2.csv", 3: "fig6_rank3.csv", 9: "fig6_rank9.csv"}
REFERENCE_CURVES_FILE = "fig5_reference_curves.csv"


class CsvFormatError(ValueError):
    """Malformed measurement CSV; the message cites the row and column."""


class EmptySelectionError(ValueError):
    """A height/rank filter matched no points."""


@dataclass(frozen=True)
class RawTrialRecord:
    """One sounder trial for one beam pair at one measurement point."""

    distance_m: float
    height_m: float
    tx_beam_idx: int
    rx_beam_idx: int
    trial_idx: int
    path_loss_db: float


@dataclass(frozen=True)
class AggregatedPoint:
    """Trial-averaged path loss at one (distance, height); `rank` says which
    beam-pair rank the value belongs to, None meaning the best pair."""

    distance_m: float
    height_m: float
    path_loss_db: float
    rank: int | None = None


def _parse_float(raw, row_num, col, positive=False):
    try:
        value = float(raw)
    except ValueError:
        raise CsvFormatError(f"row {row_num}, column {col}: {raw!r} is not a number") from None
    if not math.isfinite(value):
        raise CsvFormatError(f"row {row_num}, column {col}: value must be finite")
    if positive and value <= 0:
        raise CsvFormatError(f"row {row_num}, column {col}: value must be positive, got {raw}")
    return value


def _parse_int(raw, row_num, col, lo, hi):
    try:
        value = int(raw)
    except ValueError:
        raise CsvFormatError(f"row {row_num}, column {col}: {raw!r} is not an integer") from None
    if not lo <= value <= hi:
        raise CsvFormatError(
            f"row {row_num}, column {col}: {value} outside the valid range [{lo}, {hi}]"
        )
    return value


def _rows(source):
    if hasattr(source, "read"):
        yield from csv.reader(source)
    else:
        with open(source, newline="", encoding="utf-8") as handle:
            yield from csv.reader(handle)


def load_csv(source) -> list[RawTrialRecord] | list[AggregatedPoint]:
    """Load a measurement CSV (path or open stream), dispatching on header."""
    reader = _rows(source)
    try:
        header = tuple(next(reader))
    except StopIteration:
        raise CsvFormatError("empty file: missing header row") from None
    if header == RAW_COLUMNS:
        return _load_raw(reader)
    if header == AGGREGATED_COLUMNS:
        return _load_aggregated(reader)
    missing_raw = set(RAW_COLUMNS) - set(header)
    missing_agg = set(AGGREGATED_COLUMNS) - set(header)
    missing = missing_agg if len(missing_agg) <= len(missing_raw) else missing_raw
    raise CsvFormatError(
        f"unrecognized header {list(header)}; missing columns: {sorted(missing)}"
    )


def _check_width(row, row_num, expected):
    if len(row) != len(expected):
        raise CsvFormatError(
            f"row {row_num}: expected {len(expected)} fields {list(expected)}, got {len(row)}"
        )


def _load_raw(reader) -> list[RawTrialRecord]:
    records = []
    for row_num, row in enumerate(reader, start=2):
        if not row:
            continue
        _check_width(row, row_num, RAW_COLUMNS)
        records.append(RawTrialRecord(
            distance_m=_parse_float(row[0], row_num, "distance_m", positive=True),
            height_m=_parse_float(row[1], row_num, "height_m", positive=True),
            tx_beam_idx=_parse_int(row[2], row_num, "tx_beam_idx", 0, 10**6),
            rx_beam_idx=_parse_int(row[3], row_num, "rx_beam_idx", 0, 10**6),
            trial_idx=_parse_int(row[4], row_num, "trial_idx", 0,
                                 published.TRIALS_PER_SCAN - 1),
            path_loss_db=_parse_float(row[5], row_num, "path_loss_db"),
        ))
    return records


def _load_aggregated(reader) -> list[AggregatedPoint]:
    points = []
    for row_num, row in enumerate(reader, start=2):
        if not row:
            continue
        _check_width(row, row_num, AGGREGATED_COLUMNS)
        rank = None if row[2].strip() == "" else _parse_int(row[2], row_num, "rank", 1, 10**6)
        points.append(AggregatedPoint(
            distance_m=_parse_float(row[0], row_num, "distance_m", positive=True),
            height_m=_parse_float(row[1], row_num, "height_m", positive=True),
            path_loss_db=_parse_float(row[3], row_num, "path_loss_db"),
            rank=rank,
        ))
    return points


def aggregate_trials(records: list[RawTrialRecord]) -> list[BeamScanRecord]:
    """Average trials per (distance, height, tx, rx) beam pair.

    Missing trials are tolerated; `trial_count` reports how many were
    averaged. Exact summation keeps the result independent of row order.
    """
    groups: dict = {}
    for r in records:
        key = (r.distance_m, r.height_m, r.tx_beam_idx, r.rx_beam_idx)
        groups.setdefault(key, []).append(r.path_loss_db)
    return [
        BeamScanRecord(*key, path_loss_db=math.fsum(vals) / len(vals), trial_count=len(vals))
        for key, vals in sorted(groups.items())
    ]


def to_fit_points(points: list[AggregatedPoint], height="all", rank="all") -> list[FitPoint]:
    """Project aggregated points to (distance, path loss) fit inputs.

    `height` is "all" or a height in meters; `rank` is "all", None (best
    pair) or a rank number. Raises EmptySelectionError if nothing matches.
    """
    selected = []
    for p in points:
        if height != "all" and p.height_m != float(height):
            continue
        if rank != "all" and p.rank != (None if rank is None else int(rank)):
            continue
        selected.append(FitPoint(p.distance_m, p.path_loss_db))
    if not selected:
        raise EmptySelectionError(f"empty selection: no points match height={height}, rank={rank}")
    return selected


def save_aggregated_csv(points: list[AggregatedPoint], dest) -> None:
    """Write aggregated points; repr precision makes a reload bit-identical."""

    def _write(handle):
        writer = csv.writer(handle)
        writer.writerow(AGGREGATED_COLUMNS)
        for p in points:
            writer.writerow([repr(p.distance_m), repr(p.height_m),
                             "" if p.rank is None else p.rank, repr(p.path_loss_db)])

    if hasattr(dest, "write"):
        _write(dest)
    else:
        with open(dest, "w", newline="", encoding="utf-8") as handle:
            _write(handle)


def fixture_path(name: str):
    """Locate a bundled fixture, honoring the A2A_DATA_DIR override."""
    root = os.environ.get(DATA_DIR_ENV)
    if root:
        return Path(root) / name
    return resources.files(__package__) / "data" / name


def _open_fixture(name: str):
    path = fixture_path(name)
    if isinstance(path, Path):
        return open(path, newline="", encoding="utf-8")
    return path.open("r", newline="", encoding="utf-8")


def load_measurement_points(name: str = MEASUREMENTS_FILE) -> list[AggregatedPoint]:
    """Best-beam aggregated points (27 bundled (distance, height) markers)."""
    with _open_fixture(name) as handle:
        return load_csv(handle)


def load_rank_points(rank: int) -> list[AggregatedPoint]:
    """Aggregated points for one beam-pair rank; only ranks 2, 3 and 9 ship
    with the toolkit (other ranks require beam-level data)."""
    if rank not in RANK_FILES:
        raise ValueError(
            f"no bundled fixture for rank {rank}; available: {sorted(RANK_FILES)} "
            "(other ranks require beam-level data)"
        )
    with _open_fixture(RANK_FILES[rank]) as handle:
        return load_csv(handle)


def load_reference_curves(name: str = REFERENCE_CURVES_FILE) -> dict[str, list[tuple[float, float]]]:
    """Bundled reference curves as {curve: [(distance_m, path_loss_db), ...]}."""
    curves: dict[str, list[tuple[float, float]]] = {}
    with _open_fixture(name) as handle:
        reader = csv.reader(handle)
        header = tuple(next(reader))
        if header != CURVE_COLUMNS:
            raise CsvFormatError(f"unrecognized header {list(header)}, expected {list(CURVE_COLUMNS)}")
        for row_num, row in enumerate(reader, start=2):
            if not row:
                continue
            _check_width(row, row_num, CURVE_COLUMNS)
            curves.setdefault(row[0], []).append((
                _parse_float(row[1], row_num, "distance_m", positive=True),
                _parse_float(row[2], row_num, "path_loss_db"),
            ))
    return curves
