"""Serialization helpers: dataclass reports to JSON and CSV."""

from __future__ import annotations

import csv
import dataclasses
import json
from typing import Any

import numpy as np


def _plain(value: Any) -> Any:
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {k: _plain(v) for k, v in dataclasses.asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def to_plain_dict(obj: Any) -> dict:
    """Dataclass (or dict) to a JSON-ready dict of plain Python types."""
    return _plain(obj)


def write_json(obj: Any, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(to_plain_dict(obj), fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_csv_rows(rows: list[dict], path: str) -> None:
    """Write homogeneous record dicts as CSV with a header row."""
    if not rows:
        with open(path, "w", newline="") as fh:
            fh.write("")
        return
    keys = list(rows[0].keys())
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=keys)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _plain(v) for k, v in row.items()})
