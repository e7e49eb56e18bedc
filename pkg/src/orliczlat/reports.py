"""Deterministic report tables for the CLI.

Identical (config, seed) must produce byte-identical output, so nothing
time- or address-dependent ever enters a table: rows are emitted in a
deterministic order, the config hash is over the canonical JSON encoding,
and floats print as shortest round-trip decimals in JSON (up to 17
significant digits) and as %.9g in CSV.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from dataclasses import dataclass, field
from typing import Mapping

from .errors import InvalidInputError

__all__ = ["ReportTable", "config_hash", "format_cell", "canonical_json"]


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=True)


def config_hash(config: Mapping) -> str:
    return hashlib.sha256(canonical_json(config).encode("utf-8")).hexdigest()[:16]


def format_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        if math.isnan(v):
            return "nan"
        return "%.9g" % v
    return str(v)


@dataclass(frozen=True)
class ReportTable:
    columns: list[str]
    rows: list[dict] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for row in self.rows:
            missing = [c for c in self.columns if c not in row]
            if missing:
                raise InvalidInputError(f"row missing columns {missing}: {row!r}")

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_cell(row[c]) for c in self.columns])
        return buf.getvalue()

    def to_json(self) -> str:
        payload = {
            "metadata": dict(sorted(self.metadata.items())),
            "columns": self.columns,
            "rows": [{c: row[c] for c in self.columns} for row in self.rows],
        }
        return json.dumps(payload, indent=2, sort_keys=False, allow_nan=True) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise InvalidInputError(f"unknown format {fmt!r}")


def make_metadata(command: str, config: Mapping, seed: int, version: str) -> dict:
    return {
        "command": command,
        "config_hash": config_hash(config),
        "seed": seed,
        "version": version,
    }
