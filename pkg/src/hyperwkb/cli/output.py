"""JSON-lines and CSV emission of CLI records."""

from __future__ import annotations

import csv
import json
from collections.abc import Sequence
from typing import Any, TextIO

from hyperwkb.cli.config import OutputFormat
from hyperwkb.cli.models import SCHEMA, Record, SeriesRecord, SuiteRecord
from hyperwkb.core.domain_errors import NumericDomainError


def _is_pair(value: Any) -> bool:
    return (
        isinstance(value, list | tuple)
        and len(value) == 2
        and all(isinstance(v, float | int) for v in value)
    )


def _flatten(data: dict[str, Any]) -> dict[str, Any]:
    """[re, im] pairs become key_re/key_im columns; other containers become JSON text."""
    row: dict[str, Any] = {}
    for key, value in data.items():
        if _is_pair(value):
            row[f"{key}_re"], row[f"{key}_im"] = value
        elif isinstance(value, dict | list | tuple):
            row[key] = json.dumps(value)
        else:
            row[key] = value
    return row


def csv_rows(record: Record) -> list[dict[str, Any]]:
    if isinstance(record, SuiteRecord):
        head = {"command": record.command, "suite": record.suite, "seed": record.seed}
        return [{**head, **row.model_dump(exclude={"suite"})} for row in record.checks]
    if isinstance(record, SeriesRecord):
        exact = record.exact or [None] * len(record.coefficients)
        return [
            {
                "command": record.command,
                "params": record.params,
                "variable": record.variable,
                "leading_exponent": record.leading_exponent,
                "n": n,
                "coefficient_re": c[0],
                "coefficient_im": c[1],
                "exact": e,
            }
            for n, (c, e) in enumerate(zip(record.coefficients, exact, strict=True))
        ]
    return [_flatten(record.model_dump(mode="json"))]


def write_records(records: Sequence[Record], fmt: OutputFormat, stream: TextIO) -> None:
    if fmt == "json":
        for record in records:
            payload = {"schema": SCHEMA, **record.model_dump(mode="json")}
            stream.write(json.dumps(payload) + "\n")
        return
    rows = [row for record in records for row in csv_rows(record)]
    fields: dict[str, None] = {}
    for row in rows:
        fields.update(dict.fromkeys(row))
    writer = csv.DictWriter(stream, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def write_error(command: str, error: NumericDomainError, stream: TextIO) -> None:
    """The structured error object, always as one JSON line."""
    payload = {"schema": SCHEMA, "command": command, "error": error.model_dump(mode="json")}
    stream.write(json.dumps(payload) + "\n")
