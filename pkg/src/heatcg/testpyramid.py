"""Test-run manifest parsing and pyramid-shape auditing.

A manifest is a UTF-8 CSV file with LF line endings and the header
``layer,name,duration_ms,status``. Layers are unit, integration, system;
statuses are ok, fail, expected_fail, unexpected_pass, skipped, timeout.
Names containing commas are double-quoted by the writer.

A suite has pyramid shape when it contains at least as many unit tests as
integration tests and at least as many integration tests as system tests
(non-strict ordering). Unit tests are additionally held to a duration
budget, 100 ms by default.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Layer",
    "TestStatus",
    "TestRecord",
    "PyramidReport",
    "ManifestError",
    "MANIFEST_HEADER",
    "DEFAULT_UNIT_BUDGET_MS",
    "parse_manifest",
    "render_manifest",
    "pyramid_report",
    "render_report",
]

MANIFEST_HEADER = ("layer", "name", "duration_ms", "status")
DEFAULT_UNIT_BUDGET_MS = 100.0


class Layer(Enum):
    UNIT = "unit"
    INTEGRATION = "integration"
    SYSTEM = "system"


class TestStatus(Enum):
    # not a test case; the attribute stops pytest from trying to collect it
    __test__ = False

    OK = "ok"
    FAIL = "fail"
    EXPECTED_FAIL = "expected_fail"
    UNEXPECTED_PASS = "unexpected_pass"
    SKIPPED = "skipped"
    TIMEOUT = "timeout"


# Fixed rendering order and labels for the status summary block.
_STATUS_LABELS = (
    (TestStatus.OK, "Ok"),
    (TestStatus.EXPECTED_FAIL, "Expected Fail"),
    (TestStatus.FAIL, "Fail"),
    (TestStatus.UNEXPECTED_PASS, "Unexpected Pass"),
    (TestStatus.SKIPPED, "Skipped"),
    (TestStatus.TIMEOUT, "Timeout"),
)

_LAYER_BY_VALUE = {layer.value: layer for layer in Layer}
_STATUS_BY_VALUE = {status.value: status for status in TestStatus}


class ManifestError(ValueError):
    """Malformed manifest text; the message names the offending line."""


@dataclass(frozen=True)
class TestRecord:
    """One test's layer, human-readable name, duration, and outcome."""

    # not a test case; the attribute stops pytest from trying to collect it
    __test__ = False

    layer: Layer
    name: str
    duration_ms: float
    status: TestStatus

    def __post_init__(self) -> None:
        if not isinstance(self.layer, Layer):
            raise TypeError(f"layer must be a Layer, got {type(self.layer).__name__}")
        if not isinstance(self.status, TestStatus):
            raise TypeError(
                f"status must be a TestStatus, got {type(self.status).__name__}"
            )
        if not isinstance(self.name, str):
            raise TypeError(f"name must be a string, got {type(self.name).__name__}")
        if not self.name:
            raise ValueError("name must be non-empty")
        if "\n" in self.name or "\r" in self.name:
            raise ValueError(f"name must not contain line breaks: {self.name!r}")
        duration = self.duration_ms
        if isinstance(duration, bool) or not isinstance(duration, (int, float)):
            raise TypeError(
                f"duration_ms must be a real number, got {type(duration).__name__}"
            )
        duration = float(duration)
        if not math.isfinite(duration) or duration < 0:
            raise ValueError(f"duration_ms must be finite and >= 0, got {duration!r}")
        object.__setattr__(self, "duration_ms", duration)


@dataclass(frozen=True)
class PyramidReport:
    """Aggregate counts plus the shape verdict and unit-budget offenders."""

    layer_counts: Mapping[Layer, int]
    status_counts: Mapping[TestStatus, int]
    pyramid_ok: bool
    slow_unit_tests: tuple[str, ...]


def parse_manifest(text: str) -> list[TestRecord]:
    """Parse manifest text into records, in file order.

    Raises ManifestError naming the line for a missing or wrong header,
    a wrong field count, an unknown layer or status, or a bad duration.
    """
    if not isinstance(text, str):
        raise TypeError(f"manifest text must be a string, got {type(text).__name__}")
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ManifestError("line 1: missing header 'layer,name,duration_ms,status'")
    if tuple(header) != MANIFEST_HEADER:
        raise ManifestError(
            f"line 1: expected header 'layer,name,duration_ms,status', got {header!r}"
        )
    records: list[TestRecord] = []
    for row in reader:
        line = reader.line_num
        if len(row) != 4:
            raise ManifestError(f"line {line}: expected 4 fields, got {len(row)}")
        layer_text, name, duration_text, status_text = row
        layer = _LAYER_BY_VALUE.get(layer_text)
        if layer is None:
            raise ManifestError(f"line {line}: unknown layer {layer_text!r}")
        status = _STATUS_BY_VALUE.get(status_text)
        if status is None:
            raise ManifestError(f"line {line}: unknown status {status_text!r}")
        try:
            duration = float(duration_text)
        except ValueError:
            raise ManifestError(
                f"line {line}: duration_ms must be a number, got {duration_text!r}"
            ) from None
        try:
            records.append(
                TestRecord(layer=layer, name=name, duration_ms=duration, status=status)
            )
        except ValueError as exc:
            raise ManifestError(f"line {line}: {exc}") from None
    return records


def render_manifest(records: Iterable[TestRecord]) -> str:
    """Serialize records back to manifest text; inverse of parse_manifest."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(MANIFEST_HEADER)
    for record in records:
        writer.writerow(
            [
                record.layer.value,
                record.name,
                repr(record.duration_ms),
                record.status.value,
            ]
        )
    return out.getvalue()


def pyramid_report(
    records: Sequence[TestRecord],
    unit_budget_ms: float = DEFAULT_UNIT_BUDGET_MS,
) -> PyramidReport:
    """Aggregate counts and audit the shape and the unit duration budget."""
    if isinstance(unit_budget_ms, bool) or not isinstance(unit_budget_ms, (int, float)):
        raise TypeError(
            f"unit_budget_ms must be a real number, got {type(unit_budget_ms).__name__}"
        )
    if not math.isfinite(unit_budget_ms) or unit_budget_ms <= 0:
        raise ValueError(
            f"unit_budget_ms must be a finite positive real, got {unit_budget_ms!r}"
        )
    layer_counts = {layer: 0 for layer in Layer}
    status_counts = {status: 0 for status in TestStatus}
    slow: list[str] = []
    for record in records:
        if not isinstance(record, TestRecord):
            raise TypeError(f"records must be TestRecord values, got {type(record).__name__}")
        layer_counts[record.layer] += 1
        status_counts[record.status] += 1
        if record.layer is Layer.UNIT and record.duration_ms > unit_budget_ms:
            slow.append(record.name)
    pyramid_ok = (
        layer_counts[Layer.UNIT] >= layer_counts[Layer.INTEGRATION]
        and layer_counts[Layer.INTEGRATION] >= layer_counts[Layer.SYSTEM]
    )
    return PyramidReport(
        layer_counts=layer_counts,
        status_counts=status_counts,
        pyramid_ok=pyramid_ok,
        slow_unit_tests=tuple(slow),
    )


def render_report(report: PyramidReport) -> str:
    """Deterministic text summary: status counts, layer counts, verdict."""
    lines = [
        f"{label}: {report.status_counts[status]}"
        for status, label in _STATUS_LABELS
    ]
    lines.extend(f"{layer.value}: {report.layer_counts[layer]}" for layer in Layer)
    lines.extend(f"slow unit test: {name}" for name in report.slow_unit_tests)
    lines.append(f"pyramid: {'OK' if report.pyramid_ok else 'VIOLATED'}")
    return "\n".join(lines) + "\n"
