"""Shared test configuration.

Two responsibilities: deterministic property-test settings, and an
opt-in manifest recorder. Running pytest with --manifest-out=PATH writes
a layer,name,duration_ms,status CSV describing the run, with the layer
taken from the tests/unit, tests/integration, tests/system directory the
test lives in. Tests outside those directories are not recorded.
"""

from __future__ import annotations

from pathlib import Path

from hypothesis import settings

from heatcg.testpyramid import Layer, TestRecord, TestStatus, render_manifest

settings.register_profile("deterministic", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("deterministic")

_LAYER_DIRS = {layer.value: layer for layer in Layer}


def pytest_addoption(parser):
    parser.addoption(
        "--manifest-out",
        action="store",
        default=None,
        help="write a layer,name,duration_ms,status manifest CSV for this run",
    )


def _layer_of(nodeid: str):
    path = nodeid.split("::", 1)[0]
    parts = path.split("/")
    for part in parts[:-1]:  # directory components only
        if part in _LAYER_DIRS:
            return _LAYER_DIRS[part]
    return None


def _prose_name(nodeid: str) -> str:
    name = nodeid.rsplit("::", 1)[-1]
    if name.startswith("test_"):
        name = name[len("test_"):]
    return name.replace("_", " ")


class _ManifestRecorder:
    def __init__(self, path: str) -> None:
        self.path = path
        self.records: list[TestRecord] = []

    def pytest_runtest_logreport(self, report) -> None:
        layer = _layer_of(report.nodeid)
        if layer is None:
            return
        status = None
        if report.when == "call":
            if hasattr(report, "wasxfail"):
                status = (
                    TestStatus.UNEXPECTED_PASS if report.passed else TestStatus.EXPECTED_FAIL
                )
            elif report.passed:
                status = TestStatus.OK
            elif report.failed:
                status = TestStatus.FAIL
            elif report.skipped:
                status = TestStatus.SKIPPED
        elif report.when == "setup":
            if report.skipped:
                status = TestStatus.SKIPPED
            elif report.failed:
                status = TestStatus.FAIL
        if status is None:
            return
        self.records.append(
            TestRecord(
                layer=layer,
                name=_prose_name(report.nodeid),
                duration_ms=report.duration * 1000.0,
                status=status,
            )
        )

    def pytest_sessionfinish(self, session, exitstatus) -> None:
        Path(self.path).write_text(render_manifest(self.records), encoding="utf-8")


def pytest_configure(config):
    path = config.getoption("--manifest-out")
    if path:
        config.pluginmanager.register(_ManifestRecorder(path), "manifest-recorder")
