from __future__ import annotations

import io
import re
from pathlib import Path

import pytest

from ihg import cli, textio
from ihg.model import ImplicationHypergraph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name: str) -> ImplicationHypergraph:
    text = (FIXTURES / name).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return textio.to_hypergraph(textio.parse_json(text))
    return textio.to_hypergraph(textio.parse_dsl(text, source=name))


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def small_dag() -> ImplicationHypergraph:
    return load_fixture("small_dag.ihg")


@pytest.fixture(scope="session")
def singular_cycle() -> ImplicationHypergraph:
    return load_fixture("singular_cycle.ihg")


@pytest.fixture(scope="session")
def solvable_cycle() -> ImplicationHypergraph:
    return load_fixture("solvable_cycle.ihg")


@pytest.fixture(scope="session")
def analysis() -> ImplicationHypergraph:
    return load_fixture("analysis_coeffs.ihg")


@pytest.fixture(scope="session")
def optimization() -> ImplicationHypergraph:
    return load_fixture("optimization_coeffs.ihg")


@pytest.fixture()
def run_cli():
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""

    def runner(*argv: str, stdin_text: str = "") -> tuple[int, str, str]:
        out, err = io.StringIO(), io.StringIO()
        code = cli.run(
            [str(a) for a in argv],
            stdin=io.StringIO(stdin_text),
            stdout=out,
            stderr=err,
        )
        return code, out.getvalue(), err.getvalue()

    return runner


_CRITERION = re.compile(r"test_criterion_(\d{2})_([a-z0-9_]+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion after the run."""
    results: dict[int, tuple[str, str]] = {}
    for outcome, verdict in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(outcome, ()):
            match = _CRITERION.search(getattr(report, "nodeid", "") or "")
            if match:
                number = int(match.group(1))
                if verdict == "FAIL" or number not in results:
                    results[number] = (match.group(2), verdict)
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(results):
        name, verdict = results[number]
        terminalreporter.write_line(f"criterion {number:02d} ({name}): {verdict}")
