import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from phigraph.generators import GenSpec, random_gnp, random_k_degenerate, random_tree  # noqa: E402


@pytest.fixture(scope="session")
def small_corpus():
    """Mixed small graphs (n <= 10) for oracle comparisons."""
    graphs = []
    for seed in range(40):
        n = 2 + seed % 9
        graphs.append(random_gnp(n, 0.2 + 0.6 * ((seed * 7) % 10) / 10, seed))
    for seed in range(20):
        graphs.append(random_tree(1 + seed % 10, seed))
        graphs.append(random_k_degenerate(GenSpec(3 + seed % 8, 1 + seed % 3, 0.8, seed)))
    return graphs


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    outcomes = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if status == "passed" and rep.when != "call":
                continue
            number = int(nodeid.rsplit("_", 1)[1])
            outcomes[number] = "PASS" if status == "passed" else "FAIL"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes):
        terminalreporter.write_line(f"criterion {number}: {outcomes[number]}  {CRITERIA[number]}")
