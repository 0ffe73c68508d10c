import itertools
import sys

import pytest

from benford_gengamma import GenGammaParams

# a in {1, 2, 10}, d and p in {0.5, 1, 2}
FULL_GRID = [GenGammaParams(a, d, p, 10)
             for a, d, p in itertools.product((1, 2, 10), (0.5, 1, 2), (0.5, 1, 2))]

# nine triples mixing small and large shapes and powers
NINE_TRIPLES = [
    GenGammaParams(1, 0.5, 0.5),
    GenGammaParams(2, 1, 0.5),
    GenGammaParams(1, 0.5, 1),
    GenGammaParams(10, 0.5, 0.5),
    GenGammaParams(1, 1, 1),
    GenGammaParams(3, 2, 1),
    GenGammaParams(1, 2, 2),
    GenGammaParams(0.5, 0.3, 0.7),
    GenGammaParams(5, 1.5, 0.25),
]


@pytest.fixture(params=NINE_TRIPLES, ids=lambda p: f"a{p.a:g}-d{p.d:g}-p{p.p:g}")
def triple(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    # repeat the acceptance lines so they show without -s
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
