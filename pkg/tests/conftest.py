from __future__ import annotations

import pytest

from cycdec import solver


@pytest.fixture(scope="session", autouse=True)
def warm_solver():
    # compile the accelerated kernel once so timed tests measure search, not JIT
    solver.warm_up()
