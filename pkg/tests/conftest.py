import os
import random
import sys

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from schurkit import _backend, clear_caches  # noqa: E402
from schurkit.partitions import Partition  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

BACKENDS = ["python"] + (["cython"] if _backend.compiled_count_lr is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run a test once per LR kernel, with cold caches."""
    fn = _backend.python_count_lr if request.param == "python" else _backend.compiled_count_lr
    monkeypatch.setattr(_backend, "count_lr", fn)
    clear_caches()
    yield request.param
    clear_caches()


@pytest.fixture
def rng():
    return random.Random(20240611)


@st.composite
def partition_st(draw, max_size=8, min_size=0):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    parts = []
    left = n
    while left:
        x = draw(st.integers(min_value=1, max_value=min(left, parts[-1] if parts else left)))
        parts.append(x)
        left -= x
    return Partition(parts)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                lines.append((rep.nodeid.split("::")[-1], "PASS" if key == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {name}")
