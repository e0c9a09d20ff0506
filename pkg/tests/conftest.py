from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from facering.complex import from_facets  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def complexes(draw, n_min: int = 1, n_max: int = 6, max_facets: int = 8):
    """Arbitrary complexes on ``[n]``: random facets plus singletons for uncovered vertices."""
    n = draw(st.integers(n_min, n_max))
    faces = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=n),
                          min_size=1, max_size=max_facets))
    covered = set().union(*faces)
    facets = [tuple(sorted(f)) for f in faces] + [(v,) for v in range(n) if v not in covered]
    return from_facets(n, facets)


@pytest.fixture(scope="session")
def big_sweep():
    from facering.sweep import run_sweep
    return run_sweep(seed=1, count=500, n_range=(3, 8), dim_range=(0, 4), include_generators=True)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: (int("".join(c for c in k if c.isdigit())), k)):
        status, title, detail = results[key]
        line = f"criterion {key:>3}: {status:<7} {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
