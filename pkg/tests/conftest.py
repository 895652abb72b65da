import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from smoothquiver import Quiver, Stability

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

TWO_CYCLE_ARROWS = [("a", "b", "α"), ("b", "a", "β")]


@pytest.fixture
def two_cycle_quiver():
    return Quiver(["a", "b"], TWO_CYCLE_ARROWS)


@st.composite
def quivers(draw, max_vertices=3, max_arrows=4):
    k = draw(st.integers(1, max_vertices))
    arrows = draw(st.lists(st.tuples(st.integers(0, k - 1), st.integers(0, k - 1)), max_size=max_arrows))
    return Quiver([chr(ord("a") + i) for i in range(k)], arrows)


@st.composite
def instances(draw, max_entry=2, theta_zero=None, max_vertices=3, max_arrows=4):
    """(quiver, d, n, theta) with d, n non-zero."""
    q = draw(quivers(max_vertices, max_arrows))
    k = q.num_vertices
    vec = st.lists(st.integers(0, max_entry), min_size=k, max_size=k).filter(any).map(tuple)
    d, n = draw(vec), draw(vec)
    zero = draw(st.booleans()) if theta_zero is None else theta_zero
    if zero:
        theta = Stability.zero(k)
    else:
        theta = Stability(draw(st.lists(st.integers(-2, 2), min_size=k, max_size=k)))
    return q, d, n, theta


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
