import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from lsclique.stream import Link, StreamConfig, normalize, stream_from_tuples

# a-b-c triangle present only over [3, 5]
L_STAR = [(1, 5, "a", "c"), (3, 5, "b", "c"), (3, 7, "a", "b")]
# triangle a-b-c over [2, 4] plus a long c-d link
L1 = [(2, 4, "a", "b"), (2, 4, "a", "c"), (1, 5, "b", "c"), (1, 11, "c", "d")]
# complete graph on a..d at t=5 where {a,c} and {b,d} start at 5
K4_LATE = [
    (0, 10, "a", "b"),
    (0, 10, "a", "d"),
    (0, 10, "b", "c"),
    (0, 10, "c", "d"),
    (5, 10, "a", "c"),
    (5, 10, "b", "d"),
]
TRIANGLE = [(0, 10, "a", "b"), (0, 10, "a", "c"), (0, 10, "b", "c")]


def complete_stream(q, b=0, e=10):
    names = [f"v{i:02d}" for i in range(q)]
    return stream_from_tuples([(b, e, u, v) for u, v in combinations(names, 2)])


def random_stream(seed, n_max=10, m_max=60, t_max=30, delta_max=5):
    """Instantaneous contacts expanded by a random duration, then merged."""
    rng = random.Random(seed)
    n = rng.randint(2, n_max)
    m = rng.randint(1, m_max)
    delta = rng.randint(0, delta_max)
    raw = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        t = rng.randint(0, t_max)
        raw.append(Link(t, t + delta, min(u, v), max(u, v)))
    return normalize(raw)


def distinct_end_stream(seed):
    """Random stream rescaled so that every link ends at a different time."""
    base = random_stream(seed)
    scale = base.m + 2
    order = sorted(range(base.m), key=lambda i: (base.links[i].end, i))
    bump = {i: rank + 1 for rank, i in enumerate(order)}
    raw = [
        Link(b * scale, e * scale + bump[i], u, v) for i, (b, e, u, v) in enumerate(base.links)
    ]
    return normalize(raw, base.vertices)


@st.composite
def interval_streams(draw, n_max=8, m_max=25, t_max=20):
    n = draw(st.integers(2, n_max))
    links = draw(
        st.lists(
            st.tuples(
                st.integers(0, t_max),
                st.integers(0, 6),
                st.integers(0, n - 1),
                st.integers(0, n - 1),
            ).filter(lambda x: x[2] != x[3]),
            min_size=1,
            max_size=m_max,
        )
    )
    raw = [Link(b, b + d, min(u, v), max(u, v)) for b, d, u, v in links]
    return normalize(raw)


@pytest.fixture
def l_star():
    return stream_from_tuples(L_STAR)


@pytest.fixture
def l1():
    return stream_from_tuples(L1)


@pytest.fixture
def k4_late():
    return stream_from_tuples(K4_LATE)


@pytest.fixture
def interval_config():
    return StreamConfig("interval")


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


_SEVERITY = {"skipped": 0, "passed": 1, "failed": 2}


def pytest_runtest_logreport(report):
    key = getattr(report, "criterion", None)
    if key is None or (report.when != "call" and report.outcome == "passed"):
        return
    # a criterion reports its worst sub-test outcome
    if _SEVERITY[report.outcome] >= _SEVERITY[_CRITERIA.get(key, "skipped")]:
        _CRITERIA[key] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_CRITERIA.items()):
        label = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[outcome]
        terminalreporter.write_line(f"criterion {number}: {label}  {title}")
