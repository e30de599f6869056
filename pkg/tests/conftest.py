import random

import pytest

from capdom import Assignment, Instance
from capdom.io import generate, grid_edges


def grid_instance(rows, cols, d=1, c=1):
    n = rows * cols
    return Instance.build(n, grid_edges(rows, cols), [d] * n, [c] * n)


def path_instance(d, c):
    n = len(d)
    return Instance.build(n, [(i, i + 1) for i in range(n - 1)], d, c)


SMALL_FAMILIES = [
    ("grid", dict(rows=2, cols=2)),
    ("grid", dict(rows=2, cols=3)),
    ("grid", dict(rows=2, cols=4)),
    ("path", dict(n=5)),
    ("path", dict(n=8)),
    ("star", dict(n=4)),
    ("star", dict(n=7)),
    ("trigrid", dict(rows=2, cols=3)),
    ("trigrid", dict(rows=2, cols=4)),
]


def small_instances(count, seed0=0, dmax=2, cmax=2):
    out = []
    for idx in range(count):
        fam, kw = SMALL_FAMILIES[idx % len(SMALL_FAMILIES)]
        out.append(generate(fam, dmax=dmax, cmax=cmax, seed=seed0 + idx, **kw))
    return out


def random_proper_assignment(inst, rng: random.Random, tries=30):
    """Random proper assignment that respects every client's demand."""
    pairs = {}
    out = [0] * inst.n
    inc = [0] * inst.n
    for _ in range(tries):
        u = rng.randrange(inst.n)
        v = rng.choice(inst.graph.closed_neighborhood(u))
        if out[u] < inst.c[u] and inc[v] < inst.d[v]:
            pairs[(u, v)] = pairs.get((u, v), 0) + 1
            out[u] += 1
            inc[v] += 1
    return Assignment(pairs)


@pytest.fixture
def grid3():
    return grid_instance(3, 3)


# --- acceptance reporting ---------------------------------------------------

_ACCEPTANCE_LINES: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    label = marker.args[0]
    detail = getattr(item, "criterion_detail", "")
    status = "PASS" if report.passed else "FAIL"
    _ACCEPTANCE_LINES[label] = f"{status}  {label}" + (f"  [{detail}]" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(_ACCEPTANCE_LINES[label])


@pytest.fixture
def detail(request):
    def record(text):
        request.node.criterion_detail = text

    return record
