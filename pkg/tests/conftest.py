import pytest

from betapath import generators as gen

_acceptance: dict[int, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or report.failed:
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        status = "PASS" if report.passed else "FAIL"
        _acceptance[marker.args[0]] = (doc, status, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        doc, status, dur = _acceptance[n]
        terminalreporter.write_line(f"AC{n:>2} {status}  {doc}  ({dur:.2f} s)")


@pytest.fixture
def pasch():
    return gen.pasch()


@pytest.fixture
def triangle():
    return gen.triangle2()


@pytest.fixture
def lpath():
    return gen.loose_path(3, 3)


@pytest.fixture
def closing_h():
    """e1={v,u,x1}, e2={u,w,x2}, f={v,w,x3}."""
    from betapath import Hypergraph

    return Hypergraph.from_edges(
        [["v", "u", "x1"], ["u", "w", "x2"], ["v", "w", "x3"]], ["e1", "e2", "f"]
    )


def named_instances(max_edges=None):
    """Every named family at a few sizes, keyed by a readable tag."""
    out = {
        "pasch": gen.pasch(),
        "triangle2": gen.triangle2(),
        "fig1": gen.fig1(),
        "single_edge3": gen.single_edge(3),
        "single_edge2": gen.single_edge(2),
    }
    for k in (2, 3, 4):
        for m in (1, 2, 3, 5):
            out[f"loose_path_{k}_{m}"] = gen.loose_path(k, m)
        for p in (1, 2, 3, 4):
            out[f"sunflower_{k}_{p}"] = gen.sunflower(k, p)
    if max_edges is not None:
        out = {key: H for key, H in out.items() if H.num_edges <= max_edges}
    return out
