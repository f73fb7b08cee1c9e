import pytest

CRITERIA = {
    1: "Kostant multiplicities agree with semistandard tableau counts",
    2: "Weyl dimension equals the sum of weight multiplicities",
    3: "tensor character identity for L(lam) x L(a13)",
    4: "good pair <=> C(alpha)^+",
    5: "Y-isomorphism dimensions and partition-difference table",
    6: "socle cross-check",
    7: "eigenspace-support lemmas and c-bound completeness",
    8: "H^1 dimension is 8f",
    9: "verdict engine: duality, X0 gate, scan determinism",
}

_results: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _results.setdefault(marker.args[0], []).append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(CRITERIA):
        runs = _results.get(n)
        if not runs:
            continue
        ok = all(o == "passed" for _, o in runs)
        failed = [name for name, o in runs if o != "passed"]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {CRITERIA[n]}  ({len(runs)} checks)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        tr.write_line(line)
