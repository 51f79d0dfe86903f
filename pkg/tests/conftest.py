from __future__ import annotations

import pytest

CRITERIA = {
    1: "counterexample 1 (split, l=7 f=2 e=6) reproduced, < 1 s",
    2: "counterexample 2 (irreducible, l=7 f=2 e=6) reproduced, < 5 s",
    3: "e >= l: Sch = det set on every semisimple rep, < 2 min",
    4: "constructive solvers: 1000/1000 witnesses verify, < 1 min",
    5: "adequacy table rows match exactly, < 10 min",
    6: "H^1 propagation = brute force on the battery, < 2 min",
    7: "property suites",
    8: "verify-paper exits 0, < 15 min",
}

_outcomes: dict[int, list[tuple[str, str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes.setdefault(mark.args[0], []).append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, text in CRITERIA.items():
        runs = _outcomes.get(n)
        if not runs:
            tr.write_line(f"criterion {n}: NOT RUN  {text}")
            continue
        bad = [name for name, o in runs if o != "passed"]
        status = "PASS" if not bad else "FAIL"
        extra = f"  (failed: {', '.join(bad)})" if bad else ""
        tr.write_line(f"criterion {n}: {status}  {text}{extra}")
