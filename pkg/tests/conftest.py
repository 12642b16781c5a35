import pytest

_criteria = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "parts": []})
    ok = call.excinfo is None
    entry["ok"] &= ok
    entry["parts"].append((item.name, ok))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        tr.write_line(f"criterion {number:>2}: {'PASS' if entry['ok'] else 'FAIL'}  {entry['title']}")
        if len(entry["parts"]) > 1:
            for name, ok in entry["parts"]:
                tr.write_line(f"    {'pass' if ok else 'fail'}  {name}")
