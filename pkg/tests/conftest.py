_OUTCOMES: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion reported in the summary")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when not in ("setup", "call"):
        return
    number, title = marker.args
    failed = call.excinfo is not None
    prev = _OUTCOMES.get(number, (title, True))
    if call.when == "call" or failed:
        _OUTCOMES[number] = (title, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        title, ok = _OUTCOMES[number]
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  {number:2d}. {title}")
    n_ok = sum(ok for _, ok in _OUTCOMES.values())
    tr.write_line(f"{n_ok}/{len(_OUTCOMES)} criteria met")
