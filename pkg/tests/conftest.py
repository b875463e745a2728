from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_acceptance: dict[str, list[tuple[str, str, float]]] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _acceptance.setdefault(str(marker.args[0]), []).append((item.name, outcome, call.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_acceptance, key=int):
        runs = _acceptance[crit]
        status = "PASS" if all(o == "PASS" for _, o, _ in runs) else "FAIL"
        names = ", ".join(name for name, _, _ in runs)
        secs = sum(d for _, _, d in runs)
        terminalreporter.write_line(f"criterion {crit}: {status}  {secs:.2f}s  ({names})")
