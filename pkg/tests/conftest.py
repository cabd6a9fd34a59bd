from __future__ import annotations


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, TITLES
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n} ({TITLES[n]}): {'PASS' if ok else 'FAIL'} - {detail}")
