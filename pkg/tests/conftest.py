import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# filled by test_acceptance.py; one line per criterion is printed at the end
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        status, text = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key:>2}: {status}  {text}")
