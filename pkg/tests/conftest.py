"""Shared reporting for the acceptance suite.

Each acceptance test records its verdict here; the terminal summary then
prints one line per criterion, visible regardless of pytest's capture
settings.  Criteria recorded from several tests merge: any failing part
makes the whole criterion report FAIL.
"""

ACCEPTANCE = {}


def record_acceptance(num: int, title: str, ok: bool, detail: str = ""):
    entry = ACCEPTANCE.setdefault(num, {"title": title, "oks": [], "details": []})
    entry["oks"].append(ok)
    if detail:
        entry["details"].append(detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        entry = ACCEPTANCE[num]
        tag = "PASS" if all(entry["oks"]) else "FAIL"
        line = f"[{tag}] criterion {num}: {entry['title']}"
        details = "; ".join(entry["details"])
        if details:
            line += f" -- {details}"
        terminalreporter.write_line(line)
