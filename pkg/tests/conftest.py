import time
from contextlib import contextmanager

ACCEPTANCE: dict[str, tuple[bool, float, str]] = {}


@contextmanager
def criterion(name: str, detail: str = ""):
    """Record a pass/fail line for an acceptance criterion; failures still propagate."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        ACCEPTANCE[name] = (ok, time.perf_counter() - start, detail)
        print(f"{name}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - start:.2f}s) {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda n: int(n.split("-")[1])):
        ok, seconds, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s) {detail}")
